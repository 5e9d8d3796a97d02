#ifndef FREEACT_SUITES_HPP
#define FREEACT_SUITES_HPP

#include "freeact/report.hpp"

namespace freeact {

// Named verification suites. "all" concatenates the five module suites
// (negative-controls stays separate so a certification run contains only
// genuine claims); "theorem-a" sequences the main free-action claims:
// disjointness, invariance, freeness, gluing.
Report run_suite(const std::string& name, const Config& config);

std::vector<std::string> suite_names();

}  // namespace freeact

#endif
