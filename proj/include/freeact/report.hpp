#ifndef FREEACT_REPORT_HPP
#define FREEACT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "freeact/rational.hpp"

namespace freeact {

struct SampleCounts {
  int disjointness = 10000;
  int invariance = 300;
  int gluing_numeric = 100;
};

struct Config {
  Rational epsilon = make_rational(49, 625);
  int k_min = 3;
  int k_max = 5;
  std::vector<long> primes = {3, 5, 7, 11, 13};
  SampleCounts samples;
  uint64_t seed = 1729;
  bool timings = false;

  // Throws PreconditionError on invalid settings.
  void validate() const;
};

struct CheckRecord {
  std::string id;
  std::string claim;   // the mathematical statement being certified
  std::string status;  // "certified" | "failed" | "skipped"
  std::string witness;
  uint64_t time_ns = 0;  // emitted only when Config::timings is set
};

struct Report {
  std::string suite;
  Config config;
  std::vector<CheckRecord> checks;

  bool certified() const;
  size_t failed_count() const;
  // Stable output order, independent of completion order.
  void sort_by_id();
};

// Deterministic JSON: fixed key order, exact rationals as strings, no
// timing fields unless configured. Identical config => identical bytes.
std::string report_to_json(const Report& report);
std::string report_to_markdown(const Report& report);
Report report_from_json(const std::string& text);

// format is "json" or "markdown"; path empty writes to stdout.
void emit_report(const Report& report, const std::string& format, const std::string& path);

}  // namespace freeact

#endif
