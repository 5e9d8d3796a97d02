#ifndef FREEACT_CHECK_HPP
#define FREEACT_CHECK_HPP

#include <string>

namespace freeact {

// Outcome of one verification step. Failure is data; callers decide
// whether it aborts a suite.
struct CheckOutcome {
  bool certified = false;
  std::string witness;  // margin, census listing, residual, counterexample
};

}  // namespace freeact

#endif
