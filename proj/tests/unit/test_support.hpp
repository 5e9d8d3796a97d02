#ifndef FREEACT_TEST_SUPPORT_HPP
#define FREEACT_TEST_SUPPORT_HPP

#include <random>

#include "freeact/cyclo.hpp"

namespace freeact::testing {

// Deterministic random cyclotomic values for property tests. Orders stay
// small so lcm coercions do not blow up the basis.
class CycloGen {
 public:
  explicit CycloGen(uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_num = 9, long max_den = 9) {
    long num = integer(-max_num, max_num);
    long den = integer(1, max_den);
    return make_rational(num, den);
  }

  Cyclo value(long max_num = 9, long max_den = 9) {
    static const unsigned orders[] = {1, 3, 4, 9, 12};
    unsigned n = orders[rng_() % 5];
    Cyclo acc;
    for (unsigned k = 0; k < n; ++k) {
      if (rng_() % 2 == 0) continue;
      acc += Cyclo(rational(max_num, max_den)) * Cyclo::root_of_unity(n, static_cast<long>(k));
    }
    return acc;
  }

  Cyclo nonzero(long max_num = 9, long max_den = 9) {
    for (;;) {
      Cyclo x = value(max_num, max_den);
      if (!x.is_zero()) return x;
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace freeact::testing

#endif
