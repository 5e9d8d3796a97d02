#ifndef FREEACT_SAMPLING_HPP
#define FREEACT_SAMPLING_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace freeact {

// Deterministic sampler. Draws are derived from raw mt19937_64 output, not
// standard-library distributions, so identical seeds give identical
// streams everywhere.
class DetRng {
 public:
  explicit DetRng(uint64_t seed) : rng_(seed) {}

  uint64_t raw() { return rng_(); }

  double uniform() { return std::ldexp(static_cast<double>(rng_() >> 11), -53); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::complex<double> unit_phase() {
    double t = uniform(0.0, 2.0 * M_PI);
    return {std::cos(t), std::sin(t)};
  }

  // Uniform point of S^5 in complex coordinates.
  std::array<std::complex<double>, 3> sphere_point() {
    std::array<std::complex<double>, 3> z;
    double norm2 = 0;
    do {
      norm2 = 0;
      for (auto& c : z) {
        c = {gaussian(), gaussian()};
        norm2 += std::norm(c);
      }
    } while (norm2 < 1e-12);
    double s = 1.0 / std::sqrt(norm2);
    for (auto& c : z) c *= s;
    return z;
  }

  // Point with |z2|^2 + |z3|^2 = t, either t = eps (boundary) or
  // t uniform in [0, eps) (interior of the tube).
  std::array<std::complex<double>, 3> tube_point(double eps, bool boundary) {
    double t = boundary ? eps : eps * uniform();
    double split = uniform();  // fraction of t on z2
    double r2 = std::sqrt(t * split);
    double r3 = std::sqrt(t * (1.0 - split));
    double r1 = std::sqrt(1.0 - t);
    return {r1 * unit_phase(), r2 * unit_phase(), r3 * unit_phase()};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace freeact

#endif
