#ifndef FREEACT_CYCLO_HPP
#define FREEACT_CYCLO_HPP

#include <complex>
#include <string>
#include <vector>

#include "freeact/rational.hpp"

namespace freeact {

// Exact element of the cyclotomic field Q(zeta_n).
//
// Internally a vector of n rational coefficients on the power basis
// 1, zeta, ..., zeta^{n-1} of Q[x]/(x^n - 1): multiplication is a cyclic
// convolution and conjugation a permutation. Equality and zero tests go
// through reduction modulo the n-th cyclotomic polynomial, which is the
// canonical form. Mixed orders are coerced to the lcm by index dilation.
class Cyclo {
 public:
  Cyclo() : order_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclo(const Rational& r) : order_(1), coeffs_(1, r) {}
  explicit Cyclo(long n) : order_(1), coeffs_(1, Rational(n)) {}

  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(1L); }

  // zeta_n^k (k may be negative or >= n).
  static Cyclo root_of_unity(unsigned n, long k);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Rewrites the element on the power basis of Q(zeta_m); m must be a
  // multiple of order().
  Cyclo coerced(unsigned m) const;

  Cyclo operator-() const;
  Cyclo conj() const;
  Cyclo inv() const;

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
  Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

  bool is_zero() const;
  friend bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Canonical representative modulo the order()-th cyclotomic polynomial:
  // coefficient vector of degree < phi(order()). Idempotent.
  std::vector<Rational> reduced() const;

  // Stable text key at a fixed ambient order (order() must divide m).
  // Equal field elements coerced to the same m share the key.
  std::string canonical_key(unsigned m) const;

  bool is_rational() const;
  // Requires is_rational().
  Rational rational_value() const;

  // True iff conj(x) == x.
  bool is_real() const;

  // Smallest t >= 1 with x^t == 1; nullopt if x is not a root of unity
  // (searched up to 2 * order()^2, enough for elements of this engine).
  std::optional<unsigned> multiplicative_order() const;

  // Numeric embedding sum c_k exp(2 pi i k / n), accumulated in long double.
  std::complex<double> embed() const;

  std::string to_string() const;

  // Coefficients of the n-th cyclotomic polynomial (integer, monic).
  static const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

 private:
  Cyclo(unsigned order, std::vector<Rational> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}
  void trim_order();

  unsigned order_;
  std::vector<Rational> coeffs_;  // size order_
};

inline Cyclo operator*(const Rational& r, const Cyclo& x) { return Cyclo(r) * x; }

}  // namespace freeact

#endif
