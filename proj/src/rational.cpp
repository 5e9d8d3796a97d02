#include "freeact/rational.hpp"

#include <cctype>
#include <cmath>

namespace freeact {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw PreconditionError("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
      throw PreconditionError("bad rational literal: " + text);
  }
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q(text);
      q.canonicalize();
      return q;
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator: " + text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw PreconditionError("bad rational literal: " + text);
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational mod_one(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace {

long double mpz_to_long_double(const mpz_class& z) {
  // mpz_get_d truncates to 53 bits; accumulate limbs to keep 64.
  long double acc = 0.0L;
  const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
  size_t n = mpz_size(z.get_mpz_t());
  const long double radix = std::ldexp(1.0L, GMP_NUMB_BITS);
  for (size_t i = n; i-- > 0;) acc = acc * radix + static_cast<long double>(limbs[i]);
  if (mpz_sgn(z.get_mpz_t()) < 0) acc = -acc;
  return acc;
}

}  // namespace

long double to_long_double(const Rational& q) {
  return mpz_to_long_double(q.get_num()) / mpz_to_long_double(q.get_den());
}

SqrtBounds rational_sqrt_bounds(const Rational& q, unsigned precision_bits) {
  if (q < 0) throw PreconditionError("sqrt of negative rational");
  if (q == 0) return {Rational(0), Rational(0)};
  // sqrt(num/den) = sqrt(num*den)/den; scale by 4^bits and take integer sqrt.
  mpz_class prod = q.get_num() * q.get_den();
  mpz_class scaled = prod << (2 * precision_bits);
  mpz_class root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
  mpz_class den_scaled = q.get_den() << precision_bits;
  Rational lower(root, den_scaled);
  lower.canonicalize();
  Rational upper(root + 1, den_scaled);
  upper.canonicalize();
  return {lower, upper};
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class num_root, den_root;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(num_root.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), q.get_den_mpz_t());
  Rational r(num_root, den_root);
  r.canonicalize();
  return r;
}

}  // namespace freeact
