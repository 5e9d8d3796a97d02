#ifndef FREEACT_RATIONAL_HPP
#define FREEACT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace freeact {

// Exact rational scalar. All coefficient arithmetic in the engine runs on
// arbitrary-precision rationals; doubles appear only in embedding
// cross-checks.
using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input (CLI/config/op preconditions). Maps to exit code 2.
struct PreconditionError : Error {
  using Error::Error;
};

// Arithmetic self-consistency violation. Maps to exit code 3.
struct InternalError : Error {
  using Error::Error;
};

struct DivisionByZeroError : InternalError {
  DivisionByZeroError() : InternalError("division by zero") {}
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZeroError{};
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Rejects zero denominators and garbage.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// q reduced into [0, 1).
Rational mod_one(const Rational& q);

bool is_integer(const Rational& q);

// Converts exactly when num/den fit in a long double mantissa; relative
// error <= 2^-63 otherwise.
long double to_long_double(const Rational& q);

// Rational enclosure of sqrt(q): lower*lower <= q <= upper*upper with
// upper - lower <= 2^-precision_bits * max(1, upper). Requires q >= 0.
struct SqrtBounds {
  Rational lower;
  Rational upper;
};
SqrtBounds rational_sqrt_bounds(const Rational& q, unsigned precision_bits = 64);

// Exact square root if q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace freeact

#endif
