#ifndef FREEACT_GEOMETRY_HPP
#define FREEACT_GEOMETRY_HPP

#include <array>
#include <complex>
#include <optional>

#include "freeact/check.hpp"
#include "freeact/matrix.hpp"
#include "freeact/rational.hpp"
#include "freeact/words.hpp"

namespace freeact {

enum class Side { Interior, Boundary, Outside };
std::string side_string(Side s);

// Point of S^5 carried as an unnormalized coordinate vector; the true
// point is z / sqrt(norm2). Every predicate below depends only on the
// ratios |z_q|^2 / norm2, so irrational normalizers (1/sqrt(3) from P,
// eigenvector scaling) never need to be adjoined.
struct ExactPoint {
  std::array<Cyclo, 3> z;
  Rational norm2;
};

// Builds a point and computes its norm; throws if the norm or any |z_q|^2
// fails to be rational (the membership predicates would be undecidable by
// rational comparison) or if the vector is zero.
ExactPoint make_exact_point(const std::array<Cyclo, 3>& z);
ExactPoint make_rational_point(const Rational& z1, const Rational& z2, const Rational& z3);

// |z_q|^2 as exact rationals, q = 0,1,2 (unnormalized).
std::array<Rational, 3> moduli_squared(const ExactPoint& p);

// Applies an exact matrix to the point, rescaling norm2.
ExactPoint apply_matrix(const UMatrix& m, const ExactPoint& p);

using CPoint = std::array<std::complex<double>, 3>;

// The matrix sqrt(3)*P with rows (1, w, 1), (1, 1, w), (w, 1, 1); the
// 1/sqrt(3) factor is tracked by the callers through norm2 scaling.
const UMatrix& scaled_p_matrix();

// V1 = union over k of a^k {|z2|^2 + |z3|^2 <= eps}; the three rotations
// turn membership into "some pair-sum of squared moduli <= eps".
Side in_v1(const ExactPoint& p, const Rational& eps);
// V2 = P V1, tested through P^-1.
Side in_v2(const ExactPoint& p, const Rational& eps);

// Numeric twins (points must sit on the unit sphere within 1e-9).
Side in_v1_numeric(const CPoint& z, double eps);
Side in_v2_numeric(const CPoint& z, double eps);

CPoint apply_numeric(const UMatrix& m, const CPoint& z, double scale);

// Throws PreconditionError unless 0 < eps < 1/9.
void require_valid_eps(const Rational& eps);

// Certifies V1 and V2 disjoint: an exact inequality chain bounding every
// pair-sum on V2 strictly above eps, plus sample_count seeded numeric
// V1-points whose P-image must classify Outside V1.
CheckOutcome verify_disjointness(const Rational& eps, int sample_count, uint64_t seed);

// The three displayed expressions of the rotation identity
// phi(b) P^{i-1} phi(a^k) = P^{i-1} phi(a^{-2(i-1)}) phi(b) phi(a^k)
//                         = P^{i-1} phi(a^{k+i-1}) phi(b) phi(omega^{-k})
// compared as exact matrices; i in {1,2}, k in {0,1,2}.
bool formula_one_check(int i, int k);

// Classification of V_i test points is preserved by the generators a, b
// and c of P(k). Exact structured family plus seeded numeric samples.
CheckOutcome verify_invariance(int i, int k, const Rational& eps, int sample_count, uint64_t seed);

// Structured exact test points used by invariance and the gluing tests.
std::vector<ExactPoint> structured_test_points(const Rational& eps);

}  // namespace freeact

#endif
