#ifndef FREEACT_THETA_HPP
#define FREEACT_THETA_HPP

#include <optional>

#include "freeact/check.hpp"
#include "freeact/geometry.hpp"
#include "freeact/spoly.hpp"

namespace freeact {

// 3x3 matrix of boundary polynomials.
struct PolyMat3 {
  std::array<SPoly, 9> a{};

  SPoly& at(int r, int c) { return a[r * 3 + c]; }
  const SPoly& at(int r, int c) const { return a[r * 3 + c]; }

  static PolyMat3 from_constant(const UMatrix& m);
  PolyMat3 operator*(const PolyMat3& o) const;
  PolyMat3 operator-(const PolyMat3& o) const;
  PolyMat3 conj_transpose() const;
  PolyMat3 substituted(const std::map<Var, SPoly>& assignment) const;
  PolyMat3 scaled(const SPoly& s) const;
  bool is_zero() const;
  std::string nonzero_entries() const;  // residual listing for witnesses
};

// The boundary gluing matrix. Entries are stored unscaled: the normalizer
// 1/sqrt(eps(1-eps)) applies to the z-dependent 2x2 block only, never to
// the constant 1 entry, which is the unique scoping compatible with
// unitarity. block_rows lists the two block indices.
struct ThetaMatrix {
  int m = 1;
  PolyMat3 entries;
  std::array<int, 2> block_rows;
  int constant_pos;  // index of the unscaled 1 on the diagonal
};

ThetaMatrix theta_build(int m);

// Cleared special-unitarity: Theta Theta^dagger = eps(1-eps) I on the
// block (exact 1 at the constant entry, 0 elsewhere) and the block
// determinant equals eps(1-eps); plus numeric unitarity spot-checks at
// seeded boundary points.
CheckOutcome verify_theta_special_unitary(int m, int numeric_samples, uint64_t seed,
                                          const Rational& eps_numeric);

// Equivariance certificates for the boundary isomorphism. gen is "a", "b"
// or "lambda". Every intermediate line of the b-chains is certified as its
// own sub-identity; any nonzero residual fails hard with the residual
// polynomial in the witness.
CheckOutcome verify_alpha_equivariance(const std::string& gen, int m);

// Unique standard form (m, k, z) of a boundary base point:
// y = P^{m-1} phi(a^k) z with |z2|^2 + |z3|^2 = eps (scaled by norm2).
// Exactly one of the six candidates may satisfy the boundary condition;
// none rejects the input, several is an arithmetic failure.
struct StandardForm {
  int m;
  int k;
  ExactPoint z;
};
StandardForm standard_form(const ExactPoint& y, const Rational& eps);

// Exact evaluation at a boundary point whose normalizer happens to be
// rational (eps(1-eps) a rational square after norm2 scaling): returns the
// normalized unitary matrix. nullopt when the normalizer is irrational.
std::optional<UMatrix> theta_eval_exact(const ThetaMatrix& theta, const ExactPoint& z,
                                        const Rational& eps);

// Numeric evaluation at a unit-sphere boundary point.
std::array<std::array<std::complex<double>, 3>, 3> theta_eval_numeric(const ThetaMatrix& theta,
                                                                      const CPoint& z, double eps);

}  // namespace freeact

#endif
