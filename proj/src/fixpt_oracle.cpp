// Floating-point eigenvalue oracle for the fixed-point census. Kept in its
// own translation unit so Eigen stays out of the exact code paths.
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "freeact/fixpt.hpp"

namespace freeact {

namespace {

bool near_eigenvalue_one(const UMatrix& m, double tol) {
  const unsigned n = m.dim();
  Eigen::MatrixXcd em(n, n);
  auto grid = m.embed();
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) em(r, c) = grid[r][c];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(em, false);
  for (int q = 0; q < solver.eigenvalues().size(); ++q)
    if (std::abs(solver.eigenvalues()[q] - std::complex<double>(1.0, 0.0)) < tol) return true;
  return false;
}

}  // namespace

std::vector<PkWord> float_offenders(int k, Space space, double tol) {
  PkFamily fam(k);
  RepTable phi = rep_phi();
  std::optional<RepTable> psi;
  if (space == Space::X0) psi = rep_psi(0);
  if (space == Space::X1) psi = rep_psi(1);
  if (space == Space::X2) psi = rep_psi(2);

  std::vector<PkWord> out;
  for (const auto& w : fam.elements()) {
    if (w == fam.identity()) continue;
    if (!near_eigenvalue_one(rep_apply_pk(phi, fam, w), tol)) continue;
    if (psi && !near_eigenvalue_one(rep_apply_pk(*psi, fam, w), tol)) continue;
    out.push_back(w);
  }
  return out;
}

}  // namespace freeact
