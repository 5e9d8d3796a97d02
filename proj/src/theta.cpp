#include "freeact/theta.hpp"

#include <sstream>

#include "freeact/reps.hpp"
#include "freeact/sampling.hpp"

namespace freeact {

namespace {

SPoly var(Var v) { return SPoly::variable(v); }

const Cyclo& omega() {
  static const Cyclo w = Cyclo::root_of_unity(3, 1);
  return w;
}

// eps (1 - eps) as a polynomial.
SPoly eps_norm() { return var(EPS) * (SPoly::one() - var(EPS)); }

// The twisted point z' = (w^-k z1, w^-k+1 z2, w^-k+2 z3) of the b-chain,
// with the conjugate-consistent images for zb.
std::map<Var, SPoly> b_twist_assignment(int k) {
  std::map<Var, SPoly> sub;
  auto put = [&](Var z, Var zb, long power) {
    Cyclo w = Cyclo::root_of_unity(3, power);
    sub[z] = var(z).scaled(w);
    sub[zb] = var(zb).scaled(w.conj());
  };
  put(Z1, ZB1, -k);
  put(Z2, ZB2, -k + 1);
  put(Z3, ZB3, -k + 2);
  return sub;
}

std::map<Var, SPoly> lambda_assignment() {
  std::map<Var, SPoly> sub;
  sub[Z1] = var(LAM) * var(Z1);
  sub[Z2] = var(LAM) * var(Z2);
  sub[Z3] = var(LAM) * var(Z3);
  sub[ZB1] = var(LAMB) * var(ZB1);
  sub[ZB2] = var(LAMB) * var(ZB2);
  sub[ZB3] = var(LAMB) * var(ZB3);
  return sub;
}

SPoly poly_det3(const PolyMat3& m) {
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

}  // namespace

PolyMat3 PolyMat3::from_constant(const UMatrix& m) {
  if (m.dim() != 3) throw PreconditionError("PolyMat3 needs a 3x3 matrix");
  PolyMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.at(r, c) = SPoly(m.at(r, c));
  return out;
}

PolyMat3 PolyMat3::operator*(const PolyMat3& o) const {
  PolyMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      SPoly acc;
      for (int k = 0; k < 3; ++k) acc = acc + at(r, k) * o.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

PolyMat3 PolyMat3::operator-(const PolyMat3& o) const {
  PolyMat3 out;
  for (int i = 0; i < 9; ++i) out.a[i] = a[i] - o.a[i];
  return out;
}

PolyMat3 PolyMat3::conj_transpose() const {
  PolyMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.at(c, r) = at(r, c).formal_conj();
  return out;
}

PolyMat3 PolyMat3::substituted(const std::map<Var, SPoly>& assignment) const {
  PolyMat3 out;
  for (int i = 0; i < 9; ++i) out.a[i] = a[i].substituted(assignment);
  return out;
}

PolyMat3 PolyMat3::scaled(const SPoly& s) const {
  PolyMat3 out;
  for (int i = 0; i < 9; ++i) out.a[i] = a[i] * s;
  return out;
}

bool PolyMat3::is_zero() const {
  for (const auto& p : a)
    if (!p.is_zero()) return false;
  return true;
}

std::string PolyMat3::nonzero_entries() const {
  std::ostringstream out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!at(r, c).is_zero()) out << "(" << r + 1 << "," << c + 1 << "): " << at(r, c).to_string() << "; ";
  return out.str();
}

ThetaMatrix theta_build(int m) {
  if (m != 1 && m != 2) throw PreconditionError("theta index must be 1 or 2");
  ThetaMatrix t;
  t.m = m;
  SPoly zb1z2 = var(ZB1) * var(Z2);
  SPoly zb1z3 = var(ZB1) * var(Z3);
  SPoly z1zb3 = var(Z1) * var(ZB3);
  SPoly z1zb2 = var(Z1) * var(ZB2);
  if (m == 1) {
    // [[1, 0, 0], [0, zb1 z2, -zb1 z3], [0, z1 zb3, z1 zb2]]
    t.entries.at(0, 0) = SPoly::one();
    t.entries.at(1, 1) = zb1z2;
    t.entries.at(1, 2) = -zb1z3;
    t.entries.at(2, 1) = z1zb3;
    t.entries.at(2, 2) = z1zb2;
    t.block_rows = {1, 2};
    t.constant_pos = 0;
  } else {
    // [[zb1 z2, -z1 zb3, 0], [zb1 z3, z1 zb2, 0], [0, 0, 1]]
    t.entries.at(0, 0) = zb1z2;
    t.entries.at(0, 1) = -z1zb3;
    t.entries.at(1, 0) = zb1z3;
    t.entries.at(1, 1) = z1zb2;
    t.entries.at(2, 2) = SPoly::one();
    t.block_rows = {0, 1};
    t.constant_pos = 2;
  }
  return t;
}

CheckOutcome verify_theta_special_unitary(int m, int numeric_samples, uint64_t seed,
                                          const Rational& eps_numeric) {
  require_valid_eps(eps_numeric);
  CheckOutcome out;
  ThetaMatrix theta = theta_build(m);

  // Theta Theta^dagger must equal eps(1-eps) on the block diagonal, 1 at
  // the constant entry, 0 elsewhere (the cleared form of unitarity under
  // the block-scoped 1/sqrt(eps(1-eps)) normalizer).
  PolyMat3 product = theta.entries * theta.entries.conj_transpose();
  PolyMat3 expected;
  expected.at(theta.block_rows[0], theta.block_rows[0]) = eps_norm();
  expected.at(theta.block_rows[1], theta.block_rows[1]) = eps_norm();
  expected.at(theta.constant_pos, theta.constant_pos) = SPoly::one();
  PolyMat3 residual = product - expected;
  if (!residual.is_zero()) {
    out.witness = "unitarity residual: " + residual.nonzero_entries();
    return out;
  }

  // Cleared determinant of the full matrix: with the block normalizer
  // squared the normalized determinant is det(entries)/(eps(1-eps)), so
  // SU(3) membership is det(entries) = eps(1-eps). The full 3x3 form also
  // pins the constant entry, which unitarity alone cannot (a sign flip
  // there survives Theta Theta^dagger).
  SPoly det_residual = poly_det3(theta.entries) - eps_norm();
  if (!det_residual.is_zero()) {
    out.witness = "determinant residual: " + det_residual.to_string();
    return out;
  }

  // Numeric spot checks on seeded boundary points.
  DetRng rng(seed);
  double eps_d = to_long_double(eps_numeric);
  for (int t = 0; t < numeric_samples; ++t) {
    CPoint z = rng.tube_point(eps_d, true);
    auto em = theta_eval_numeric(theta, z, eps_d);
    // Unitarity residual.
    double worst = 0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        std::complex<double> acc = 0;
        for (int k = 0; k < 3; ++k) acc += em[r][k] * std::conj(em[c][k]);
        worst = std::max(worst, std::abs(acc - (r == c ? 1.0 : 0.0)));
      }
    std::complex<double> det = em[0][0] * (em[1][1] * em[2][2] - em[1][2] * em[2][1]) -
                               em[0][1] * (em[1][0] * em[2][2] - em[1][2] * em[2][0]) +
                               em[0][2] * (em[1][0] * em[2][1] - em[1][1] * em[2][0]);
    if (worst > 1e-10 || std::abs(det - 1.0) > 1e-10) {
      out.witness = "numeric unitarity drift " + std::to_string(worst);
      return out;
    }
  }

  out.certified = true;
  std::ostringstream w;
  w << "Theta_" << m << " Theta_" << m << "* = eps(1-eps) I and det = eps(1-eps), cleared; "
    << numeric_samples << " numeric boundary points unitary within 1e-10";
  out.witness = w.str();
  return out;
}

CheckOutcome verify_alpha_equivariance(const std::string& gen, int m) {
  CheckOutcome out;
  ThetaMatrix theta = theta_build(m);
  PolyMat3 psi0_b = PolyMat3::from_constant(rep_psi(0).image("b"));
  PolyMat3 psi_m_b = PolyMat3::from_constant(rep_psi(m).image("b"));

  std::vector<std::pair<std::string, PolyMat3>> identities;

  if (gen == "a") {
    PolyMat3 psi0_a = PolyMat3::from_constant(rep_psi(0).image("a"));
    PolyMat3 psi_m_a = PolyMat3::from_constant(rep_psi(m).image("a"));
    PolyMat3 lhs = theta.entries * psi0_a;
    PolyMat3 rhs = psi_m_a * theta.entries;
    identities.emplace_back("Theta psi0(a) = psi_m(a) Theta", lhs - rhs);
    // Both sides degenerate to w Theta since psi_i(a) = w I.
    PolyMat3 w_theta = theta.entries.scaled(SPoly(omega()));
    identities.emplace_back("Theta psi0(a) = w Theta", lhs - w_theta);
    identities.emplace_back("psi_m(a) Theta = w Theta", rhs - w_theta);
  } else if (gen == "b") {
    if (m == 1) {
      PolyMat3 b_phi = PolyMat3::from_constant(rep_phi().image("b"));  // diag(1, w, w^2)
      for (int k = 0; k < 3; ++k) {
        PolyMat3 twisted = theta.entries.substituted(b_twist_assignment(k));
        identities.emplace_back("Theta1(z') = Theta1(z) diag(1,w,w^2), k=" + std::to_string(k),
                                twisted - theta.entries * b_phi);
        identities.emplace_back("Theta1(z') psi0(b) = psi1(b) Theta1(z), k=" + std::to_string(k),
                                twisted * psi0_b - psi_m_b * theta.entries);
      }
      identities.emplace_back("diag(1,w,w^2) psi0(b) = psi1(b)", b_phi * psi0_b - psi_m_b);
      identities.emplace_back("Theta1 psi1(b) = psi1(b) Theta1",
                              theta.entries * psi_m_b - psi_m_b * theta.entries);
    } else {
      UMatrix dmat = UMatrix::diagonal({omega(), omega() * omega(), Cyclo::one()});
      PolyMat3 d = PolyMat3::from_constant(dmat);
      for (int k = 0; k < 3; ++k) {
        PolyMat3 twisted = theta.entries.substituted(b_twist_assignment(k));
        identities.emplace_back("Theta2(z') = diag(w,w^2,1) Theta2(z), k=" + std::to_string(k),
                                twisted - d * theta.entries);
        identities.emplace_back("Theta2(z') psi0(b) = psi2(b) Theta2(z), k=" + std::to_string(k),
                                twisted * psi0_b - psi_m_b * theta.entries);
      }
      identities.emplace_back("diag(w,w^2,1) Theta2 psi0(b) = psi2(b) Theta2",
                              d * theta.entries * psi0_b - psi_m_b * theta.entries);
    }
  } else if (gen == "lambda") {
    PolyMat3 scaled = theta.entries.substituted(lambda_assignment());
    identities.emplace_back("Theta_m(lambda z) = Theta_m(z)", scaled - theta.entries);
  } else {
    throw PreconditionError("equivariance generator must be a, b or lambda");
  }

  for (const auto& [name, residual] : identities) {
    if (!residual.is_zero()) {
      out.witness = "sub-identity failed: " + name + "; residual " + residual.nonzero_entries();
      return out;
    }
  }
  out.certified = true;
  std::ostringstream w;
  w << identities.size() << " sub-identities reduce to zero for " << gen << ", m=" << m;
  out.witness = w.str();
  return out;
}

StandardForm standard_form(const ExactPoint& y, const Rational& eps) {
  require_valid_eps(eps);
  RepTable phi = rep_phi();
  const UMatrix a_inv = phi.image("a").unitary_inverse();
  const UMatrix p_adj = scaled_p_matrix().conj_transpose();  // 3 P^-1

  std::vector<StandardForm> hits;
  for (int m = 1; m <= 2; ++m) {
    ExactPoint base = (m == 1) ? y : apply_matrix(p_adj, y);
    for (int k = 0; k < 3; ++k) {
      ExactPoint cand = apply_matrix(a_inv.pow(k), base);
      auto mods = moduli_squared(cand);
      Rational tail = mods[1] + mods[2];
      if (tail == eps * cand.norm2) hits.push_back({m, k, cand});
    }
  }
  if (hits.empty())
    throw PreconditionError("point is not on the boundary of V1 or V2; no standard form");
  if (hits.size() > 1)
    throw InternalError("standard form is not unique: " + std::to_string(hits.size()) + " candidates");
  return hits[0];
}

std::optional<UMatrix> theta_eval_exact(const ThetaMatrix& theta, const ExactPoint& z,
                                        const Rational& eps) {
  // Block entries are quadratic, so evaluating on the unnormalized point
  // scales them by norm2; the normalizer becomes norm2 * sqrt(eps(1-eps)).
  auto root = exact_sqrt(eps * (Rational(1) - eps));
  if (!root) return std::nullopt;
  Cyclo scale = Cyclo(Rational(1) / (*root * z.norm2));
  UMatrix out(3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Cyclo value = theta.entries.at(r, c).eval_exact(z.z, Cyclo(eps));
      bool in_block = (r == theta.block_rows[0] || r == theta.block_rows[1]) &&
                      (c == theta.block_rows[0] || c == theta.block_rows[1]);
      out.at(r, c) = in_block ? value * scale : value;
    }
  return out;
}

std::array<std::array<std::complex<double>, 3>, 3> theta_eval_numeric(const ThetaMatrix& theta,
                                                                      const CPoint& z, double eps) {
  double norm = std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2]);
  if (std::abs(norm - 1.0) > 1e-9) throw PreconditionError("numeric point is off the sphere");
  double scale = 1.0 / std::sqrt(eps * (1.0 - eps));
  std::array<std::array<std::complex<double>, 3>, 3> out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      std::complex<double> value = theta.entries.at(r, c).eval(z, eps);
      bool in_block = (r == theta.block_rows[0] || r == theta.block_rows[1]) &&
                      (c == theta.block_rows[0] || c == theta.block_rows[1]);
      out[r][c] = in_block ? value * scale : value;
    }
  return out;
}

}  // namespace freeact
