#include "freeact/fixpt.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace freeact {

std::string space_string(Space s) {
  switch (s) {
    case Space::Y: return "Y";
    case Space::X0: return "X0";
    case Space::X1: return "X1";
    case Space::X2: return "X2";
  }
  return "?";
}

bool has_eigenvalue_one(const UMatrix& m) {
  return (m - UMatrix::identity(m.dim())).det().is_zero();
}

std::vector<PkWord> Census::words() const {
  std::vector<PkWord> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.word);
  return out;
}

namespace {

RepTable second_factor(Space space) {
  switch (space) {
    case Space::X0: return rep_psi(0);
    case Space::X1: return rep_psi(1);
    case Space::X2: return rep_psi(2);
    default: throw PreconditionError("no second factor on Y");
  }
}

}  // namespace

Census product_census(int k, Space space) {
  PkFamily fam(k);
  RepTable phi = rep_phi();
  std::optional<RepTable> psi;
  if (space != Space::Y) psi = second_factor(space);

  Census census;
  census.space = space;
  census.k = k;
  for (const auto& w : fam.elements()) {
    if (w == fam.identity()) continue;
    UMatrix mphi = rep_apply_pk(phi, fam, w);
    if (!has_eigenvalue_one(mphi)) continue;
    if (psi) {
      UMatrix mpsi = rep_apply_pk(*psi, fam, w);
      if (!has_eigenvalue_one(mpsi)) continue;
    }
    census.entries.push_back({w, fixed_space_basis(mphi)});
  }
  return census;
}

std::vector<PkWord> a1_members(int k) {
  PkFamily fam(k);
  std::vector<PkWord> out;
  for (int j = 1; j < 3; ++j)
    for (long m = 0; m < fam.c_order(); ++m) out.push_back({0, j, m});
  return out;
}

std::vector<PkWord> a2_members(int k) {
  PkFamily fam(k);
  std::vector<PkWord> out;
  for (int i = 1; i < 3; ++i)
    for (long m = 0; m < fam.c_order(); ++m) out.push_back({i, (3 - i) % 3, m});
  return out;
}

bool in_a1(const PkWord& w) { return w.i == 0 && w.j != 0; }

bool in_a2(const PkWord& w) { return w.i != 0 && w.j == (3 - w.i) % 3; }

CheckOutcome verify_census_claims(int k) {
  CheckOutcome out;
  PkFamily fam(k);
  Census x0 = product_census(k, Space::X0);

  // Expected X0 offenders: A-set members whose circle part is a cube root
  // of unity, i.e. m a multiple of 3^{k-3}. For k = 3 that is all of
  // A1 u A2.
  long step = fam.c_order() / 3;  // 3^{k-3}
  std::set<PkWord> expected;
  for (const auto& w : a1_members(k))
    if (w.m % step == 0) expected.insert(w);
  for (const auto& w : a2_members(k))
    if (w.m % step == 0) expected.insert(w);

  std::set<PkWord> found;
  for (const auto& e : x0.entries) found.insert(e.word);

  if (found != expected) {
    std::ostringstream msg;
    msg << "X0 census over P(" << k << ") has " << found.size() << " offenders, expected "
        << expected.size();
    out.witness = msg.str();
    return out;
  }
  // Containment in A1 u A2 (the freeness statement for everything else).
  for (const auto& w : found) {
    if (!in_a1(w) && !in_a2(w)) {
      out.witness = "X0 offender outside A1 u A2: " + fam.word_string(w);
      return out;
    }
  }

  Census x1 = product_census(k, Space::X1);
  for (const auto& e : x1.entries)
    if (in_a1(e.word)) {
      out.witness = "A1 element fixes a point of X1: " + fam.word_string(e.word);
      return out;
    }
  Census x2 = product_census(k, Space::X2);
  for (const auto& e : x2.entries)
    if (in_a2(e.word)) {
      out.witness = "A2 element fixes a point of X2: " + fam.word_string(e.word);
      return out;
    }

  out.certified = true;
  std::ostringstream w;
  w << "X0 offenders = " << found.size() << " = expected set";
  if (k == 3) w << " = (A1 u A2) \\ {e}";
  w << "; X1 census avoids A1 (" << x1.entries.size() << " offenders); X2 census avoids A2 ("
    << x2.entries.size() << " offenders)";
  out.witness = w.str();
  return out;
}

CheckOutcome verify_census_oracle(int k, double tol) {
  CheckOutcome out;
  for (Space s : {Space::Y, Space::X0, Space::X1, Space::X2}) {
    auto exact = product_census(k, s).words();
    auto numeric = float_offenders(k, s, tol);
    if (exact != numeric) {
      out.witness = "exact census and float oracle disagree on " + space_string(s);
      return out;
    }
  }
  out.certified = true;
  out.witness = "exact census equals the eigenvalue oracle on Y, X0, X1, X2 for P(" +
                std::to_string(k) + ")";
  return out;
}

CheckOutcome verify_gamma_envelope() {
  CheckOutcome out;
  RepTable phi = rep_phi();
  const UMatrix A = phi.image("a");
  const UMatrix B = phi.image("b");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == 0 && j == 0) continue;  // central coset: only the identity fixes
      UMatrix m = A.pow(i) * B.pow(j);
      if (i == 0) {
        // Diagonal coset: candidate circle values are the inverse diagonal
        // entries; each must be a cube root of unity.
        for (unsigned q = 0; q < 3; ++q) {
          Cyclo d = m.at(q, q);
          if (!(d * d * d == Cyclo::one())) {
            out.witness = "diagonal entry of b^j is not a cube root of unity";
            return out;
          }
        }
      } else {
        // Twisted permutation coset: characteristic polynomial must be
        // x^3 - 1, so eigenvalues (hence candidate circle values) are the
        // cube roots of unity. Coefficients: trace, principal 2-minors,
        // determinant.
        Cyclo tr = m.trace();
        Cyclo minors;
        for (unsigned q = 0; q < 3; ++q) {
          unsigned r = (q + 1) % 3, s = (q + 2) % 3;
          minors += m.at(r, r) * m.at(s, s) - m.at(r, s) * m.at(s, r);
        }
        if (!tr.is_zero() || !minors.is_zero() || m.det() != Cyclo::one()) {
          out.witness = "characteristic polynomial of a coset is not x^3 - 1";
          return out;
        }
      }
    }
  }
  out.certified = true;
  out.witness =
      "in every coset a^i b^j S^1 the circle values admitting a fixed point are cube roots of "
      "unity; every offender of Gamma lies in P(3)";
  return out;
}

CheckOutcome verify_free_on_u(int i, int k, const Rational& eps) {
  require_valid_eps(eps);
  if (i < 0 || i > 2) throw PreconditionError("free_on_u index must be 0, 1 or 2");
  CheckOutcome out;
  PkFamily fam(k);
  Space space = i == 0 ? Space::X0 : (i == 1 ? Space::X1 : Space::X2);
  Census census = product_census(k, space);

  int in_v1_count = 0, in_v2_count = 0, outside_count = 0;
  for (const auto& e : census.entries) {
    if (e.basis.size() != 1) {
      std::ostringstream msg;
      msg << "offender " << fam.word_string(e.word) << " has fixed space of dimension "
          << e.basis.size() << "; manual analysis required";
      throw InternalError(msg.str());
    }
    ExactPoint p = make_exact_point({e.basis[0][0], e.basis[0][1], e.basis[0][2]});
    Side s1 = in_v1(p, eps);
    Side s2 = in_v2(p, eps);
    if (i == 0) {
      if (s1 == Side::Interior) {
        ++in_v1_count;
      } else if (s2 == Side::Interior) {
        ++in_v2_count;
      } else {
        out.witness = "X0 offender " + fam.word_string(e.word) +
                      " has fixed points outside the interiors of V1 and V2";
        return out;
      }
    } else {
      Side si = (i == 1) ? s1 : s2;
      if (si != Side::Outside) {
        out.witness = "X" + std::to_string(i) + " offender " + fam.word_string(e.word) +
                      " has fixed points meeting V" + std::to_string(i);
        return out;
      }
      ++outside_count;
    }
  }

  out.certified = true;
  std::ostringstream w;
  if (i == 0) {
    w << census.entries.size() << " offenders on X0: " << in_v1_count
      << " fixed lines interior to V1, " << in_v2_count << " interior to V2";
  } else {
    w << census.entries.size() << " offenders on X" << i << ": all " << outside_count
      << " fixed lines strictly outside V" << i;
  }
  out.witness = w.str();
  return out;
}

}  // namespace freeact
