#ifndef FREEACT_FIXPT_HPP
#define FREEACT_FIXPT_HPP

#include <vector>

#include "freeact/check.hpp"
#include "freeact/geometry.hpp"
#include "freeact/matrix.hpp"
#include "freeact/reps.hpp"
#include "freeact/words.hpp"

namespace freeact {

// The sphere Y with the phi-action alone, and the three product actions
// X_i = S^5 x S^5 moved by (phi, psi_i). A group element fixes a point of
// X_i iff both factors have eigenvalue 1.
enum class Space { Y, X0, X1, X2 };
std::string space_string(Space s);

bool has_eigenvalue_one(const UMatrix& m);

struct CensusEntry {
  PkWord word;
  std::vector<std::vector<Cyclo>> basis;  // exact ker(phi(g) - I)
};

struct Census {
  Space space;
  int k;
  std::vector<CensusEntry> entries;  // non-identity offenders, enumeration order
  std::vector<PkWord> words() const;
};

// Exact fixed-point census of P(k) on the given space.
Census product_census(int k, Space space);

// A1 = {b^j z} and A2 = {a^i b^-i z} intersected with P(k), identity
// excluded.
std::vector<PkWord> a1_members(int k);
std::vector<PkWord> a2_members(int k);
bool in_a1(const PkWord& w);
bool in_a2(const PkWord& w);

// Floating-point oracle: offenders detected through embedded matrices and
// numeric eigenvalues within tol of 1. Independent of the exact kernel
// route.
std::vector<PkWord> float_offenders(int k, Space space, double tol = 1e-8);

// Census claims:
//  - X0 at k = 3: offenders are exactly (A1 u A2) minus identity;
//  - X0 at k > 3: offenders are exactly the embedded P(3) offenders (the
//    circle factor of any fixed point is a cube root of unity), still
//    inside A1 u A2;
//  - X1 meets no A1 element, X2 meets no A2 element.
CheckOutcome verify_census_claims(int k);

// Exact census equals the float oracle on every element, all four spaces.
CheckOutcome verify_census_oracle(int k, double tol = 1e-8);

// Every element of Gamma whose phi-image has eigenvalue 1 lies in P(3):
// in each coset a^i b^j S^1 the candidate circle values, read off the
// diagonalized form, are cube roots of unity. This closes the gap between
// the finite P(k) checks and the full group.
CheckOutcome verify_gamma_envelope();

// Freeness of the action on U_i for the subgroup P(k):
//  i = 0: every X0-offender has a 1-dimensional fixed line inside V1 or V2
//         (strictly), so its fixed set misses U_0;
//  i = 1,2: every X_i-offender's fixed line is strictly outside V_i.
// An offender with eigenspace dimension >= 2 aborts with a diagnostic.
CheckOutcome verify_free_on_u(int i, int k, const Rational& eps);

}  // namespace freeact

#endif
