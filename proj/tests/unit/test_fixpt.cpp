#include <set>

#include "doctest.h"
#include "freeact/fixpt.hpp"

using namespace freeact;

namespace {
const Rational kEps = make_rational(49, 625);
const Cyclo kOmega = Cyclo::root_of_unity(3, 1);
}

TEST_CASE("eigenvalue-one detection on the generator images") {
  RepTable phi = rep_phi();
  CHECK(has_eigenvalue_one(phi.image("b")));                       // diag(1, w, w^2)
  CHECK(has_eigenvalue_one(phi.image("a")));                       // fixed vector (1,1,1)
  CHECK_FALSE(has_eigenvalue_one(rep_psi(1).image("b")));          // diag(w, w^2, w^2)
  CHECK(has_eigenvalue_one(UMatrix::identity(3)));
  CHECK_FALSE(has_eigenvalue_one(UMatrix::scalar(3, kOmega)));
}

TEST_CASE("fixed lines of the basic matrices") {
  RepTable phi = rep_phi();
  auto fb = fixed_space_basis(phi.image("b"));
  REQUIRE(fb.size() == 1);
  CHECK(fb[0][0] == Cyclo::one());
  CHECK(fb[0][1].is_zero());
  auto fa = fixed_space_basis(phi.image("a"));
  REQUIRE(fa.size() == 1);
  CHECK(fa[0][0] == fa[0][1]);
  CHECK(fa[0][1] == fa[0][2]);
}

TEST_CASE("X0 census over P(3) is exactly the 12 A-set elements") {
  Census census = product_census(3, Space::X0);
  CHECK(census.entries.size() == 12);
  std::set<PkWord> found;
  for (const auto& e : census.entries) found.insert(e.word);
  std::set<PkWord> expected;
  for (const auto& w : a1_members(3)) expected.insert(w);
  for (const auto& w : a2_members(3)) expected.insert(w);
  CHECK(expected.size() == 12);
  CHECK(found == expected);
}

TEST_CASE("X1 census avoids A1 and X2 avoids A2") {
  for (int k : {3, 4}) {
    Census x1 = product_census(k, Space::X1);
    for (const auto& e : x1.entries) CHECK_FALSE(in_a1(e.word));
    Census x2 = product_census(k, Space::X2);
    for (const auto& e : x2.entries) CHECK_FALSE(in_a2(e.word));
  }
}

TEST_CASE("census claims certify for k = 3, 4, 5") {
  for (int k : {3, 4, 5}) {
    auto r = verify_census_claims(k);
    CAPTURE(k);
    CAPTURE(r.witness);
    CHECK(r.certified);
  }
}

TEST_CASE("exact census equals the float eigenvalue oracle on P(3) and P(4)") {
  for (int k : {3, 4}) {
    auto r = verify_census_oracle(k);
    CAPTURE(r.witness);
    CHECK(r.certified);
  }
}

TEST_CASE("eigenvalue-one detection is a class function") {
  PkFamily fam(4);
  RepTable phi = rep_phi();
  auto elems = fam.elements();
  for (size_t t = 0; t < elems.size(); t += 7) {
    const auto& g = elems[t];
    bool base = has_eigenvalue_one(rep_apply_pk(phi, fam, g));
    for (size_t u = 0; u < elems.size(); u += 13) {
      PkWord conj = fam.mul(fam.mul(fam.inv(elems[u]), g), elems[u]);
      CHECK(has_eigenvalue_one(rep_apply_pk(phi, fam, conj)) == base);
    }
  }
}

TEST_CASE("trivial group gives an empty census") {
  // The identity is skipped by construction; a census over the trivial
  // subgroup has no entries. Use the smallest family and filter.
  Census census = product_census(3, Space::X0);
  for (const auto& e : census.entries) CHECK(e.word != PkWord{});
}

TEST_CASE("the Gamma envelope pins all offenders into P(3)") {
  auto r = verify_gamma_envelope();
  CAPTURE(r.witness);
  CHECK(r.certified);
}

TEST_CASE("freeness on U_i certifies for k = 3 and 4") {
  for (int k : {3, 4}) {
    for (int i : {0, 1, 2}) {
      auto r = verify_free_on_u(i, k, kEps);
      CAPTURE(i);
      CAPTURE(k);
      CAPTURE(r.witness);
      CHECK(r.certified);
    }
  }
  CHECK_THROWS_AS(verify_free_on_u(0, 3, Rational(0)), PreconditionError);
}

TEST_CASE("A2 fixed lines land inside V2") {
  // a^2 b is an A2 element; its fixed line must be interior to V2 and
  // outside V1.
  PkFamily fam(3);
  RepTable phi = rep_phi();
  PkWord w{2, 1, 0};
  REQUIRE(in_a2(w));
  auto basis = fixed_space_basis(rep_apply_pk(phi, fam, w));
  REQUIRE(basis.size() == 1);
  ExactPoint p = make_exact_point({basis[0][0], basis[0][1], basis[0][2]});
  CHECK(in_v2(p, kEps) == Side::Interior);
  CHECK(in_v1(p, kEps) == Side::Outside);
}
