#include "doctest.h"
#include "freeact/matrix.hpp"

using namespace freeact;

namespace {
const Cyclo kOmega = Cyclo::root_of_unity(3, 1);

UMatrix cycle3() { return UMatrix::permutation({2, 0, 1}); }  // e1->e3, e2->e1, e3->e2

UMatrix diag_b() { return UMatrix::diagonal({Cyclo::one(), kOmega, kOmega * kOmega}); }
}  // namespace

TEST_CASE("permutation and diagonal matrices multiply exactly") {
  UMatrix a = cycle3();
  UMatrix b = diag_b();
  CHECK(a.pow(3).is_identity());
  CHECK(b.pow(3).is_identity());
  CHECK(a.is_unitary());
  CHECK(b.is_unitary());
  CHECK(a.det() == Cyclo::one());
  CHECK(b.det() == Cyclo::one());
  CHECK(a.trace().is_zero());
  CHECK(b.trace().is_zero());
  // a^-1 diag(d1,d2,d3) a = diag(d3,d1,d2)
  UMatrix conj = a.unitary_inverse() * b * a;
  CHECK(conj == UMatrix::diagonal({kOmega * kOmega, Cyclo::one(), kOmega}));
}

TEST_CASE("commutator of the standard pair is the scalar omega") {
  UMatrix a = cycle3(), b = diag_b();
  UMatrix comm = a.unitary_inverse() * b.unitary_inverse() * a * b;
  CHECK(comm == UMatrix::scalar(3, kOmega));
}

TEST_CASE("kernel of (M - I) recovers fixed spaces") {
  auto fb = fixed_space_basis(diag_b());
  REQUIRE(fb.size() == 1);
  CHECK(fb[0][0] == Cyclo::one());
  CHECK(fb[0][1].is_zero());
  CHECK(fb[0][2].is_zero());

  auto fa = fixed_space_basis(cycle3());
  REQUIRE(fa.size() == 1);
  // Eigenvector proportional to (1,1,1).
  CHECK(fa[0][0] == fa[0][1]);
  CHECK(fa[0][1] == fa[0][2]);
  CHECK(!fa[0][0].is_zero());

  auto fid = fixed_space_basis(UMatrix::identity(3));
  CHECK(fid.size() == 3);

  auto none = fixed_space_basis(UMatrix::scalar(3, kOmega));
  CHECK(none.empty());
}

TEST_CASE("kernel vectors are genuinely annihilated") {
  UMatrix m = cycle3() * diag_b();  // no fixed vector unless scalar-compensated
  UMatrix shifted = m - UMatrix::identity(3);
  for (const auto& v : kernel_basis(shifted)) {
    auto image = shifted.apply(v);
    for (const auto& c : image) CHECK(c.is_zero());
  }
}

TEST_CASE("4x4 permutation matrices") {
  UMatrix u = UMatrix::permutation({1, 0, 3, 2});  // (12)(34)
  CHECK(u.pow(2).is_identity());
  CHECK(u.det() == Cyclo::one());
  CHECK(u.is_unitary());
}
