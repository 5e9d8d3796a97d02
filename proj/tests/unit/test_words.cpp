#include <random>
#include <set>

#include "doctest.h"
#include "freeact/words.hpp"

using namespace freeact;

namespace {
struct GammaOps {
  using Elt = GammaWord;
  GammaWord identity() const { return gamma_identity(); }
  GammaWord mul(const GammaWord& a, const GammaWord& b) const { return gamma_mul(a, b); }
  GammaWord inv(const GammaWord& a) const { return gamma_inv(a); }
  bool eq(const GammaWord& a, const GammaWord& b) const { return a == b; }
};
}  // namespace

TEST_CASE("commutator of a and b is the central third turn") {
  GammaWord a{1, 0, Rational(0)}, b{0, 1, Rational(0)};
  GammaWord ab = gamma_mul(a, b);
  GammaWord ba = gamma_mul(b, a);
  CHECK(ab != ba);
  GammaWord comm = gamma_mul(gamma_mul(gamma_inv(a), gamma_inv(b)), gamma_mul(a, b));
  CHECK(comm == gamma_circle(Rational(1, 3)));
  // a^3 = identity with no central residue.
  CHECK(gamma_mul(gamma_mul(a, a), a) == gamma_identity());
}

TEST_CASE("Gamma relations hold under the word law") {
  CHECK(verify_relations(GammaOps{}, gamma_generators(), gamma_relations()).ok());
}

TEST_CASE("Gamma multiplication is associative on random words") {
  std::mt19937_64 rng(7);
  auto rand_word = [&] {
    GammaWord w;
    w.i = static_cast<int>(rng() % 3);
    w.j = static_cast<int>(rng() % 3);
    w.theta = mod_one(make_rational(static_cast<long>(rng() % 27), 27));
    return w;
  };
  for (int t = 0; t < 2000; ++t) {
    GammaWord x = rand_word(), y = rand_word(), z = rand_word();
    CHECK(gamma_mul(gamma_mul(x, y), z) == gamma_mul(x, gamma_mul(y, z)));
  }
}

TEST_CASE("P(k) families have presented order and satisfy their relations") {
  for (int k = 3; k <= 5; ++k) {
    PkFamily fam(k);
    auto elems = fam.elements();
    CHECK(elems.size() == fam.order());
    CHECK(fam.order() == (k == 3 ? 27u : k == 4 ? 81u : 243u));
    CHECK(verify_relations(fam, fam.generators(), fam.relations()).ok());
    for (const auto& w : elems) {
      CHECK(fam.mul(w, fam.inv(w)) == fam.identity());
    }
  }
  CHECK_THROWS_AS(PkFamily(2), PreconditionError);
}

TEST_CASE("P(3) and P(4) word multiplication is associative, exhaustively") {
  for (int k : {3, 4}) {
    PkFamily fam(k);
    auto elems = fam.elements();
    for (const auto& x : elems)
      for (const auto& y : elems)
        for (const auto& z : elems)
          REQUIRE(fam.mul(fam.mul(x, y), z) == fam.mul(x, fam.mul(y, z)));
  }
}

TEST_CASE("P(5) associativity on random triples") {
  PkFamily fam(5);
  auto elems = fam.elements();
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10000; ++t) {
    const auto& x = elems[rng() % elems.size()];
    const auto& y = elems[rng() % elems.size()];
    const auto& z = elems[rng() % elems.size()];
    REQUIRE(fam.mul(fam.mul(x, y), z) == fam.mul(x, fam.mul(y, z)));
  }
}

TEST_CASE("P(k) embeds into Gamma as an injective homomorphism") {
  PkFamily fam(3);
  auto elems = fam.elements();
  std::set<GammaWord> images;
  for (const auto& w : elems) images.insert(fam.embed(w));
  CHECK(images.size() == 27);
  for (const auto& x : elems)
    for (const auto& y : elems)
      REQUIRE(fam.embed(fam.mul(x, y)) == gamma_mul(fam.embed(x), fam.embed(y)));
  // c maps to the circle coordinate 1/3^{k-2}; c^{3^{k-3}} is omega.
  CHECK(fam.embed({0, 0, 1}) == gamma_circle(Rational(1, 3)));
  PkFamily fam4(4);
  CHECK(fam4.embed({0, 0, 1}) == gamma_circle(Rational(1, 9)));
  CHECK(fam4.embed({0, 0, 3}) == gamma_circle(Rational(1, 3)));
  CHECK(fam4.embed(fam4.identity()) == gamma_identity());

  std::mt19937_64 rng(11);
  auto elems4 = fam4.elements();
  for (int t = 0; t < 5000; ++t) {
    const auto& x = elems4[rng() % elems4.size()];
    const auto& y = elems4[rng() % elems4.size()];
    REQUIRE(fam4.embed(fam4.mul(x, y)) == gamma_mul(fam4.embed(x), fam4.embed(y)));
  }
}

TEST_CASE("E(p) families have order 3p^2 and satisfy their relations") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    EpFamily fam(p);
    CHECK(fam.elements().size() == fam.order());
    CHECK(fam.order() == 3UL * static_cast<unsigned long>(p * p));
    CHECK(verify_relations(fam, fam.generators(), fam.relations()).ok());
  }
}

TEST_CASE("E(7) word multiplication is associative, exhaustively") {
  EpFamily fam(7);
  auto elems = fam.elements();
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems)
        REQUIRE(fam.mul(fam.mul(x, y), z) == fam.mul(x, fam.mul(y, z)));
}

TEST_CASE("E(13) associativity on random triples") {
  EpFamily fam(13);
  auto elems = fam.elements();
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10000; ++t) {
    const auto& x = elems[rng() % elems.size()];
    const auto& y = elems[rng() % elems.size()];
    const auto& z = elems[rng() % elems.size()];
    REQUIRE(fam.mul(fam.mul(x, y), z) == fam.mul(x, fam.mul(y, z)));
  }
  for (const auto& x : elems) REQUIRE(fam.mul(x, fam.inv(x)) == fam.identity());
}

TEST_CASE("B(k,eps) families have order 3^k and satisfy their relations") {
  for (int k : {4, 5}) {
    for (int eps : {1, -1}) {
      BkFamily fam(k, eps);
      CHECK(fam.elements().size() == fam.order());
      CHECK(verify_relations(fam, fam.generators(), fam.relations()).ok());
      for (const auto& w : fam.elements()) REQUIRE(fam.mul(w, fam.inv(w)) == fam.identity());
    }
  }
  CHECK_THROWS_AS(BkFamily(3, -1), PreconditionError);
  CHECK_THROWS_AS(BkFamily(4, 0), PreconditionError);
}

TEST_CASE("B(4,-1) word multiplication is associative, exhaustively") {
  BkFamily fam(4, -1);
  auto elems = fam.elements();
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems)
        REQUIRE(fam.mul(fam.mul(x, y), z) == fam.mul(x, fam.mul(y, z)));
}

TEST_CASE("B(5,eps) associativity on random triples") {
  std::mt19937_64 rng(19);
  for (int eps : {1, -1}) {
    BkFamily fam(5, eps);
    auto elems = fam.elements();
    for (int t = 0; t < 10000; ++t) {
      const auto& x = elems[rng() % elems.size()];
      const auto& y = elems[rng() % elems.size()];
      const auto& z = elems[rng() % elems.size()];
      REQUIRE(fam.mul(fam.mul(x, y), z) == fam.mul(x, fam.mul(y, z)));
    }
  }
}
