#include <algorithm>
#include <random>

#include "doctest.h"
#include "freeact/sampling.hpp"
#include "freeact/spoly.hpp"

using namespace freeact;

namespace {
const Cyclo kOmega = Cyclo::root_of_unity(3, 1);

SPoly var(Var v) { return SPoly::variable(v); }

SPoly random_poly(std::mt19937_64& rng, int max_terms = 6) {
  std::vector<std::pair<Monomial, Cyclo>> terms;
  int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_terms));
  for (int t = 0; t < n; ++t) {
    Monomial m;
    for (int reps = 0; reps < 4; ++reps) m.e[rng() % NVARS] += rng() % 2;
    long num = static_cast<long>(rng() % 19) - 9;
    Cyclo c = Cyclo(make_rational(num == 0 ? 1 : num, 1 + static_cast<long>(rng() % 4)));
    if (rng() % 3 == 0) c *= Cyclo::root_of_unity(3, static_cast<long>(rng() % 3));
    terms.emplace_back(m, c);
  }
  return SPoly::reduce_terms(std::move(terms));
}
}  // namespace

TEST_CASE("the three rewrite rules fire directly") {
  CHECK(var(ZB1) * var(Z1) == SPoly::one() - var(EPS));
  CHECK(var(ZB3) * var(Z3) + var(ZB2) * var(Z2) == var(EPS));
  CHECK(var(LAM) * var(LAMB) == SPoly::one());
  // zb2 z2 is irreducible.
  SPoly mid = var(ZB2) * var(Z2);
  CHECK(mid.terms().size() == 1);
}

TEST_CASE("the sphere relation reduces to zero") {
  SPoly sphere = var(ZB1) * var(Z1) + var(ZB2) * var(Z2) + var(ZB3) * var(Z3) - SPoly::one();
  CHECK(is_zero_mod_constraints(sphere));
  CHECK_FALSE(is_zero_mod_constraints(var(Z1) - var(Z2)));
  SPoly cleared = var(ZB1) * var(Z1) * var(EPS) - (SPoly::one() - var(EPS)) * var(EPS);
  CHECK(is_zero_mod_constraints(cleared));
}

TEST_CASE("additive inverses cancel for random polynomials") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    SPoly p = random_poly(rng);
    CHECK(is_zero_mod_constraints(p + (-p)));
    CHECK(p - p == SPoly());
  }
}

TEST_CASE("ring laws hold on random polynomials") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 60; ++t) {
    SPoly p = random_poly(rng, 4), q = random_poly(rng, 4), r = random_poly(rng, 4);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("reduction is confluent under shuffled rule orders") {
  std::mt19937_64 rng(47);
  std::array<std::array<int, 3>, 6> orders{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::pair<Monomial, Cyclo>> terms;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int u = 0; u < n; ++u) {
      Monomial m;
      for (int reps = 0; reps < 6; ++reps) m.e[rng() % NVARS] += rng() % 2;
      terms.emplace_back(m, Cyclo(make_rational(static_cast<long>(rng() % 17) - 8, 1)));
    }
    SPoly reference = SPoly::reduce_terms_with_order(terms, orders[0]);
    for (size_t o = 1; o < orders.size(); ++o)
      CHECK(SPoly::reduce_terms_with_order(terms, orders[o]) == reference);
  }
}

TEST_CASE("substitution matches the hand-expanded twists") {
  // zb1 z2 under z2 -> w z2 (and zb2 -> w^2 zb2) picks up a factor w.
  SPoly p = var(ZB1) * var(Z2);
  std::map<Var, SPoly> twist{{Z2, var(Z2).scaled(kOmega)}, {ZB2, var(ZB2).scaled(kOmega * kOmega)}};
  CHECK(p.substituted(twist) == p.scaled(kOmega));

  // Identity substitution is the identity.
  std::mt19937_64 rng(53);
  for (int t = 0; t < 50; ++t) {
    SPoly q = random_poly(rng);
    CHECK(q.substituted({}) == q);
  }

  // zb1 z1 with z1 -> lam z1 collapses through lam lamb -> 1.
  SPoly n1 = var(ZB1) * var(Z1);
  std::map<Var, SPoly> scale{{Z1, var(LAM) * var(Z1)}, {ZB1, var(LAMB) * var(ZB1)}};
  CHECK(n1.substituted(scale) == SPoly::one() - var(EPS));
}

TEST_CASE("conjugation-inconsistent substitutions are rejected") {
  SPoly p = var(ZB1) * var(Z2);
  std::map<Var, SPoly> bad{{Z2, var(Z2).scaled(kOmega)}, {ZB2, var(ZB2).scaled(kOmega)}};
  CHECK_THROWS_AS(p.substituted(bad), PreconditionError);
  std::map<Var, SPoly> bad_eps{{EPS, SPoly::one()}};
  CHECK_THROWS_AS(p.substituted(bad_eps), PreconditionError);
}

TEST_CASE("formal conjugation is an involution compatible with products") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 100; ++t) {
    SPoly p = random_poly(rng), q = random_poly(rng);
    CHECK(p.formal_conj().formal_conj() == p);
    CHECK((p * q).formal_conj() == p.formal_conj() * q.formal_conj());
    CHECK((p + q).formal_conj() == p.formal_conj() + q.formal_conj());
  }
}

TEST_CASE("reduction is numerically sound on boundary points") {
  std::mt19937_64 rng(61);
  DetRng sampler(4242);
  const double eps = 49.0 / 625.0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::pair<Monomial, Cyclo>> terms;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int u = 0; u < n; ++u) {
      Monomial m;
      for (int reps = 0; reps < 5; ++reps) m.e[rng() % NVARS] += rng() % 2;
      terms.emplace_back(m, Cyclo(make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3))));
    }
    SPoly reduced = SPoly::reduce_terms(terms);
    // Raw (unreduced) evaluation must agree with the reduced form at any
    // point satisfying the constraints.
    auto z = sampler.tube_point(eps, true);
    std::complex<double> lam = sampler.unit_phase();
    std::complex<double> raw = 0;
    for (const auto& [m, c] : terms) {
      std::complex<double> term = c.embed();
      std::array<std::complex<double>, NVARS> val{
          z[0], z[1], z[2], std::conj(z[0]), std::conj(z[1]), std::conj(z[2]), eps, lam, std::conj(lam)};
      for (int v = 0; v < NVARS; ++v)
        for (unsigned e = 0; e < m.e[v]; ++e) term *= val[v];
      raw += term;
    }
    CHECK(std::abs(raw - reduced.eval(z, eps, lam)) < 1e-10);
  }
}

TEST_CASE("exact evaluation agrees with numeric embedding") {
  std::mt19937_64 rng(67);
  // Pythagorean boundary point at eps = 49/625.
  std::array<Cyclo, 3> z{Cyclo(make_rational(24, 25)), Cyclo(make_rational(7, 25)), Cyclo()};
  Cyclo eps(make_rational(49, 625));
  for (int t = 0; t < 50; ++t) {
    SPoly p = random_poly(rng);
    Cyclo exact = p.eval_exact(z, eps);
    std::array<std::complex<double>, 3> zn{std::complex<double>(24.0 / 25, 0),
                                           std::complex<double>(7.0 / 25, 0), {0, 0}};
    CHECK(std::abs(exact.embed() - p.eval(zn, 49.0 / 625.0)) < 1e-10);
  }
}
