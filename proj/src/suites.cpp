#include "freeact/suites.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "freeact/closure.hpp"
#include "freeact/fixpt.hpp"
#include "freeact/geometry.hpp"
#include "freeact/reps.hpp"
#include "freeact/theta.hpp"

namespace freeact {

namespace {

class SuiteRunner {
 public:
  explicit SuiteRunner(const Config& cfg) : cfg_(cfg) {}

  // Runs one check; exceptions from broken arithmetic propagate (they are
  // internal failures, not certification verdicts).
  void run(const std::string& id, const std::string& claim,
           const std::function<CheckOutcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome = body();
    auto stop = std::chrono::steady_clock::now();
    CheckRecord rec;
    rec.id = id;
    rec.claim = claim;
    rec.status = outcome.certified ? "certified" : "failed";
    rec.witness = outcome.witness;
    rec.time_ns =
        static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    checks_.push_back(std::move(rec));
  }

  void run_bool(const std::string& id, const std::string& claim,
                const std::function<bool()>& body, const std::string& ok_witness = "") {
    run(id, claim, [&]() -> CheckOutcome { return {body(), ok_witness}; });
  }

  void skip(const std::string& id, const std::string& claim, const std::string& why) {
    checks_.push_back({id, claim, "skipped", why, 0});
  }

  std::vector<CheckRecord> take() { return std::move(checks_); }
  const Config& cfg() const { return cfg_; }

 private:
  Config cfg_;
  std::vector<CheckRecord> checks_;
};

long pow3(int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

// ------------------------------------------------------------------ groups

void suite_groups(SuiteRunner& r) {
  const Config& cfg = r.cfg();

  r.run_bool("groups.gamma.relations",
             "a^3 = b^3 = [a,z] = [b,z] = 1, [a,b] = omega",
             [] {
               struct GammaOps {
                 using Elt = GammaWord;
                 GammaWord identity() const { return gamma_identity(); }
                 GammaWord mul(const GammaWord& a, const GammaWord& b) const { return gamma_mul(a, b); }
                 GammaWord inv(const GammaWord& a) const { return gamma_inv(a); }
                 bool eq(const GammaWord& a, const GammaWord& b) const { return a == b; }
               };
               return verify_relations(GammaOps{}, gamma_generators(), gamma_relations()).ok();
             },
             "normal-form word law satisfies the presentation");

  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    r.run("groups.order.P" + std::to_string(k), "group of order 3^k", [k]() -> CheckOutcome {
      PkFamily fam(k);
      unsigned long expected = static_cast<unsigned long>(pow3(k));
      if (fam.elements().size() != expected) return {false, "normal-form count mismatch"};
      if (!verify_relations(fam, fam.generators(), fam.relations()).ok())
        return {false, "presentation violated"};
      RepTable phi = rep_phi();
      UMatrix c_mat = UMatrix::scalar(3, Cyclo::root_of_unity(static_cast<unsigned>(fam.c_order()), 1));
      auto closure =
          FiniteMatrixGroup::closure({phi.image("a"), phi.image("b"), c_mat}, 2 * expected);
      if (closure.size() != expected) return {false, "matrix closure order mismatch"};
      std::ostringstream w;
      w << "normal form and matrix closure both give order " << expected;
      return {true, w.str()};
    });
  }

  for (long p : cfg.primes) {
    r.run("groups.order.E" + std::to_string(p), "group of order 3p^2", [p]() -> CheckOutcome {
      EpFamily fam(p);
      unsigned long expected = 3UL * static_cast<unsigned long>(p * p);
      if (fam.elements().size() != expected) return {false, "normal-form count mismatch"};
      if (!verify_relations(fam, fam.generators(), fam.relations()).ok())
        return {false, "presentation violated"};
      RepTable rho = rep_ep(p);
      auto closure = FiniteMatrixGroup::closure(
          {rho.image("u"), rho.image("v"), rho.image("w")}, 2 * expected);
      if (closure.size() != expected) return {false, "matrix closure order mismatch"};
      std::ostringstream w;
      w << "normal form and matrix closure both give order " << expected;
      return {true, w.str()};
    });
  }

  r.run("groups.order.B4", "a^3 = b^3 = c^{3^{k-2}} = [b,c] = 1, [a,c] = b, [a,b] = c^{eps 3^{k-3}}",
        []() -> CheckOutcome {
          BkFamily fam(4, -1);
          if (fam.elements().size() != 81) return {false, "normal-form count mismatch"};
          if (!verify_relations(fam, fam.generators(), fam.relations()).ok())
            return {false, "presentation violated"};
          RepTable rho = rep_b4();
          auto closure = FiniteMatrixGroup::closure(
              {rho.image("a"), rho.image("b"), rho.image("c")}, 200);
          if (closure.size() != 81) return {false, "matrix closure order mismatch"};
          return {true, "normal form and matrix closure both give order 81"};
        });

  r.run("groups.embed.pk", "take c = e^{2 pi i/3^{k-2}} in S^1", [&cfg]() -> CheckOutcome {
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
      PkFamily fam(k);
      auto elems = fam.elements();
      std::set<GammaWord> images;
      for (const auto& w : elems) images.insert(fam.embed(w));
      if (images.size() != elems.size()) return {false, "embedding not injective"};
      // Homomorphism: exhaustive for k = 3, strided above.
      size_t stride = k == 3 ? 1 : 7;
      for (size_t i = 0; i < elems.size(); i += stride)
        for (size_t j = 0; j < elems.size(); j += stride)
          if (fam.embed(fam.mul(elems[i], elems[j])) !=
              gamma_mul(fam.embed(elems[i]), fam.embed(elems[j])))
            return {false, "embedding is not a homomorphism"};
      // c^{3^{k-3}} is omega.
      if (fam.embed({0, 0, pow3(k - 3)}) != gamma_circle(make_rational(1, 3)))
        return {false, "c^{3^{k-3}} does not hit omega"};
    }
    return {true, "injective homomorphisms with c^{3^{k-3}} = omega"};
  });

  r.run("groups.iso.p3_e3", "a -> w, b -> vu, c -> v^-1 u", []() -> CheckOutcome {
    PkFamily p3(3);
    EpFamily e3(3);
    auto elems = e3.elements();
    std::map<EWord, size_t> index;
    for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    CayleyTable table = CayleyTable::from_family(e3);
    EWord w{0, 0, 1};
    EWord vu = e3.mul({0, 1, 0}, {1, 0, 0});
    EWord vinv_u = e3.mul(e3.inv({0, 1, 0}), {1, 0, 0});
    std::map<std::string, EWord> images{{"a", w}, {"b", vu}, {"c", vinv_u}};
    bool ok = iso_check(p3.relations(), p3.order(), images, e3, table, index);
    return {ok, ok ? "generator map extends to an isomorphism of order-27 groups" : "map fails"};
  });

  r.run("groups.iso.e2_a4", "E(2) is isomorphic to the alternating group A_4",
        []() -> CheckOutcome {
          auto a4 = build_a4();
          if (a4.size() != 12) return {false, "A4 closure has wrong order"};
          E2A4Map map = search_e2_map_in_a4(a4);
          if (!map.found) return {false, "no generator images satisfy the E(2) presentation"};
          return {true, "searched generator map satisfies the presentation and generates A4"};
        });

  auto rank_check = [](const CayleyTable& t, const std::string& label) -> CheckOutcome {
    unsigned rank = elementary_abelian_rank(t, 3);
    if (rank != 2) return {false, label + " has rank " + std::to_string(rank)};
    return {true, label + " contains (Z/3)^2 and no (Z/3)^3; exhaustive search"};
  };
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    r.run("groups.rank.P" + std::to_string(k),
          "does not contain an elementary abelian subgroup of order p^3",
          [k, &rank_check]() -> CheckOutcome {
            return rank_check(CayleyTable::from_family(PkFamily(k)), "P(" + std::to_string(k) + ")");
          });
  }
  r.run("groups.rank.B4", "does not contain an elementary abelian subgroup of order p^3",
        [&rank_check]() -> CheckOutcome {
          return rank_check(CayleyTable::from_family(BkFamily(4, -1)), "B(4,-1)");
        });
}

// ----------------------------------------------------------------- reps

void suite_representations(SuiteRunner& r) {
  const Config& cfg = r.cfg();

  struct Entry {
    std::string label;
    RepTable table;
    std::string claim;
  };
  std::vector<Entry> tables;
  tables.push_back({"phi", rep_phi(), "An irreducible representation phi: Gamma -> U(3)"});
  tables.push_back({"psi0", rep_psi(0), "psi_0: Gamma -> U(3), z -> I"});
  tables.push_back({"psi1", rep_psi(1), "psi_1: Gamma -> U(3), z -> I"});
  tables.push_back({"psi2", rep_psi(2), "psi_2: Gamma -> U(3), z -> I"});
  tables.push_back({"rho_p3", rep_p3(), "a, b, c matrices over omega = e^{2 pi i/3}"});
  for (long p : cfg.primes)
    tables.push_back({"rho_ep.p" + std::to_string(p), rep_ep(p),
                      "alpha = e^{2 pi i/p} and beta = e^{2 pi i(p-2)/p}"});
  tables.push_back({"rho_b4", rep_b4(), "gamma = e^{2 pi i/9} matrices for B(4,-1)"});
  tables.push_back({"rho_e2", rep_e2(), "E(2) as even permutations"});

  for (const auto& entry : tables) {
    r.run("reps.relations." + entry.label, entry.claim, [&entry]() -> CheckOutcome {
      if (!rep_all_unitary(entry.table)) return {false, "a generator image is not unitary"};
      MatrixOps ops{entry.table.dim};
      auto report =
          verify_relations(ops, rep_relation_images(entry.table), rep_source_relations(entry.table));
      if (!report.ok()) return {false, report.to_string()};
      return {true, "unitary images; all relations hold exactly"};
    });
  }

  for (long p : cfg.primes) {
    r.run("reps.det.rho_ep.p" + std::to_string(p), "The groups E(p) are all subgroups of SU(3)",
          [p]() -> CheckOutcome {
            EpFamily fam(p);
            RepTable rho = rep_ep(p);
            auto check = det_check<EpFamily>(
                fam, [&](const EWord& w) { return rep_apply_ep(rho, w); });
            if (!check.all_one) return {false, "det != 1 at " + check.witness};
            return {true, "det = 1 for all 3p^2 elements"};
          });
  }
  r.run("reps.det.rho_b4", "the group B(4,-1) is a subgroup of SU(3)", []() -> CheckOutcome {
    BkFamily fam(4, -1);
    RepTable rho = rep_b4();
    auto check = det_check<BkFamily>(fam, [&](const BWord& w) { return rep_apply_b4(rho, w); });
    if (!check.all_one) return {false, "det != 1 at " + check.witness};
    return {true, "det = 1 for all 81 elements"};
  });
  r.run("reps.det.phi_p3", "phi restricted to P(3) lands in SU(3)", []() -> CheckOutcome {
    PkFamily fam(3);
    RepTable phi = rep_phi();
    auto check =
        det_check<PkFamily>(fam, [&](const PkWord& w) { return rep_apply_pk(phi, fam, w); });
    return {check.all_one, check.all_one ? "det = 1 for all 27 elements" : check.witness};
  });

  r.run("reps.irreducible.phi", "An irreducible representation phi", []() -> CheckOutcome {
    PkFamily fam(3);
    RepTable phi = rep_phi();
    Character chi =
        character<PkFamily>(fam, [&](const PkWord& w) { return rep_apply_pk(phi, fam, w); });
    Rational ip = character_inner_product(chi, chi);
    if (ip != 1) return {false, "<chi,chi> = " + ip.get_str()};
    return {true, "<chi,chi> = 1 over the 27 elements"};
  });
  for (int i : {0, 1, 2}) {
    r.run("reps.reducible.psi" + std::to_string(i),
          "psi_i pulls back from Gamma/S^1 and is reducible over P(3)", [i]() -> CheckOutcome {
            PkFamily fam(3);
            RepTable psi = rep_psi(i);
            Character chi = character<PkFamily>(
                fam, [&](const PkWord& w) { return rep_apply_pk(psi, fam, w); });
            Rational ip = character_inner_product(chi, chi);
            if (!(ip > 1)) return {false, "<chi,chi> = " + ip.get_str()};
            return {true, "<chi,chi> = " + ip.get_str() + " > 1"};
          });
  }

  for (int i : {0, 1, 2}) {
    r.run("reps.factors.psi" + std::to_string(i), "pullback from representations of Gamma/S^1",
          [i]() -> CheckOutcome {
            PkFamily fam(3);
            RepTable psi = rep_psi(i);
            std::function<UMatrix(const PkWord&)> apply = [&psi, &fam](const PkWord& w) {
              return rep_apply_pk(psi, fam, w);
            };
            bool ok = factors_through_quotient<PkWord>(apply, {{0, 0, 1}, {0, 0, 2}});
            return {ok, ok ? "central circle points map to the identity" : "circle image nontrivial"};
          });
  }
  r.run("reps.nofactor.phi", "phi carries the circle as z -> z I", []() -> CheckOutcome {
    PkFamily fam(3);
    RepTable phi = rep_phi();
    std::function<UMatrix(const PkWord&)> apply = [&phi, &fam](const PkWord& w) {
      return rep_apply_pk(phi, fam, w);
    };
    bool factors = factors_through_quotient<PkWord>(apply, {{0, 0, 1}});
    return {!factors, !factors ? "phi(c) = omega I != I" : "phi unexpectedly kills the circle"};
  });

  r.run("reps.conj_p", "P phi(a) P^-1 = phi(a) and P phi(b) P^-1 = phi(a^2 b)",
        []() -> CheckOutcome {
          RepTable phi = rep_phi();
          const UMatrix& m = scaled_p_matrix();
          UMatrix mi = m.conj_transpose();
          bool ok_a = m * phi.image("a") * mi == phi.image("a").scaled(Cyclo(3L));
          UMatrix a2b = phi.image("a").pow(2) * phi.image("b");
          bool ok_b = m * phi.image("b") * mi == a2b.scaled(Cyclo(3L));
          if (!ok_a || !ok_b) return {false, "conjugation identity failed"};
          return {true, "both identities hold exactly (cleared of the 1/3 factor)"};
        });
}

// ------------------------------------------------------------- fixedpoints

void suite_fixedpoints(SuiteRunner& r) {
  const Config& cfg = r.cfg();

  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    r.run("fix.census.P" + std::to_string(k),
          "All elements of Gamma except A_1 u A_2 act freely on X_0",
          [k]() -> CheckOutcome { return verify_census_claims(k); });
  }
  for (int k = cfg.k_min; k <= std::min(cfg.k_max, 4); ++k) {
    r.run("fix.oracle.P" + std::to_string(k),
          "exact census agrees with the floating-point eigenvalue oracle",
          [k]() -> CheckOutcome { return verify_census_oracle(k); });
  }
  r.run("fix.envelope.gamma", "fixed circle values in every coset are cube roots of unity",
        []() -> CheckOutcome { return verify_gamma_envelope(); });
  for (int i : {0, 1, 2}) {
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
      r.run("fix.free.U" + std::to_string(i) + ".P" + std::to_string(k),
            "The Gamma-action on U_i is free",
            [i, k, &cfg]() -> CheckOutcome { return verify_free_on_u(i, k, cfg.epsilon); });
    }
  }
}

// ---------------------------------------------------------------- geometry

void suite_geometry(SuiteRunner& r) {
  const Config& cfg = r.cfg();

  r.run_bool("geo.p_unitary", "P = (1/sqrt 3)[...] in U(3)", [] {
    const UMatrix& m = scaled_p_matrix();
    return m * m.conj_transpose() == UMatrix::scalar(3, Cyclo(3L));
  }, "P P* = I after the tracked scalar squares to 1/3");

  r.run("geo.disjoint.config_eps", "V_1 n V_2 = empty", [&cfg]() -> CheckOutcome {
    return verify_disjointness(cfg.epsilon, cfg.samples.disjointness, cfg.seed);
  });
  Rational second_eps =
      cfg.epsilon == make_rational(1, 16) ? make_rational(49, 625) : make_rational(1, 16);
  r.run("geo.disjoint.second_eps", "V_1 n V_2 = empty", [&cfg, &second_eps]() -> CheckOutcome {
    return verify_disjointness(second_eps, cfg.samples.disjointness, cfg.seed + 1);
  });

  r.run("geo.formula_one",
        "phi(b) P^{i-1} phi(a^k) = P^{i-1} phi(a^{k+i-1}) phi(b) phi(omega^-k)",
        []() -> CheckOutcome {
          for (int i : {1, 2})
            for (int k : {0, 1, 2})
              if (!formula_one_check(i, k))
                return {false, "failed at i=" + std::to_string(i) + ", k=" + std::to_string(k)};
          return {true, "all six (i,k) pairs equal as exact matrices"};
        });

  for (int i : {0, 1, 2}) {
    r.run("geo.invariance.V" + std::to_string(i),
          "the inclusions t_i: V_i -> Y give Gamma-equivariant subspaces",
          [i, &cfg]() -> CheckOutcome {
            return verify_invariance(i, cfg.k_min, cfg.epsilon, cfg.samples.invariance,
                                     cfg.seed + 17 + static_cast<uint64_t>(i));
          });
  }

  r.run("geo.s1_invariance", "membership depends only on coordinate moduli",
        [&cfg]() -> CheckOutcome {
          for (unsigned n : {3u, 9u, 4u, 5u}) {
            Cyclo zeta = Cyclo::root_of_unity(n, 1);
            for (const auto& p : structured_test_points(cfg.epsilon)) {
              ExactPoint scaled =
                  make_exact_point({p.z[0] * zeta, p.z[1] * zeta, p.z[2] * zeta});
              if (in_v1(scaled, cfg.epsilon) != in_v1(p, cfg.epsilon) ||
                  in_v2(scaled, cfg.epsilon) != in_v2(p, cfg.epsilon))
                return {false, "classification moved under a circle scalar"};
            }
          }
          return {true, "V1/V2 classification invariant under root-of-unity scaling"};
        });
}

// ------------------------------------------------------------------ gluing

void suite_gluing(SuiteRunner& r) {
  const Config& cfg = r.cfg();

  for (int m : {1, 2}) {
    r.run("glue.theta_su.m" + std::to_string(m), "Theta_m in SU(3)", [m, &cfg]() -> CheckOutcome {
      return verify_theta_special_unitary(m, cfg.samples.gluing_numeric, cfg.seed + 23, cfg.epsilon);
    });
  }
  for (int m : {1, 2}) {
    for (const char* gen : {"a", "b", "lambda"}) {
      r.run(std::string("glue.equiv.") + gen + ".m" + std::to_string(m),
            std::string("alpha is equivariant under ") + gen,
            [gen, m]() -> CheckOutcome { return verify_alpha_equivariance(gen, m); });
    }
  }

  r.run("glue.standard_form",
        "a unique way to write every element of dU_0 as (P^{m-1} phi(a^k) z, w)",
        []() -> CheckOutcome {
          RepTable phi = rep_phi();
          ExactPoint base = make_rational_point(make_rational(24, 25), make_rational(7, 25),
                                                Rational(0));
          // The six orbit translates must decompose back to (m, k).
          Rational eps = make_rational(49, 625);
          int checked = 0;
          for (int m : {1, 2}) {
            for (int k : {0, 1, 2}) {
              ExactPoint moved = apply_matrix(phi.image("a").pow(k), base);
              if (m == 2) moved = apply_matrix(scaled_p_matrix(), moved);
              StandardForm sf = standard_form(moved, eps);
              if (sf.m != m || sf.k != k)
                return {false, "decomposition returned the wrong translate"};
              ++checked;
            }
          }
          // Non-boundary input must be rejected.
          bool rejected = false;
          try {
            standard_form(make_rational_point(Rational(1), Rational(0), Rational(0)), eps);
          } catch (const PreconditionError&) {
            rejected = true;
          }
          if (!rejected) return {false, "interior point was not rejected"};
          return {true, std::to_string(checked) +
                            " translates decomposed uniquely at eps = 49/625; interior rejected"};
        });

  r.run("glue.theta_boundary_identity",
        "Theta_m at the boundary point (24/25, 7/25, 0) with eps = 49/625 is the identity",
        []() -> CheckOutcome {
          ExactPoint z =
              make_rational_point(make_rational(24, 25), make_rational(7, 25), Rational(0));
          Rational eps = make_rational(49, 625);
          for (int m : {1, 2}) {
            auto eval = theta_eval_exact(theta_build(m), z, eps);
            if (!eval) return {false, "normalizer unexpectedly irrational"};
            if (!eval->is_identity()) return {false, "evaluation is not the identity"};
          }
          return {true, "block entries equal sqrt(eps(1-eps)) = 168/625 exactly"};
        });
}

// --------------------------------------------------------------- theorem-a

void suite_theorem_a(SuiteRunner& r) {
  const Config& cfg = r.cfg();

  r.run("thma.disjointness", "V_1 n V_2 = empty", [&cfg]() -> CheckOutcome {
    return verify_disjointness(cfg.epsilon, cfg.samples.disjointness, cfg.seed);
  });
  for (int i : {1, 2, 0}) {
    r.run("thma.invariance.V" + std::to_string(i),
          "the inclusions t_i: V_i -> Y give Gamma-equivariant subspaces",
          [i, &cfg]() -> CheckOutcome {
            return verify_invariance(i, cfg.k_min, cfg.epsilon, cfg.samples.invariance,
                                     cfg.seed + 29 + static_cast<uint64_t>(i));
          });
  }
  r.run("thma.envelope", "fixed circle values in every coset are cube roots of unity",
        []() -> CheckOutcome { return verify_gamma_envelope(); });
  for (int i : {0, 1, 2}) {
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
      r.run("thma.free.U" + std::to_string(i) + ".P" + std::to_string(k),
            "The Gamma-action on U_i is free",
            [i, k, &cfg]() -> CheckOutcome { return verify_free_on_u(i, k, cfg.epsilon); });
    }
  }
  for (int m : {1, 2}) {
    r.run("thma.theta_su.m" + std::to_string(m), "Theta_m in SU(3)", [m, &cfg]() -> CheckOutcome {
      return verify_theta_special_unitary(m, cfg.samples.gluing_numeric, cfg.seed + 31, cfg.epsilon);
    });
    for (const char* gen : {"a", "b", "lambda"}) {
      r.run(std::string("thma.equiv.") + gen + ".m" + std::to_string(m),
            std::string("alpha is equivariant under ") + gen,
            [gen, m]() -> CheckOutcome { return verify_alpha_equivariance(gen, m); });
    }
  }
}

// ------------------------------------------------------- negative controls

void suite_negative_controls(SuiteRunner& r) {
  r.run("neg.rep_corrupt_b", "swapping two diagonal entries of phi(b) breaks [a,b] = omega",
        []() -> CheckOutcome {
          RepTable t = rep_phi();
          const Cyclo w = Cyclo::root_of_unity(3, 1);
          t.images["b"] = UMatrix::diagonal({w, Cyclo::one(), w * w});
          MatrixOps ops{3};
          auto report = verify_relations(ops, rep_relation_images(t), rep_source_relations(t));
          if (report.ok()) return {false, "corruption was NOT detected"};
          return {true, "detected: " + report.to_string()};
        });

  for (int m : {1, 2}) {
    ThetaMatrix good = theta_build(m);
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        if (good.entries.at(row, col).is_zero()) continue;
        std::ostringstream id;
        id << "neg.theta_sign.m" << m << ".r" << row + 1 << "c" << col + 1;
        r.run(id.str(), "a single sign flip in Theta_m is detected",
              [m, row, col]() -> CheckOutcome {
                ThetaMatrix bad = theta_build(m);
                bad.entries.at(row, col) = -bad.entries.at(row, col);
                SPoly eps_norm = SPoly::variable(EPS) * (SPoly::one() - SPoly::variable(EPS));
                PolyMat3 product = bad.entries * bad.entries.conj_transpose();
                PolyMat3 expected;
                expected.at(bad.block_rows[0], bad.block_rows[0]) = eps_norm;
                expected.at(bad.block_rows[1], bad.block_rows[1]) = eps_norm;
                expected.at(bad.constant_pos, bad.constant_pos) = SPoly::one();
                PolyMat3 residual = product - expected;
                SPoly det = bad.entries.at(0, 0) * (bad.entries.at(1, 1) * bad.entries.at(2, 2) -
                                                    bad.entries.at(1, 2) * bad.entries.at(2, 1)) -
                            bad.entries.at(0, 1) * (bad.entries.at(1, 0) * bad.entries.at(2, 2) -
                                                    bad.entries.at(1, 2) * bad.entries.at(2, 0)) +
                            bad.entries.at(0, 2) * (bad.entries.at(1, 0) * bad.entries.at(2, 1) -
                                                    bad.entries.at(1, 1) * bad.entries.at(2, 0));
                SPoly det_residual = det - eps_norm;
                bool detected = !residual.is_zero() || !det_residual.is_zero();
                if (!detected) return {false, "corruption was NOT detected"};
                std::string where = !residual.is_zero()
                                        ? "unitarity residual " + residual.nonzero_entries()
                                        : "determinant residual " + det_residual.to_string();
                return {true, "detected: " + where};
              });
      }
    }
  }

  r.run("neg.iso_bad_map", "a wrong generator image fails the isomorphism check",
        []() -> CheckOutcome {
          PkFamily p3(3);
          EpFamily e3(3);
          auto elems = e3.elements();
          std::map<EWord, size_t> index;
          for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
          CayleyTable table = CayleyTable::from_family(e3);
          EWord w{0, 0, 1};
          EWord vu = e3.mul({0, 1, 0}, {1, 0, 0});
          EWord bad_c = e3.inv(e3.mul(e3.inv({0, 1, 0}), {1, 0, 0}));
          std::map<std::string, EWord> images{{"a", w}, {"b", vu}, {"c", bad_c}};
          bool ok = iso_check(p3.relations(), p3.order(), images, e3, table, index);
          if (ok) return {false, "bad map was NOT rejected"};
          return {true, "bad map rejected"};
        });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"groups",  "representations", "fixedpoints",       "geometry",
          "gluing",  "theorem-a",       "negative-controls", "all"};
}

Report run_suite(const std::string& name, const Config& config) {
  config.validate();
  Report report;
  report.suite = name;
  report.config = config;

  SuiteRunner runner(config);
  if (name == "groups") {
    suite_groups(runner);
  } else if (name == "representations") {
    suite_representations(runner);
  } else if (name == "fixedpoints") {
    suite_fixedpoints(runner);
  } else if (name == "geometry") {
    suite_geometry(runner);
  } else if (name == "gluing") {
    suite_gluing(runner);
  } else if (name == "theorem-a") {
    suite_theorem_a(runner);
  } else if (name == "negative-controls") {
    suite_negative_controls(runner);
  } else if (name == "all") {
    suite_groups(runner);
    suite_representations(runner);
    suite_fixedpoints(runner);
    suite_geometry(runner);
    suite_gluing(runner);
  } else {
    throw PreconditionError("unknown suite: " + name);
  }
  report.checks = runner.take();
  report.sort_by_id();
  return report;
}

}  // namespace freeact
