// Acceptance suite: the engine's exit criteria, one line per criterion.
// Each criterion checks both the mathematical outcome and its wall-clock
// budget. Usage: acceptance [--cli <path-to-freeact-binary>]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "freeact/closure.hpp"
#include "freeact/fixpt.hpp"
#include "freeact/reps.hpp"
#include "freeact/suites.hpp"
#include "freeact/theta.hpp"

using namespace freeact;

namespace {

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

long pow3(int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

bool crit_orders(std::string& note) {
  for (int k : {3, 4, 5}) {
    PkFamily fam(k);
    unsigned long expected = static_cast<unsigned long>(pow3(k));
    if (fam.elements().size() != expected) return false;
    RepTable phi = rep_phi();
    UMatrix c_mat =
        UMatrix::scalar(3, Cyclo::root_of_unity(static_cast<unsigned>(fam.c_order()), 1));
    if (FiniteMatrixGroup::closure({phi.image("a"), phi.image("b"), c_mat}, 2 * expected).size() !=
        expected)
      return false;
  }
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    EpFamily fam(p);
    unsigned long expected = 3UL * static_cast<unsigned long>(p * p);
    if (fam.elements().size() != expected) return false;
    RepTable rho = rep_ep(p);
    if (FiniteMatrixGroup::closure({rho.image("u"), rho.image("v"), rho.image("w")},
                                   2 * expected)
            .size() != expected)
      return false;
  }
  BkFamily b4(4, -1);
  if (b4.elements().size() != 81) return false;
  RepTable rho = rep_b4();
  if (FiniteMatrixGroup::closure({rho.image("a"), rho.image("b"), rho.image("c")}, 200).size() != 81)
    return false;
  note = "|P(3..5)| = 27, 81, 243; |E(p)| = 3p^2 for p = 3,5,7,11,13; |B(4,-1)| = 81";
  return true;
}

bool crit_relations(std::string& note) {
  std::vector<RepTable> tables{rep_phi(), rep_psi(0), rep_psi(1), rep_psi(2),
                               rep_p3(),  rep_ep(3),  rep_ep(5),  rep_ep(7),
                               rep_ep(11), rep_ep(13), rep_b4(),  rep_e2()};
  for (const auto& t : tables) {
    if (!rep_all_unitary(t)) return false;
    MatrixOps ops{t.dim};
    if (!verify_relations(ops, rep_relation_images(t), rep_source_relations(t)).ok()) return false;
  }
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    EpFamily fam(p);
    RepTable rho = rep_ep(p);
    if (!det_check<EpFamily>(fam, [&](const EWord& w) { return rep_apply_ep(rho, w); }).all_one)
      return false;
  }
  BkFamily bfam(4, -1);
  RepTable rb4 = rep_b4();
  if (!det_check<BkFamily>(bfam, [&](const BWord& w) { return rep_apply_b4(rb4, w); }).all_one)
    return false;
  note = "all eight table kinds verified (rho_ep at p = 3,5,7,11,13); SU(3) certified";
  return true;
}

bool crit_irreducibility(std::string& note) {
  PkFamily fam(3);
  RepTable phi = rep_phi();
  Character chi =
      character<PkFamily>(fam, [&](const PkWord& w) { return rep_apply_pk(phi, fam, w); });
  if (character_inner_product(chi, chi) != 1) return false;
  std::ostringstream n;
  n << "<chi_phi, chi_phi> = 1;";
  for (int i : {0, 1, 2}) {
    RepTable psi = rep_psi(i);
    Character c =
        character<PkFamily>(fam, [&](const PkWord& w) { return rep_apply_pk(psi, fam, w); });
    Rational ip = character_inner_product(c, c);
    if (!(ip > 1)) return false;
    n << " <chi_psi" << i << "> = " << ip.get_str() << ";";
  }
  note = n.str();
  return true;
}

bool crit_isomorphisms(std::string& note) {
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
  if (!iso_check(p3.relations(), p3.order(), images, e3, table, index)) return false;
  auto a4 = build_a4();
  if (!search_e2_map_in_a4(a4).found) return false;
  note = "P(3) = E(3) via a->w, b->vu, c->v^-1 u; E(2) = A4 via searched map";
  return true;
}

bool crit_rank(std::string& note) {
  for (int k : {3, 4, 5})
    if (elementary_abelian_rank(CayleyTable::from_family(PkFamily(k)), 3) != 2) return false;
  if (elementary_abelian_rank(CayleyTable::from_family(BkFamily(4, -1)), 3) != 2) return false;
  note = "rank 2 for P(3), P(4), P(5), B(4,-1); exhaustive commuting-tuple search";
  return true;
}

bool crit_conjugation(std::string& note) {
  RepTable phi = rep_phi();
  const UMatrix& m = scaled_p_matrix();
  UMatrix mi = m.conj_transpose();
  if (!(m * phi.image("a") * mi == phi.image("a").scaled(Cyclo(3L)))) return false;
  UMatrix a2b = phi.image("a").pow(2) * phi.image("b");
  if (!(m * phi.image("b") * mi == a2b.scaled(Cyclo(3L)))) return false;
  for (int i : {1, 2})
    for (int k : {0, 1, 2})
      if (!formula_one_check(i, k)) return false;
  note = "P-conjugation identities and all six rotation-identity instances, exact";
  return true;
}

bool crit_disjointness(std::string& note) {
  auto r1 = verify_disjointness(make_rational(49, 625), 10000, 1729);
  auto r2 = verify_disjointness(make_rational(1, 16), 10000, 1730);
  if (!r1.certified || !r2.certified) return false;
  note = "eps = 49/625 and 1/16 certified; 2 x 10^4 samples, zero counterexamples";
  return true;
}

bool crit_census(std::string& note) {
  Census x0 = product_census(3, Space::X0);
  std::set<PkWord> found;
  for (const auto& e : x0.entries) found.insert(e.word);
  std::set<PkWord> expected;
  for (const auto& w : a1_members(3)) expected.insert(w);
  for (const auto& w : a2_members(3)) expected.insert(w);
  if (expected.size() != 12 || found != expected) return false;
  for (int k : {3, 4}) {
    for (const auto& e : product_census(k, Space::X1).entries)
      if (in_a1(e.word)) return false;
    for (const auto& e : product_census(k, Space::X2).entries)
      if (in_a2(e.word)) return false;
    if (!verify_census_oracle(k).certified) return false;
  }
  note = "X0 census over P(3) = the 12-element set exactly; oracle match on P(3), P(4)";
  return true;
}

bool crit_freeness(std::string& note) {
  for (int k : {3, 4})
    for (int i : {0, 1, 2})
      if (!verify_free_on_u(i, k, make_rational(49, 625)).certified) return false;
  note = "U_0, U_1, U_2 free for P(3) and P(4) at eps = 49/625";
  return true;
}

bool crit_gluing(std::string& note) {
  Rational eps = make_rational(49, 625);
  for (int m : {1, 2}) {
    if (!verify_theta_special_unitary(m, 100, 4242, eps).certified) return false;
    for (const char* gen : {"a", "b", "lambda"})
      if (!verify_alpha_equivariance(gen, m).certified) return false;
  }
  // Negative controls: every single-entry sign flip must be detected.
  Config cfg;
  cfg.samples.disjointness = 10;
  cfg.samples.invariance = 10;
  cfg.samples.gluing_numeric = 10;
  Report neg = run_suite("negative-controls", cfg);
  int theta_controls = 0;
  for (const auto& c : neg.checks) {
    if (c.id.rfind("neg.theta_sign", 0) == 0) {
      ++theta_controls;
      if (c.status != "certified") return false;
    }
  }
  if (theta_controls != 10) return false;  // 5 nonzero entries per Theta
  note = "all Theta and alpha identities reduce to zero; 10/10 sign corruptions detected";
  return true;
}

std::string cli_path;

bool crit_determinism(std::string& note) {
  if (cli_path.empty()) {
    // In-process fallback: two suite runs must serialize identically.
    Config cfg;
    Report a = run_suite("all", cfg);
    Report b = run_suite("all", cfg);
    if (report_to_json(a) != report_to_json(b)) return false;
    note = "two in-process runs byte-identical (CLI path not provided)";
    return true;
  }
  std::string out1 = "/tmp/freeact_det_1.json", out2 = "/tmp/freeact_det_2.json";
  for (const auto& [out, tag] : {std::pair(out1, 1), std::pair(out2, 2)}) {
    std::string cmd = cli_path + " verify all --out " + out + " 2>/dev/null";
    if (std::system(cmd.c_str()) != 0) return false;
    (void)tag;
  }
  std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  if (s1.str().empty() || s1.str() != s2.str()) return false;
  note = "two `verify all` runs produced byte-identical JSON";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  std::vector<Criterion> criteria{
      {1, "group orders by closure and normal form", 30.0, crit_orders},
      {2, "relation certification and SU(3) membership", 10.0, crit_relations},
      {3, "irreducibility of phi, reducibility of psi", 5.0, crit_irreducibility},
      {4, "isomorphisms P(3) = E(3) and E(2) = A4", 10.0, crit_isomorphisms},
      {5, "elementary abelian rank two", 60.0, crit_rank},
      {6, "P-conjugation and rotation identities", 1.0, crit_conjugation},
      {7, "disjointness of V1 and V2", 10.0, crit_disjointness},
      {8, "fixed-point census and oracle agreement", 30.0, crit_census},
      {9, "freeness on U_0, U_1, U_2", 60.0, crit_freeness},
      {10, "gluing identities and negative controls", 60.0, crit_gluing},
      {11, "byte-identical deterministic reports", 120.0, crit_determinism},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    std::string error;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = secs <= c.budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s  criterion %2d  %-48s  %6.2fs/%.0fs%s%s\n", pass ? "PASS" : "FAIL", c.number,
                c.label.c_str(), secs, c.budget_seconds,
                note.empty() ? "" : ("  | " + note).c_str(),
                error.empty() ? "" : ("  | error: " + error).c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
