#include "freeact/reps.hpp"

namespace freeact {

namespace {

const Cyclo& omega() {
  static const Cyclo w = Cyclo::root_of_unity(3, 1);
  return w;
}

UMatrix cycle_perm3() { return UMatrix::permutation({2, 0, 1}); }

UMatrix diag3(const Cyclo& d1, const Cyclo& d2, const Cyclo& d3) {
  return UMatrix::diagonal({d1, d2, d3});
}

}  // namespace

RepName parse_rep_name(const std::string& s) {
  if (s == "phi") return RepName::Phi;
  if (s == "psi0") return RepName::Psi0;
  if (s == "psi1") return RepName::Psi1;
  if (s == "psi2") return RepName::Psi2;
  if (s == "rho_p3") return RepName::RhoP3;
  if (s == "rho_ep") return RepName::RhoEp;
  if (s == "rho_b4") return RepName::RhoB4;
  if (s == "rho_e2") return RepName::RhoE2;
  throw PreconditionError("unknown representation name: " + s);
}

std::string rep_name_string(RepName name) {
  switch (name) {
    case RepName::Phi: return "phi";
    case RepName::Psi0: return "psi0";
    case RepName::Psi1: return "psi1";
    case RepName::Psi2: return "psi2";
    case RepName::RhoP3: return "rho_p3";
    case RepName::RhoEp: return "rho_ep";
    case RepName::RhoB4: return "rho_b4";
    case RepName::RhoE2: return "rho_e2";
  }
  throw InternalError("unreachable rep name");
}

const UMatrix& RepTable::image(const std::string& gen) const {
  auto it = images.find(gen);
  if (it == images.end())
    throw PreconditionError("representation " + rep_name_string(name) + " has no generator " + gen);
  return it->second;
}

RepTable rep_phi() {
  RepTable t;
  t.name = RepName::Phi;
  t.dim = 3;
  t.images["a"] = cycle_perm3();
  t.images["b"] = diag3(Cyclo::one(), omega(), omega() * omega());
  t.circle = CircleRule::ScalarDiagonal;
  return t;
}

RepTable rep_psi(int which) {
  RepTable t;
  t.dim = 3;
  t.circle = CircleRule::Trivial;
  const Cyclo w = omega(), w2 = omega() * omega(), one = Cyclo::one();
  t.images["a"] = UMatrix::scalar(3, w);
  switch (which) {
    case 0:
      t.name = RepName::Psi0;
      t.images["b"] = diag3(w, w, one);
      break;
    case 1:
      t.name = RepName::Psi1;
      t.images["b"] = diag3(w, w2, w2);
      break;
    case 2:
      t.name = RepName::Psi2;
      t.images["b"] = diag3(w2, one, one);
      break;
    default:
      throw PreconditionError("psi index must be 0, 1 or 2");
  }
  return t;
}

RepTable rep_p3() {
  RepTable t;
  t.name = RepName::RhoP3;
  t.dim = 3;
  t.images["a"] = cycle_perm3();
  t.images["b"] = diag3(Cyclo::one(), omega(), omega() * omega());
  t.images["c"] = UMatrix::scalar(3, omega());
  return t;
}

RepTable rep_ep(long p) {
  if (p < 3 || p % 2 == 0) throw PreconditionError("rep_ep requires an odd prime p");
  RepTable t;
  t.name = RepName::RhoEp;
  t.dim = 3;
  t.param = p;
  if (p == 3) {
    // The diagonal table is unfaithful at p = 3; transport the P(3) table
    // through the isomorphism a -> w, b -> vu, c -> v^-1 u, whose inverse
    // sends u -> b^2 c^2, v -> b^2 c, w -> a.
    RepTable p3 = rep_p3();
    const UMatrix& b = p3.image("b");
    const UMatrix& c = p3.image("c");
    t.images["u"] = b * b * c * c;
    t.images["v"] = b * b * c;
    t.images["w"] = p3.image("a");
    return t;
  }
  Cyclo alpha = Cyclo::root_of_unity(static_cast<unsigned>(p), 1);
  Cyclo beta = Cyclo::root_of_unity(static_cast<unsigned>(p), p - 2);
  t.images["u"] = diag3(alpha, alpha, beta);
  t.images["v"] = diag3(alpha, beta, alpha);
  t.images["w"] = cycle_perm3();
  return t;
}

RepTable rep_b4() {
  RepTable t;
  t.name = RepName::RhoB4;
  t.dim = 3;
  // gamma = zeta_9: a permutes, b = diag(1, gamma^3, gamma^6), c = diag(gamma^5, gamma^8, gamma^5).
  t.images["a"] = cycle_perm3();
  t.images["b"] = diag3(Cyclo::one(), Cyclo::root_of_unity(9, 3), Cyclo::root_of_unity(9, 6));
  t.images["c"] = diag3(Cyclo::root_of_unity(9, 5), Cyclo::root_of_unity(9, 8), Cyclo::root_of_unity(9, 5));
  return t;
}

RepTable rep_e2() {
  RepTable t;
  t.name = RepName::RhoE2;
  t.dim = 4;
  t.param = 2;
  auto a4 = build_a4();
  E2A4Map map = search_e2_map_in_a4(a4);
  if (!map.found) throw InternalError("no E(2) generator images found in A4");
  t.images["u"] = map.u;
  t.images["v"] = map.v;
  t.images["w"] = map.w;
  return t;
}

RepTable rep_build(RepName name, long param) {
  switch (name) {
    case RepName::Phi: return rep_phi();
    case RepName::Psi0: return rep_psi(0);
    case RepName::Psi1: return rep_psi(1);
    case RepName::Psi2: return rep_psi(2);
    case RepName::RhoP3: return rep_p3();
    case RepName::RhoEp: return rep_ep(param == 0 ? 5 : param);
    case RepName::RhoB4: return rep_b4();
    case RepName::RhoE2: return rep_e2();
  }
  throw InternalError("unreachable rep name");
}

UMatrix rep_apply(const RepTable& rep, const GammaWord& w) {
  if (rep.circle == CircleRule::None)
    throw PreconditionError("representation " + rep_name_string(rep.name) + " is not defined on Gamma");
  UMatrix m = rep.image("a").pow(w.i) * rep.image("b").pow(w.j);
  if (rep.circle == CircleRule::ScalarDiagonal && w.theta != 0) {
    // z^theta with theta = num/den acts as the scalar zeta_den^num.
    Cyclo z = Cyclo::root_of_unity(static_cast<unsigned>(w.theta.get_den().get_ui()),
                                   w.theta.get_num().get_si());
    m = m * UMatrix::scalar(3, z);
  }
  return m;
}

UMatrix rep_apply_pk(const RepTable& rep, const PkFamily& fam, const PkWord& w) {
  if (rep.name == RepName::Phi || rep.name == RepName::Psi0 || rep.name == RepName::Psi1 ||
      rep.name == RepName::Psi2)
    return rep_apply(rep, fam.embed(w));
  if (rep.name != RepName::RhoP3) throw PreconditionError("representation/group mismatch");
  if (fam.k() != 3) throw PreconditionError("rho_p3 is a table for P(3)");
  return rep.image("a").pow(w.i) * rep.image("b").pow(w.j) * rep.image("c").pow(w.m);
}

UMatrix rep_apply_ep(const RepTable& rep, const EWord& w) {
  if (rep.name != RepName::RhoEp && rep.name != RepName::RhoE2)
    throw PreconditionError("representation/group mismatch");
  return rep.image("u").pow(w.x) * rep.image("v").pow(w.y) * rep.image("w").pow(w.s);
}

UMatrix rep_apply_b4(const RepTable& rep, const BWord& w) {
  if (rep.name != RepName::RhoB4) throw PreconditionError("representation/group mismatch");
  return rep.image("a").pow(w.i) * rep.image("b").pow(w.j) * rep.image("c").pow(w.m);
}

std::vector<Relation> rep_source_relations(const RepTable& rep) {
  switch (rep.name) {
    case RepName::Phi:
    case RepName::Psi0:
    case RepName::Psi1:
    case RepName::Psi2:
      return gamma_relations();
    case RepName::RhoP3:
      return PkFamily(3).relations();
    case RepName::RhoEp:
      return EpFamily(rep.param).relations();
    case RepName::RhoB4:
      return BkFamily(4, -1).relations();
    case RepName::RhoE2:
      return EpFamily(2).relations();
  }
  throw InternalError("unreachable rep name");
}

std::map<std::string, UMatrix> rep_relation_images(const RepTable& rep) {
  std::map<std::string, UMatrix> images = rep.images;
  if (rep.circle != CircleRule::None) {
    // Instantiate the circle generators used by the Gamma relation list.
    if (rep.circle == CircleRule::ScalarDiagonal) {
      images["z9"] = UMatrix::scalar(3, Cyclo::root_of_unity(9, 1));
      images["omega"] = UMatrix::scalar(3, Cyclo::root_of_unity(3, 1));
    } else {
      images["z9"] = UMatrix::identity(3);
      images["omega"] = UMatrix::identity(3);
    }
  }
  return images;
}

bool rep_all_unitary(const RepTable& rep) {
  for (const auto& [name, m] : rep.images)
    if (!m.is_unitary()) return false;
  return true;
}

Rational character_inner_product(const Character& chi1, const Character& chi2) {
  if (chi1.values.size() != chi2.values.size())
    throw PreconditionError("characters over different groups");
  Cyclo sum;
  for (size_t i = 0; i < chi1.values.size(); ++i) sum += chi1.values[i] * chi2.values[i].conj();
  if (!sum.is_rational())
    throw InternalError("character inner product sum is not rational: " + sum.to_string());
  Rational total = sum.rational_value() / Rational(static_cast<unsigned long>(chi1.values.size()));
  total.canonicalize();
  if (!is_integer(total) || total < 0)
    throw InternalError("character inner product is not a non-negative integer: " + total.get_str());
  return total;
}

bool is_irreducible(const Character& chi) {
  return character_inner_product(chi, chi) == 1;
}

}  // namespace freeact
