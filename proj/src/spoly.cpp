#include "freeact/spoly.hpp"

#include <sstream>

namespace freeact {

std::string var_name(Var v) {
  static const char* names[] = {"z1", "z2", "z3", "zb1", "zb2", "zb3", "eps", "lam", "lamb"};
  return names[v];
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

ConstraintSystem::ConstraintSystem() {
  rhs_store_.resize(3);
  // 1 - eps
  {
    SPoly& p = rhs_store_[0];
    Monomial one{}, eps{};
    eps.e[EPS] = 1;
    p.terms_[one] = Cyclo::one();
    p.terms_[eps] = Cyclo(-1L);
  }
  // eps - zb2 z2
  {
    SPoly& p = rhs_store_[1];
    Monomial eps{}, pair{};
    eps.e[EPS] = 1;
    pair.e[ZB2] = 1;
    pair.e[Z2] = 1;
    p.terms_[eps] = Cyclo::one();
    p.terms_[pair] = Cyclo(-1L);
  }
  // 1
  {
    SPoly& p = rhs_store_[2];
    p.terms_[Monomial{}] = Cyclo::one();
  }
  rules_ = {{ZB1, Z1, &rhs_store_[0]}, {ZB3, Z3, &rhs_store_[1]}, {LAM, LAMB, &rhs_store_[2]}};
}

const ConstraintSystem& ConstraintSystem::boundary_sphere() {
  static const ConstraintSystem system;
  return system;
}

SPoly SPoly::reduce_terms_with_order(std::vector<std::pair<Monomial, Cyclo>> work,
                                     const std::array<int, 3>& rule_order) {
  const auto& rules = ConstraintSystem::boundary_sphere().rules();
  SPoly out;
  while (!work.empty()) {
    auto [m, c] = work.back();
    work.pop_back();
    if (c.is_zero()) continue;
    int applied = -1;
    for (int ri : rule_order) {
      if (m.divisible_by_pair(rules[ri].x, rules[ri].y)) {
        applied = ri;
        break;
      }
    }
    if (applied < 0) {
      auto it = out.terms_.find(m);
      if (it == out.terms_.end()) {
        out.terms_.emplace(m, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
      continue;
    }
    const RewriteRule& rule = rules[applied];
    Monomial rest = m;
    --rest.e[rule.x];
    --rest.e[rule.y];
    for (const auto& [rm, rc] : rule.rhs->terms()) {
      Monomial prod = rest;
      for (int v = 0; v < NVARS; ++v) prod.e[v] = static_cast<uint8_t>(prod.e[v] + rm.e[v]);
      work.emplace_back(prod, c * rc);
    }
  }
  return out;
}

SPoly SPoly::reduce_terms(std::vector<std::pair<Monomial, Cyclo>> terms) {
  return reduce_terms_with_order(std::move(terms), {0, 1, 2});
}

SPoly::SPoly(const Cyclo& c) {
  if (!c.is_zero()) terms_[Monomial{}] = c;
}

SPoly SPoly::variable(Var v) {
  Monomial m;
  m.e[v] = 1;
  return monomial(m, Cyclo::one());
}

SPoly SPoly::monomial(const Monomial& m, const Cyclo& coeff) {
  return reduce_terms({{m, coeff}});
}

SPoly SPoly::operator+(const SPoly& o) const {
  // Both operands are reduced; merging cannot create reducible monomials.
  SPoly out = *this;
  for (const auto& [m, c] : o.terms_) {
    auto it = out.terms_.find(m);
    if (it == out.terms_.end()) {
      out.terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

SPoly SPoly::operator-() const {
  SPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SPoly SPoly::operator-(const SPoly& o) const { return *this + (-o); }

SPoly SPoly::operator*(const SPoly& o) const {
  std::vector<std::pair<Monomial, Cyclo>> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial prod = m1;
      for (int v = 0; v < NVARS; ++v) prod.e[v] = static_cast<uint8_t>(prod.e[v] + m2.e[v]);
      products.emplace_back(prod, c1 * c2);
    }
  }
  return reduce_terms(std::move(products));
}

SPoly SPoly::scaled(const Cyclo& c) const {
  if (c.is_zero()) return SPoly();
  SPoly out = *this;
  for (auto& [m, coeff] : out.terms_) coeff *= c;
  return out;
}

namespace {
Var conj_var(Var v) {
  switch (v) {
    case Z1: return ZB1;
    case Z2: return ZB2;
    case Z3: return ZB3;
    case ZB1: return Z1;
    case ZB2: return Z2;
    case ZB3: return Z3;
    case LAM: return LAMB;
    case LAMB: return LAM;
    default: return v;  // eps is real
  }
}
}  // namespace

SPoly SPoly::formal_conj() const {
  std::vector<std::pair<Monomial, Cyclo>> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial cm;
    for (int v = 0; v < NVARS; ++v) cm.e[conj_var(static_cast<Var>(v))] = m.e[v];
    terms.emplace_back(cm, c.conj());
  }
  return reduce_terms(std::move(terms));
}

SPoly SPoly::substituted(const std::map<Var, SPoly>& assignment) const {
  // Complete the assignment with identities and validate conjugation
  // consistency and eps-fixing.
  std::array<SPoly, NVARS> image;
  for (int v = 0; v < NVARS; ++v) {
    auto it = assignment.find(static_cast<Var>(v));
    image[v] = it != assignment.end() ? it->second : SPoly::variable(static_cast<Var>(v));
  }
  if (image[EPS] != SPoly::variable(EPS))
    throw PreconditionError("substitution must fix the real parameter eps");
  for (auto [v, vb] : {std::pair(Z1, ZB1), std::pair(Z2, ZB2), std::pair(Z3, ZB3),
                       std::pair(LAM, LAMB)}) {
    if (image[v].formal_conj() != image[vb])
      throw PreconditionError("substitution is not conjugation-consistent at " +
                              var_name(static_cast<Var>(v)));
  }

  SPoly out;
  for (const auto& [m, c] : terms_) {
    SPoly term(c);
    for (int v = 0; v < NVARS; ++v)
      for (unsigned t = 0; t < m.e[v]; ++t) term = term * image[v];
    out = out + term;
  }
  return out;
}

Cyclo SPoly::eval_exact(const std::array<Cyclo, 3>& z, const Cyclo& eps, const Cyclo& lam) const {
  std::array<Cyclo, NVARS> val;
  val[Z1] = z[0]; val[Z2] = z[1]; val[Z3] = z[2];
  val[ZB1] = z[0].conj(); val[ZB2] = z[1].conj(); val[ZB3] = z[2].conj();
  val[EPS] = eps;
  val[LAM] = lam;
  val[LAMB] = lam.conj();
  Cyclo acc;
  for (const auto& [m, c] : terms_) {
    Cyclo term = c;
    for (int v = 0; v < NVARS; ++v)
      for (unsigned t = 0; t < m.e[v]; ++t) term *= val[v];
    acc += term;
  }
  return acc;
}

std::complex<double> SPoly::eval(const std::array<std::complex<double>, 3>& z, double eps,
                                 std::complex<double> lam) const {
  std::array<std::complex<double>, NVARS> val;
  val[Z1] = z[0]; val[Z2] = z[1]; val[Z3] = z[2];
  val[ZB1] = std::conj(z[0]); val[ZB2] = std::conj(z[1]); val[ZB3] = std::conj(z[2]);
  val[EPS] = eps;
  val[LAM] = lam;
  val[LAMB] = std::conj(lam);
  std::complex<double> acc = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term = c.embed();
    for (int v = 0; v < NVARS; ++v)
      for (unsigned t = 0; t < m.e[v]; ++t) term *= val[v];
    acc += term;
  }
  return acc;
}

std::string SPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ')';
    for (int v = 0; v < NVARS; ++v)
      for (unsigned t = 0; t < m.e[v]; ++t) out << '*' << var_name(static_cast<Var>(v));
  }
  return out.str();
}

bool is_zero_mod_constraints(const SPoly& p) { return p.is_zero(); }

}  // namespace freeact
