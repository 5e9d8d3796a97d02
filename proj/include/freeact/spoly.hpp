#ifndef FREEACT_SPOLY_HPP
#define FREEACT_SPOLY_HPP

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "freeact/cyclo.hpp"

namespace freeact {

// Formal variables of the boundary-sphere coordinate ring: the three
// complex coordinates, their formal conjugates, the width parameter eps,
// and a unit-circle scalar lambda with its conjugate.
enum Var : uint8_t { Z1, Z2, Z3, ZB1, ZB2, ZB3, EPS, LAM, LAMB, NVARS };

std::string var_name(Var v);

struct Monomial {
  std::array<uint8_t, NVARS> e{};
  auto operator<=>(const Monomial&) const = default;
  unsigned degree() const;
  bool divisible_by_pair(Var x, Var y) const { return e[x] > 0 && e[y] > 0; }
};

class SPoly;

// One rewrite step: the variable pair x*y is replaced by rhs.
struct RewriteRule {
  Var x, y;
  const SPoly* rhs;
};

// The boundary constraint system
//   zb1 z1 -> 1 - eps,   zb3 z3 -> eps - zb2 z2,   lam lamb -> 1,
// encoding |z| = 1 intersected with |z2|^2 + |z3|^2 = eps. The first and
// third rules drop degree and the second trades z3-mass for z2-mass, so
// rewriting terminates; zb2 z2 stays irreducible.
class ConstraintSystem {
 public:
  static const ConstraintSystem& boundary_sphere();
  const std::vector<RewriteRule>& rules() const { return rules_; }

 private:
  ConstraintSystem();
  std::vector<SPoly> rhs_store_;
  std::vector<RewriteRule> rules_;
};

// Sparse polynomial over the cyclotomic field in the nine variables
// above, kept fully reduced under the boundary rewrite system (canonical
// sparse form: the zero polynomial has no terms).
class SPoly {
 public:
  SPoly() = default;
  explicit SPoly(const Cyclo& c);
  explicit SPoly(const Rational& r) : SPoly(Cyclo(r)) {}

  static SPoly variable(Var v);
  static SPoly monomial(const Monomial& m, const Cyclo& coeff);
  static SPoly one() { return SPoly(Cyclo::one()); }

  const std::map<Monomial, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SPoly operator+(const SPoly& o) const;
  SPoly operator-(const SPoly& o) const;
  SPoly operator*(const SPoly& o) const;
  SPoly operator-() const;
  SPoly scaled(const Cyclo& c) const;
  bool operator==(const SPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SPoly& o) const { return !(*this == o); }

  // Formal conjugate: conjugate coefficients, swap z/zb and lam/lamb.
  SPoly formal_conj() const;

  // Simultaneous substitution then reduction. The assignment must be
  // conjugation-consistent (image of zb_q equals the formal conjugate of
  // the image of z_q, same for lam/lamb) and must fix eps.
  SPoly substituted(const std::map<Var, SPoly>& assignment) const;

  // Exact evaluation: plug cyclotomic values for z (zb takes conjugates),
  // eps, and lambda.
  Cyclo eval_exact(const std::array<Cyclo, 3>& z, const Cyclo& eps,
                   const Cyclo& lam = Cyclo::one()) const;

  std::complex<double> eval(const std::array<std::complex<double>, 3>& z, double eps,
                            std::complex<double> lam = {1.0, 0.0}) const;

  std::string to_string() const;

  // Worklist normalization; tests shuffle the rule order through
  // reduce_terms_with_order to confirm confluence.
  static SPoly reduce_terms(std::vector<std::pair<Monomial, Cyclo>> terms);
  static SPoly reduce_terms_with_order(std::vector<std::pair<Monomial, Cyclo>> terms,
                                       const std::array<int, 3>& rule_order);

 private:
  friend class ConstraintSystem;
  std::map<Monomial, Cyclo> terms_;
};

// True iff the canonical reduced form is empty. (SPoly values are always
// stored reduced; this is the named acceptance predicate.)
bool is_zero_mod_constraints(const SPoly& p);

}  // namespace freeact

#endif
