#ifndef FREEACT_REPS_HPP
#define FREEACT_REPS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "freeact/closure.hpp"
#include "freeact/matrix.hpp"
#include "freeact/words.hpp"

namespace freeact {

// The unitary representations used by the construction, as exact matrix
// tables. phi carries the circle as scalar matrices; the psi_i kill it.
enum class RepName { Phi, Psi0, Psi1, Psi2, RhoP3, RhoEp, RhoB4, RhoE2 };

RepName parse_rep_name(const std::string& s);
std::string rep_name_string(RepName name);

enum class CircleRule { ScalarDiagonal, Trivial, None };

struct RepTable {
  RepName name;
  unsigned dim;
  std::map<std::string, UMatrix> images;
  CircleRule circle = CircleRule::None;
  long param = 0;  // p for RhoEp, otherwise unused

  const UMatrix& image(const std::string& gen) const;
};

// Builders transcribe the fixed matrix tables. rep_ep(3) composes the
// P(3) table with the isomorphism u -> b^2 c^2, v -> b^2 c, w -> a, since
// the alpha/beta diagonal table degenerates at p = 3.
RepTable rep_phi();
RepTable rep_psi(int which);  // 0, 1, 2
RepTable rep_p3();
RepTable rep_ep(long p);
RepTable rep_b4();
RepTable rep_e2();

RepTable rep_build(RepName name, long param = 0);

// Evaluation through the normal form; the homomorphism property is
// guaranteed by relation verification on the generator images.
UMatrix rep_apply(const RepTable& rep, const GammaWord& w);       // Phi, Psi*
UMatrix rep_apply_pk(const RepTable& rep, const PkFamily& fam, const PkWord& w);
UMatrix rep_apply_ep(const RepTable& rep, const EWord& w);
UMatrix rep_apply_b4(const RepTable& rep, const BWord& w);

// Relations of the rep's source group, for verify_relations.
std::vector<Relation> rep_source_relations(const RepTable& rep);
// Generator images keyed to match rep_source_relations.
std::map<std::string, UMatrix> rep_relation_images(const RepTable& rep);

bool rep_all_unitary(const RepTable& rep);

// Character of a representation over an enumerated finite group, stored in
// enumeration order.
struct Character {
  std::vector<Cyclo> values;
  unsigned dim = 0;
};

template <class Family>
Character character(const Family& fam, const std::function<UMatrix(const typename Family::Elt&)>& apply) {
  Character chi;
  auto elems = fam.elements();
  chi.values.reserve(elems.size());
  for (const auto& w : elems) {
    UMatrix m = apply(w);
    chi.dim = m.dim();
    chi.values.push_back(m.trace());
  }
  return chi;
}

// (1/|G|) sum chi1(g) * conj(chi2(g)); must come out a non-negative
// rational integer for genuine characters (hard failure otherwise).
Rational character_inner_product(const Character& chi1, const Character& chi2);

bool is_irreducible(const Character& chi);

// True iff every listed element maps to the identity matrix.
template <class Word>
bool factors_through_quotient(const std::function<UMatrix(const Word&)>& apply,
                              const std::vector<Word>& central) {
  for (const auto& w : central)
    if (!apply(w).is_identity()) return false;
  return true;
}

// det(image) == 1 for every enumerated element; witness names the first
// offender.
struct DetCheck {
  bool all_one = true;
  std::string witness;
};

template <class Family>
DetCheck det_check(const Family& fam, const std::function<UMatrix(const typename Family::Elt&)>& apply) {
  DetCheck out;
  for (const auto& w : fam.elements()) {
    if (apply(w).det() != Cyclo::one()) {
      out.all_one = false;
      out.witness = fam.word_string(w);
      return out;
    }
  }
  return out;
}

}  // namespace freeact

#endif
