#ifndef FREEACT_WORDS_HPP
#define FREEACT_WORDS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freeact/rational.hpp"

namespace freeact {

// --------------------------------------------------------------------------
// Gamma: the central extension  1 -> S^1 -> Gamma -> Z/3 x Z/3 -> 1
// with presentation  a^3 = b^3 = [a,z] = [b,z] = 1, [a,b] = omega,
// omega = exp(2 pi i/3). Normal form a^i b^j z^theta, theta in Q/Z.
// --------------------------------------------------------------------------
struct GammaWord {
  int i = 0;               // exponent of a, mod 3
  int j = 0;               // exponent of b, mod 3
  Rational theta = Rational(0);  // circle coordinate in [0,1)

  bool operator==(const GammaWord& o) const { return i == o.i && j == o.j && theta == o.theta; }
  bool operator!=(const GammaWord& o) const { return !(*this == o); }
  bool operator<(const GammaWord& o) const;
  std::string to_string() const;
};

// Group law derived from ab = ba*omega:
// (i1,j1,t1)*(i2,j2,t2) = (i1+i2, j1+j2, t1+t2 - i2*j1/3  mod 1).
GammaWord gamma_mul(const GammaWord& x, const GammaWord& y);
GammaWord gamma_inv(const GammaWord& x);
GammaWord gamma_identity();
// z^theta as a central element.
GammaWord gamma_circle(const Rational& theta);

// --------------------------------------------------------------------------
// Presentation machinery: relations are pairs of words over named
// generators; a word is a product of (generator, exponent) factors.
// --------------------------------------------------------------------------
using GenWord = std::vector<std::pair<std::string, int>>;

struct Relation {
  std::string name;
  GenWord lhs;
  GenWord rhs;  // empty means identity
};

// Commutator [x,y] = x^-1 y^-1 x y as a GenWord.
GenWord commutator(const std::string& x, const std::string& y);

struct RelationReport {
  std::vector<std::string> failed;  // names of violated relations
  bool ok() const { return failed.empty(); }
  std::string to_string() const;
};

// Evaluates every relation under the generator assignment. Ops must supply
// Elt, mul, inv, identity and eq. Failure is data, not an error.
template <class Ops>
RelationReport verify_relations(const Ops& ops,
                                const std::map<std::string, typename Ops::Elt>& gens,
                                const std::vector<Relation>& relations) {
  using Elt = typename Ops::Elt;
  auto eval = [&](const GenWord& w) {
    Elt acc = ops.identity();
    for (const auto& [name, exp] : w) {
      auto it = gens.find(name);
      if (it == gens.end()) throw PreconditionError("relation uses unknown generator: " + name);
      Elt g = exp >= 0 ? it->second : ops.inv(it->second);
      int n = exp >= 0 ? exp : -exp;
      for (int t = 0; t < n; ++t) acc = ops.mul(acc, g);
    }
    return acc;
  };
  RelationReport report;
  for (const auto& rel : relations) {
    Elt lhs = eval(rel.lhs);
    Elt rhs = eval(rel.rhs);
    if (!ops.eq(lhs, rhs)) report.failed.push_back(rel.name);
  }
  return report;
}

// --------------------------------------------------------------------------
// P(k), k >= 3:  a^3 = b^3 = c^{3^{k-2}} = [a,c] = [b,c] = 1,
//                [a,b] = c^{3^{k-3}};  order 3^k.
// Normal form a^i b^j c^m realized inside Gamma via c = z^{1/3^{k-2}}.
// --------------------------------------------------------------------------
struct PkWord {
  int i = 0, j = 0;
  long m = 0;
  auto operator<=>(const PkWord&) const = default;
};

class PkFamily {
 public:
  explicit PkFamily(int k);

  using Elt = PkWord;
  int k() const { return k_; }
  long c_order() const { return c_order_; }  // 3^{k-2}
  unsigned long order() const { return 9UL * static_cast<unsigned long>(c_order_); }

  PkWord identity() const { return {}; }
  PkWord mul(const PkWord& x, const PkWord& y) const;
  PkWord inv(const PkWord& x) const;
  bool eq(const PkWord& x, const PkWord& y) const { return x == y; }

  std::vector<PkWord> elements() const;
  std::map<std::string, PkWord> generators() const;
  std::vector<Relation> relations() const;

  // Injective homomorphism into Gamma: c -> z^{1/3^{k-2}}.
  GammaWord embed(const PkWord& w) const;

  std::string word_string(const PkWord& w) const;

 private:
  int k_;
  long c_order_;
  long twist_;  // 3^{k-3}
};

// --------------------------------------------------------------------------
// E(p):  u^p = v^p = w^3 = [u,v] = 1, [u,w] = u^-2 v^-1, [v,w] = u v^-1;
// order 3 p^2. Normal form u^x v^y w^s; conjugation by w acts on (x, y)
// by M = [[-1, 1], [-1, 0]] (derived from the two commutator relations).
// --------------------------------------------------------------------------
struct EWord {
  long x = 0, y = 0;
  int s = 0;
  auto operator<=>(const EWord&) const = default;
};

class EpFamily {
 public:
  explicit EpFamily(long p);

  using Elt = EWord;
  long p() const { return p_; }
  unsigned long order() const { return 3UL * static_cast<unsigned long>(p_ * p_); }

  EWord identity() const { return {}; }
  EWord mul(const EWord& a, const EWord& b) const;
  EWord inv(const EWord& a) const;
  bool eq(const EWord& a, const EWord& b) const { return a == b; }

  std::vector<EWord> elements() const;
  std::map<std::string, EWord> generators() const;
  std::vector<Relation> relations() const;

  std::string word_string(const EWord& w) const;

 private:
  long p_;
  // Powers of the w-conjugation matrix, mod p: act_[s] applied to (x,y)
  // realizes w^-s (u^x v^y) w^s.
  long act_[3][2][2];
};

// --------------------------------------------------------------------------
// B(k, eps), k >= 4, eps = +-1:
//   a^3 = b^3 = c^{3^{k-2}} = [b,c] = 1, [a,c] = b, [a,b] = c^{eps 3^{k-3}};
// order 3^k. Normal form a^i b^j c^m; conjugation by a sends
// b -> b c^{-eps 3^{k-3}}, c -> b^-1 c.
// --------------------------------------------------------------------------
struct BWord {
  int i = 0, j = 0;
  long m = 0;
  auto operator<=>(const BWord&) const = default;
};

class BkFamily {
 public:
  BkFamily(int k, int eps);

  using Elt = BWord;
  int k() const { return k_; }
  int eps() const { return eps_; }
  long c_order() const { return c_order_; }
  unsigned long order() const { return 9UL * static_cast<unsigned long>(c_order_); }

  BWord identity() const { return {}; }
  BWord mul(const BWord& x, const BWord& y) const;
  BWord inv(const BWord& x) const;
  bool eq(const BWord& x, const BWord& y) const { return x == y; }

  std::vector<BWord> elements() const;
  std::map<std::string, BWord> generators() const;
  std::vector<Relation> relations() const;

  std::string word_string(const BWord& w) const;

 private:
  // (j, m) -> (j - m mod 3, m - eps*3^{k-3}*j mod 3^{k-2}), applied i times.
  void conj_by_a_pow(int times, int& j, long& m) const;

  int k_;
  int eps_;
  long c_order_;
  long twist_;
};

// Relations of Gamma with the circle instantiated at sample central values.
std::vector<Relation> gamma_relations();
std::map<std::string, GammaWord> gamma_generators();

}  // namespace freeact

#endif
