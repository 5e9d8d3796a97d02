#include "freeact/words.hpp"

#include <sstream>

namespace freeact {

namespace {

int mod3(long v) {
  int r = static_cast<int>(v % 3);
  return r < 0 ? r + 3 : r;
}

long mod(long v, long n) {
  long r = v % n;
  return r < 0 ? r + n : r;
}

long pow3(int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

}  // namespace

bool GammaWord::operator<(const GammaWord& o) const {
  if (i != o.i) return i < o.i;
  if (j != o.j) return j < o.j;
  return theta < o.theta;
}

std::string GammaWord::to_string() const {
  std::ostringstream out;
  out << "a^" << i << " b^" << j << " z^(" << theta.get_str() << ")";
  return out.str();
}

GammaWord gamma_mul(const GammaWord& x, const GammaWord& y) {
  GammaWord r;
  r.i = mod3(x.i + y.i);
  r.j = mod3(x.j + y.j);
  r.theta = mod_one(x.theta + y.theta - Rational(static_cast<long>(y.i) * x.j, 3));
  return r;
}

GammaWord gamma_inv(const GammaWord& x) {
  // (a^i b^j z^t)^-1 = a^-i b^-j z^{-t - ij/3}; the central correction is
  // the cost of reordering b^-j a^-i.
  GammaWord r;
  r.i = mod3(-x.i);
  r.j = mod3(-x.j);
  r.theta = mod_one(-x.theta - Rational(static_cast<long>(x.i) * x.j, 3));
  return r;
}

GammaWord gamma_identity() { return {}; }

GammaWord gamma_circle(const Rational& theta) { return {0, 0, mod_one(theta)}; }

GenWord commutator(const std::string& x, const std::string& y) {
  return {{x, -1}, {y, -1}, {x, 1}, {y, 1}};
}

std::string RelationReport::to_string() const {
  if (ok()) return "all relations hold";
  std::ostringstream out;
  out << "violated:";
  for (const auto& f : failed) out << ' ' << f;
  return out.str();
}

// ---------------------------------------------------------------- P(k) ----

PkFamily::PkFamily(int k) : k_(k) {
  if (k < 3) throw PreconditionError("P(k) requires k >= 3");
  if (k > 12) throw PreconditionError("P(k) enumeration bound exceeded");
  c_order_ = pow3(k - 2);
  twist_ = pow3(k - 3);
}

PkWord PkFamily::mul(const PkWord& x, const PkWord& y) const {
  PkWord r;
  r.i = mod3(x.i + y.i);
  r.j = mod3(x.j + y.j);
  // ab = ba c^{3^{k-3}}: moving a^{y.i} past b^{x.j} costs c^{-y.i * x.j * twist}.
  r.m = mod(x.m + y.m - static_cast<long>(y.i) * x.j * twist_, c_order_);
  return r;
}

PkWord PkFamily::inv(const PkWord& x) const {
  PkWord r{mod3(-x.i), mod3(-x.j), 0};
  PkWord partial = mul(x, r);
  r.m = mod(-partial.m, c_order_);
  return r;
}

std::vector<PkWord> PkFamily::elements() const {
  std::vector<PkWord> out;
  out.reserve(order());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (long m = 0; m < c_order_; ++m) out.push_back({i, j, m});
  return out;
}

std::map<std::string, PkWord> PkFamily::generators() const {
  return {{"a", {1, 0, 0}}, {"b", {0, 1, 0}}, {"c", {0, 0, 1}}};
}

std::vector<Relation> PkFamily::relations() const {
  return {
      {"a^3", {{"a", 3}}, {}},
      {"b^3", {{"b", 3}}, {}},
      {"c^(3^(k-2))", {{"c", static_cast<int>(c_order_)}}, {}},
      {"[a,c]", commutator("a", "c"), {}},
      {"[b,c]", commutator("b", "c"), {}},
      {"[a,b]=c^(3^(k-3))", commutator("a", "b"), {{"c", static_cast<int>(twist_)}}},
  };
}

GammaWord PkFamily::embed(const PkWord& w) const {
  return {w.i, w.j, mod_one(Rational(w.m, c_order_))};
}

std::string PkFamily::word_string(const PkWord& w) const {
  std::ostringstream out;
  out << "a^" << w.i << " b^" << w.j << " c^" << w.m;
  return out.str();
}

// ---------------------------------------------------------------- E(p) ----

EpFamily::EpFamily(long p) : p_(p) {
  if (p < 2) throw PreconditionError("E(p) requires a prime p >= 2");
  // M realizes w^-1 (u^x v^y) w; M^3 = I.
  const long M[2][2] = {{-1, 1}, {-1, 0}};
  act_[0][0][0] = 1; act_[0][0][1] = 0; act_[0][1][0] = 0; act_[0][1][1] = 1;
  for (int s = 1; s < 3; ++s)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        act_[s][r][c] = mod(M[r][0] * act_[s - 1][0][c] + M[r][1] * act_[s - 1][1][c], p_);
}

EWord EpFamily::mul(const EWord& a, const EWord& b) const {
  // u^{x1} v^{y1} w^{s1} u^{x2} v^{y2} w^{s2}
  //   = u^{(x1,y1) + M^{-s1}(x2,y2)} w^{s1+s2};  M^{-s} = M^{3-s}.
  int s_inv = (3 - mod3(a.s)) % 3;
  long x2 = mod(act_[s_inv][0][0] * b.x + act_[s_inv][0][1] * b.y, p_);
  long y2 = mod(act_[s_inv][1][0] * b.x + act_[s_inv][1][1] * b.y, p_);
  return {mod(a.x + x2, p_), mod(a.y + y2, p_), mod3(a.s + b.s)};
}

EWord EpFamily::inv(const EWord& a) const {
  EWord r{0, 0, mod3(-a.s)};
  EWord partial = mul(r, a);  // = u^? v^? w^0
  return mul({mod(-partial.x, p_), mod(-partial.y, p_), 0}, r);
}

std::vector<EWord> EpFamily::elements() const {
  std::vector<EWord> out;
  out.reserve(order());
  for (long x = 0; x < p_; ++x)
    for (long y = 0; y < p_; ++y)
      for (int s = 0; s < 3; ++s) out.push_back({x, y, s});
  return out;
}

std::map<std::string, EWord> EpFamily::generators() const {
  return {{"u", {1, 0, 0}}, {"v", {0, 1, 0}}, {"w", {0, 0, 1}}};
}

std::vector<Relation> EpFamily::relations() const {
  return {
      {"u^p", {{"u", static_cast<int>(p_)}}, {}},
      {"v^p", {{"v", static_cast<int>(p_)}}, {}},
      {"w^3", {{"w", 3}}, {}},
      {"[u,v]", commutator("u", "v"), {}},
      {"[u,w]=u^-2v^-1", commutator("u", "w"), {{"u", -2}, {"v", -1}}},
      {"[v,w]=uv^-1", commutator("v", "w"), {{"u", 1}, {"v", -1}}},
  };
}

std::string EpFamily::word_string(const EWord& w) const {
  std::ostringstream out;
  out << "u^" << w.x << " v^" << w.y << " w^" << w.s;
  return out.str();
}

// ------------------------------------------------------------- B(k,eps) ----

BkFamily::BkFamily(int k, int eps) : k_(k), eps_(eps) {
  if (k < 4) throw PreconditionError("B(k,eps) requires k >= 4");
  if (k > 12) throw PreconditionError("B(k,eps) enumeration bound exceeded");
  if (eps != 1 && eps != -1) throw PreconditionError("B(k,eps) requires eps = +-1");
  c_order_ = pow3(k - 2);
  twist_ = pow3(k - 3);
}

void BkFamily::conj_by_a_pow(int times, int& j, long& m) const {
  // One step: a^-1 b^j c^m a = b^{j-m} c^{m - eps*3^{k-3}*j}.
  for (int t = 0; t < times; ++t) {
    int nj = mod3(static_cast<long>(j) - m);
    long nm = mod(m - static_cast<long>(eps_) * twist_ * j, c_order_);
    j = nj;
    m = nm;
  }
}

BWord BkFamily::mul(const BWord& x, const BWord& y) const {
  // a^{i1} (b^{j1} c^{m1}) a^{i2}  b^{j2} c^{m2}
  //   = a^{i1+i2} (a^{-i2} b^{j1} c^{m1} a^{i2}) b^{j2} c^{m2}
  int j = x.j;
  long m = x.m;
  conj_by_a_pow(mod3(y.i), j, m);
  BWord r;
  r.i = mod3(x.i + y.i);
  r.j = mod3(static_cast<long>(j) + y.j);
  r.m = mod(m + y.m, c_order_);
  return r;
}

BWord BkFamily::inv(const BWord& x) const {
  BWord r{mod3(-x.i), 0, 0};
  BWord partial = mul(r, x);  // = b^? c^? with a-part zero
  BWord tail{0, mod3(-partial.j), mod(-partial.m, c_order_)};
  return mul(tail, r);
}

std::vector<BWord> BkFamily::elements() const {
  std::vector<BWord> out;
  out.reserve(order());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (long m = 0; m < c_order_; ++m) out.push_back({i, j, m});
  return out;
}

std::map<std::string, BWord> BkFamily::generators() const {
  return {{"a", {1, 0, 0}}, {"b", {0, 1, 0}}, {"c", {0, 0, 1}}};
}

std::vector<Relation> BkFamily::relations() const {
  long e = static_cast<long>(eps_) * twist_;
  return {
      {"a^3", {{"a", 3}}, {}},
      {"b^3", {{"b", 3}}, {}},
      {"c^(3^(k-2))", {{"c", static_cast<int>(c_order_)}}, {}},
      {"[b,c]", commutator("b", "c"), {}},
      {"[a,c]=b", commutator("a", "c"), {{"b", 1}}},
      {"[a,b]=c^(eps 3^(k-3))", commutator("a", "b"), {{"c", static_cast<int>(e)}}},
  };
}

std::string BkFamily::word_string(const BWord& w) const {
  std::ostringstream out;
  out << "a^" << w.i << " b^" << w.j << " c^" << w.m;
  return out.str();
}

// ---------------------------------------------------------------- Gamma ----

std::vector<Relation> gamma_relations() {
  // The circle relations are instantiated at the sample central generator z9.
  return {
      {"a^3", {{"a", 3}}, {}},
      {"b^3", {{"b", 3}}, {}},
      {"[a,z]", commutator("a", "z9"), {}},
      {"[b,z]", commutator("b", "z9"), {}},
      {"[a,b]=omega", commutator("a", "b"), {{"omega", 1}}},
  };
}

std::map<std::string, GammaWord> gamma_generators() {
  return {{"a", {1, 0, Rational(0)}},
          {"b", {0, 1, Rational(0)}},
          {"z9", gamma_circle(Rational(1, 9))},
          {"omega", gamma_circle(Rational(1, 3))}};
}

}  // namespace freeact
