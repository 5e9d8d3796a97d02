#include "freeact/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace freeact {

namespace {

// Dense polynomial helpers over Rational, little-endian coefficients.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// In-place remainder of a by monic divisor d.
void poly_rem_monic(Poly& a, const Poly& d) {
  poly_trim(a);
  const size_t dd = d.size() - 1;  // degree of divisor
  while (a.size() > dd) {
    Rational lead = a.back();
    size_t shift = a.size() - 1 - dd;
    if (lead != 0) {
      for (size_t i = 0; i < dd; ++i) a[shift + i] -= lead * d[i];
    }
    a.pop_back();
    poly_trim(a);
  }
}

// Exact division assuming divisor is monic and divides evenly.
Poly poly_div_monic_exact(Poly a, const Poly& d) {
  poly_trim(a);
  const size_t dd = d.size() - 1;
  if (a.empty()) return {};
  Poly q(a.size() - dd, Rational(0));
  while (a.size() > dd) {
    Rational lead = a.back();
    size_t shift = a.size() - 1 - dd;
    q[shift] = lead;
    for (size_t i = 0; i <= dd; ++i) a[shift + i] -= lead * d[i];
    poly_trim(a);
  }
  if (!a.empty()) throw InternalError("cyclotomic polynomial division not exact");
  return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Extended gcd over Q[x]: returns (g, u) with u*a + v*b = g, g monic.
// Only u is needed (inverse of a modulo b).
std::pair<Poly, Poly> poly_xgcd_u(Poly a, Poly b) {
  Poly u0 = {Rational(1)}, u1 = {};
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // Divide a by b (b not necessarily monic here).
    Poly q;
    Poly r = a;
    poly_trim(r);
    if (r.size() >= b.size()) {
      q.assign(r.size() - b.size() + 1, Rational(0));
      Rational lead_inv = 1 / b.back();
      while (r.size() >= b.size() && !r.empty()) {
        Rational f = r.back() * lead_inv;
        size_t shift = r.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        poly_trim(r);
      }
    }
    // (a, b) <- (b, r); (u0, u1) <- (u1, u0 - q*u1)
    Poly qu = poly_mul(q, u1);
    Poly nu = u0;
    if (nu.size() < qu.size()) nu.resize(qu.size(), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
    poly_trim(nu);
    a = b;
    b = r;
    u0 = u1;
    u1 = nu;
  }
  if (a.empty()) throw DivisionByZeroError{};
  // Normalize g monic, scale u accordingly.
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  for (auto& c : u0) c /= lead;
  return {a, u0};
}

unsigned euler_phi(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace

const std::vector<Rational>& Cyclo::cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_div_monic_exact(std::move(num), cyclotomic_polynomial(d));
  }
  auto [pos, inserted] = cache.emplace(n, std::move(num));
  (void)inserted;
  return pos->second;
}

Cyclo Cyclo::root_of_unity(unsigned n, long k) {
  if (n < 1) throw PreconditionError("root_of_unity requires n >= 1");
  long r = k % static_cast<long>(n);
  if (r < 0) r += n;
  std::vector<Rational> c(n, Rational(0));
  c[static_cast<size_t>(r)] = 1;
  Cyclo x(n, std::move(c));
  x.trim_order();
  return x;
}

void Cyclo::trim_order() {
  // If all support indices share a factor d with the order, the element
  // lies in Q(zeta_{n/d}); shrink the basis.
  unsigned g = order_;
  for (unsigned i = 1; i < order_ && g > 1; ++i)
    if (coeffs_[i] != 0) g = std::gcd(g, i);
  if (g <= 1) return;
  unsigned m = order_ / g;
  std::vector<Rational> c(m, Rational(0));
  for (unsigned i = 0; i < m; ++i) c[i] = coeffs_[static_cast<size_t>(i) * g];
  order_ = m;
  coeffs_ = std::move(c);
}

Cyclo Cyclo::coerced(unsigned m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw PreconditionError("coercion target must be a multiple of the order");
  unsigned step = m / order_;
  std::vector<Rational> c(m, Rational(0));
  for (unsigned i = 0; i < order_; ++i) c[static_cast<size_t>(i) * step] = coeffs_[i];
  return Cyclo(m, std::move(c));
}

Cyclo Cyclo::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return Cyclo(order_, std::move(c));
}

Cyclo Cyclo::conj() const {
  // zeta^k -> zeta^{n-k}: reverse the nonzero part of the index space.
  std::vector<Rational> c(order_, Rational(0));
  c[0] = coeffs_[0];
  for (unsigned i = 1; i < order_; ++i) c[order_ - i] = coeffs_[i];
  return Cyclo(order_, std::move(c));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  unsigned m = std::lcm(a.order_, b.order_);
  Cyclo x = a.coerced(m), y = b.coerced(m);
  for (unsigned i = 0; i < m; ++i) x.coeffs_[i] += y.coeffs_[i];
  x.trim_order();
  return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  unsigned m = std::lcm(a.order_, b.order_);
  Cyclo x = a.coerced(m), y = b.coerced(m);
  std::vector<Rational> c(m, Rational(0));
  for (unsigned i = 0; i < m; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      if (y.coeffs_[j] == 0) continue;
      unsigned k = i + j;
      if (k >= m) k -= m;
      c[k] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  Cyclo r(m, std::move(c));
  r.trim_order();
  return r;
}

std::vector<Rational> Cyclo::reduced() const {
  Poly p(coeffs_);
  poly_rem_monic(p, cyclotomic_polynomial(order_));
  p.resize(euler_phi(order_), Rational(0));
  return p;
}

bool Cyclo::is_zero() const {
  Poly p(coeffs_);
  poly_trim(p);
  if (p.empty()) return true;
  poly_rem_monic(p, cyclotomic_polynomial(order_));
  return p.empty();
}

std::string Cyclo::canonical_key(unsigned m) const {
  Cyclo x = coerced(m);
  Poly p = x.reduced();
  std::ostringstream out;
  for (const auto& c : p) out << c.get_str() << ',';
  return out.str();
}

bool Cyclo::is_rational() const {
  Poly p = reduced();
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] != 0) return false;
  return true;
}

Rational Cyclo::rational_value() const {
  Poly p = reduced();
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] != 0) throw InternalError("expected a rational value: " + to_string());
  return p.empty() ? Rational(0) : p[0];
}

bool Cyclo::is_real() const { return conj() == *this; }

Cyclo Cyclo::inv() const {
  if (is_zero()) throw DivisionByZeroError{};
  Poly p = reduced();
  auto [g, u] = poly_xgcd_u(p, cyclotomic_polynomial(order_));
  if (g.size() != 1) throw InternalError("cyclotomic inverse: gcd not constant");
  poly_rem_monic(u, cyclotomic_polynomial(order_));
  u.resize(order_, Rational(0));
  Cyclo r(order_, std::move(u));
  r.trim_order();
  return r;
}

std::optional<unsigned> Cyclo::multiplicative_order() const {
  Cyclo x = *this;
  const Cyclo unit = Cyclo::one();
  unsigned bound = 2 * order_ * order_ + 2;
  Cyclo acc = x;
  for (unsigned t = 1; t <= bound; ++t) {
    if (acc == unit) return t;
    acc *= x;
  }
  return std::nullopt;
}

std::complex<double> Cyclo::embed() const {
  const long double two_pi = 2.0L * std::acos(-1.0L);
  long double re = 0.0L, im = 0.0L, cre = 0.0L, cim = 0.0L;
  for (unsigned k = 0; k < order_; ++k) {
    if (coeffs_[k] == 0) continue;
    long double c = to_long_double(coeffs_[k]);
    long double ang = two_pi * static_cast<long double>(k) / static_cast<long double>(order_);
    // Kahan-compensated accumulation.
    long double tre = c * std::cos(ang) - cre;
    long double sre = re + tre;
    cre = (sre - re) - tre;
    re = sre;
    long double tim = c * std::sin(ang) - cim;
    long double sim = im + tim;
    cim = (sim - im) - tim;
    im = sim;
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclo::to_string() const {
  Poly p = reduced();
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << p[i].get_str();
    if (i >= 1) out << "*z" << order_ << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace freeact
