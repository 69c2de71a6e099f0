#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gasymp/numeric.hpp"

namespace gasymp {

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_zero(const Int& z) { return sgn(z) == 0; }

// Dense univariate polynomial, coefficients ascending. K must be a field-like
// type with +, -, *, / and a free is_zero(K).
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }
  explicit UniPoly(const K& c) : c_{c} { trim(); }

  static UniPoly monomial(const K& c, int deg) {
    std::vector<K> v(deg + 1, K(0));
    v[deg] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K(0); }
  const K& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class V>
  V eval(const V& x) const {
    V acc = V(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  UniPoly derivative() const {
    std::vector<K> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * K(static_cast<long>(i)));
    return UniPoly(std::move(v));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / leading();
    std::vector<K> v;
    for (const auto& a : c_) v.push_back(a * inv);
    return UniPoly(std::move(v));
  }

  UniPoly operator-() const {
    std::vector<K> v;
    for (const auto& a : c_) v.push_back(-a);
    return UniPoly(std::move(v));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (gasymp_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const K& s, const UniPoly& p) {
    std::vector<K> v;
    for (const auto& a : p.c_) v.push_back(s * a);
    return UniPoly(std::move(v));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!gasymp_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // p(x) -> p(x^k)
  UniPoly inflate(int k) const {
    if (is_zero()) return *this;
    std::vector<K> v(static_cast<std::size_t>(degree()) * k + 1, K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return UniPoly(std::move(v));
  }

  // p(x) -> p(x + a)
  UniPoly shift(const K& a) const {
    UniPoly out;
    UniPoly lin(std::vector<K>{a, K(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + UniPoly(*it);
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using R = decltype(f(std::declval<K>()));
    std::vector<R> v;
    for (const auto& a : c_) v.push_back(f(a));
    return UniPoly<R>(std::move(v));
  }

 private:
  static bool gasymp_is_zero(const K& a) {
    using gasymp::is_zero;
    return is_zero(a);
  }
  void trim() {
    while (!c_.empty() && gasymp_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
bool is_zero(const UniPoly<K>& p) {
  return p.is_zero();
}

// Division with remainder over a field.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<K> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly<K>(), a};
  std::vector<K> q(a.degree() - db + 1, K(0));
  K inv = K(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    K f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.coeffs()[j];
    r[i] = K(0);
  }
  r.resize(db > 0 ? db : 0, K(0));
  return {UniPoly<K>(std::move(q)), UniPoly<K>(std::move(r))};
}

template <class K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b) {
  return divmod(a, b).second;
}

// Exact quotient; throws when b does not divide a.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    UniPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> ext_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> r0 = a, r1 = b;
  UniPoly<K> s0(K(1)), s1, t0, t1(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<K> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly<K> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

template <class K>
UniPoly<K> pow(const UniPoly<K>& p, int e) {
  UniPoly<K> acc(K(1)), base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// Yun: returns (P_i, i) with p = lc * prod P_i^i, each P_i monic squarefree.
template <class K>
std::vector<std::pair<UniPoly<K>, int>> squarefree_decomposition(const UniPoly<K>& p) {
  std::vector<std::pair<UniPoly<K>, int>> out;
  if (p.degree() < 1) return out;
  UniPoly<K> a = p.monic();
  UniPoly<K> da = a.derivative();
  UniPoly<K> g = gcd(a, da);
  UniPoly<K> b = exact_div(a, g);
  UniPoly<K> c = exact_div(da, g);
  UniPoly<K> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly<K> h = gcd(b, d);
    b = exact_div(b, h);
    c = exact_div(d, h);
    if (h.degree() > 0) out.emplace_back(h, i);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
  if (p.degree() < 1) return p;
  return exact_div(p.monic(), gcd(p, p.derivative()));
}

using QPoly = UniPoly<Rat>;

}  // namespace gasymp
