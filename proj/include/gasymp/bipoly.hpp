#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "gasymp/unipoly.hpp"

namespace gasymp {

// Sparse polynomial in x, y. Keys are (deg_x, deg_y); no zero coefficients stored.
template <class K>
class BiPoly {
 public:
  using Exp = std::pair<int, int>;
  using Terms = std::map<Exp, K>;

  BiPoly() = default;
  explicit BiPoly(const K& c) { add_term(0, 0, c); }

  static BiPoly constant(const K& c) { return BiPoly(c); }
  static BiPoly monomial(const K& c, int i, int j) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
  }
  static BiPoly x() { return monomial(K(1), 1, 0); }
  static BiPoly y() { return monomial(K(1), 0, 1); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp{0, 0}); }
  std::size_t size() const { return t_.size(); }

  K coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? K(0) : it->second;
  }

  void add_term(int i, int j, const K& c) {
    if (is_zero_k(c)) return;
    auto [it, fresh] = t_.emplace(Exp{i, j}, c);
    if (!fresh) {
      it->second = it->second + c;
      if (is_zero_k(it->second)) t_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
    return d;
  }
  int deg_x() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first);
    return d;
  }
  int deg_y() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.second);
    return d;
  }

  BiPoly homogeneous(int k) const {
    BiPoly p;
    for (const auto& [e, c] : t_)
      if (e.first + e.second == k) p.t_.emplace(e, c);
    return p;
  }

  // Coefficients of y^j as polynomials in x.
  std::vector<UniPoly<K>> y_coeffs() const {
    int dy = deg_y();
    std::vector<std::vector<K>> raw(dy < 0 ? 0 : dy + 1);
    for (const auto& [e, c] : t_) {
      auto& v = raw[e.second];
      if (static_cast<int>(v.size()) <= e.first) v.resize(e.first + 1, K(0));
      v[e.first] = c;
    }
    std::vector<UniPoly<K>> out;
    for (auto& v : raw) out.emplace_back(std::move(v));
    return out;
  }
  static BiPoly from_y_coeffs(const std::vector<UniPoly<K>>& cs) {
    BiPoly p;
    for (std::size_t j = 0; j < cs.size(); ++j)
      for (int i = 0; i <= cs[j].degree(); ++i) p.add_term(i, static_cast<int>(j), cs[j].coeffs()[i]);
    return p;
  }
  std::vector<UniPoly<K>> x_coeffs() const { return swap_xy().y_coeffs(); }

  BiPoly swap_xy() const {
    BiPoly p;
    for (const auto& [e, c] : t_) p.t_.emplace(Exp{e.second, e.first}, c);
    return p;
  }

  template <class V>
  V eval(const V& xv, const V& yv) const {
    // Horner in y over Horner in x
    auto ys = y_coeffs();
    V acc = V(0);
    for (auto it = ys.rbegin(); it != ys.rend(); ++it) acc = acc * yv + it->template eval<V>(xv);
    return acc;
  }

  // Substitute x := x + lambda*y.
  BiPoly shear(const K& lambda) const {
    if (is_zero_k(lambda)) return *this;
    BiPoly lin = x() + BiPoly::monomial(lambda, 0, 1);
    std::vector<BiPoly> powers{BiPoly(K(1))};
    BiPoly out;
    for (const auto& [e, c] : t_) {
      while (static_cast<int>(powers.size()) <= e.first) powers.push_back(powers.back() * lin);
      out += (BiPoly::monomial(c, 0, e.second) * powers[e.first]);
    }
    return out;
  }

  BiPoly dx() const {
    BiPoly p;
    for (const auto& [e, c] : t_)
      if (e.first > 0) p.add_term(e.first - 1, e.second, c * K(static_cast<long>(e.first)));
    return p;
  }
  BiPoly dy() const {
    BiPoly p;
    for (const auto& [e, c] : t_)
      if (e.second > 0) p.add_term(e.first, e.second - 1, c * K(static_cast<long>(e.second)));
    return p;
  }

  template <class F>
  auto map(F&& f) const {
    using R = decltype(f(std::declval<K>()));
    BiPoly<R> p;
    for (const auto& [e, c] : t_) p.add_term(e.first, e.second, f(c));
    return p;
  }

  BiPoly operator-() const {
    BiPoly p;
    for (const auto& [e, c] : t_) p.t_.emplace(e, -c);
    return p;
  }
  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly p;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) p.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return p;
  }
  friend BiPoly operator*(const K& s, const BiPoly& a) {
    BiPoly p;
    for (const auto& [e, c] : a.t_) p.add_term(e.first, e.second, s * c);
    return p;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    for (auto ib = b.t_.begin(); ib != b.t_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      if (!is_zero_k(ia->second - ib->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  // Leading term in the order (deg_y, deg_x) descending.
  std::pair<Exp, K> lead_y() const {
    auto best = t_.begin();
    for (auto it = t_.begin(); it != t_.end(); ++it) {
      if (it->first.second > best->first.second ||
          (it->first.second == best->first.second && it->first.first > best->first.first))
        best = it;
    }
    return *best;
  }

 private:
  static bool is_zero_k(const K& a) {
    using gasymp::is_zero;
    return is_zero(a);
  }

  Terms t_;
};

template <class K>
bool is_zero(const BiPoly<K>& p) {
  return p.is_zero();
}

template <class K>
BiPoly<K> pow(const BiPoly<K>& p, int e) {
  BiPoly<K> acc(K(1)), base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// Exact division (throws when b does not divide a).
template <class K>
BiPoly<K> exact_div(BiPoly<K> a, const BiPoly<K>& b) {
  if (b.is_zero()) throw std::domain_error("bivariate division by zero");
  auto [lb, cb] = b.lead_y();
  BiPoly<K> q;
  while (!a.is_zero()) {
    auto [la, ca] = a.lead_y();
    int i = la.first - lb.first, j = la.second - lb.second;
    if (i < 0 || j < 0) throw std::domain_error("inexact bivariate division");
    K f = ca / cb;
    BiPoly<K> m = BiPoly<K>::monomial(f, i, j);
    q += m;
    a -= m * b;
  }
  return q;
}

template <class K>
bool divides(const BiPoly<K>& b, const BiPoly<K>& a) {
  try {
    (void)exact_div(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

using QBiPoly = BiPoly<Rat>;

// Clears denominators and the integer content; makes the coefficient of the
// highest power of y in the leading form positive.
QBiPoly integer_primitive(const QBiPoly& p);
// Scales so the leading-form monomial with the highest y exponent has coefficient 1.
template <class K>
BiPoly<K> monic_leading_form(const BiPoly<K>& p) {
  if (p.is_zero()) return p;
  int d = p.total_degree();
  auto lf = p.homogeneous(d);
  auto [e, c] = lf.lead_y();
  return (K(1) / c) * p;
}

}  // namespace gasymp
