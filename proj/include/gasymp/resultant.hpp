#pragma once

#include <stdexcept>
#include <vector>

#include "gasymp/bipoly.hpp"

namespace gasymp {

struct DegenerateResultant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

template <class R>
R ring_div(const R& a, const R& b) {
  return exact_div(a, b);
}
inline Rat ring_div(const Rat& a, const Rat& b) { return a / b; }

}  // namespace detail

// Determinant by fraction-free (Bareiss) elimination. R needs +, -, *, exact_div, is_zero.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  bool neg = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m[p][k])) ++p;
      if (p == n) return R(0);
      std::swap(m[k], m[p]);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = detail::ring_div(v, prev);
      }
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  return neg ? R(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Resultant of two polynomials in t whose coefficients (ascending in t) lie in R.
template <class R>
R sylvester_resultant(std::vector<R> p, std::vector<R> q) {
  auto trim = [](std::vector<R>& v) {
    while (!v.empty() && is_zero(v.back())) v.pop_back();
  };
  trim(p);
  trim(q);
  if (p.empty() || q.empty()) throw DegenerateResultant("resultant of a zero polynomial");
  const int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
  if (m == 0 && n == 0) throw DegenerateResultant("both inputs are constant in t");
  if (m == 0) {
    R acc(1);
    for (int i = 0; i < n; ++i) acc = acc * p[0];
    return acc;
  }
  if (n == 0) {
    R acc(1);
    for (int i = 0; i < m; ++i) acc = acc * q[0];
    return acc;
  }
  const int sz = m + n;
  std::vector<std::vector<R>> s(sz, std::vector<R>(sz, R(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = p[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = q[n - i];
  return bareiss_det(std::move(s));
}

template <class K>
UniPoly<K> resultant(const UniPoly<UniPoly<K>>& p, const UniPoly<UniPoly<K>>& q) {
  return sylvester_resultant(p.coeffs(), q.coeffs());
}

// Res_t(p, q) for p, q in Q[x,y][t], normalized to integer content 1 with a
// positive coefficient on the highest power of y in the leading form.
QBiPoly resultant_sylvester(const std::vector<QBiPoly>& p, const std::vector<QBiPoly>& q);

}  // namespace gasymp
