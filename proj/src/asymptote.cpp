#include "gasymp/asymptote.hpp"

#include <limits>
#include <map>
#include <numeric>

#include "gasymp/resultant.hpp"

namespace gasymp {

namespace {

// Truncated power series in s, coefficients ascending, fixed length.
using Series = std::vector<Num>;

Series series_mul(const Series& a, const Series& b) {
  const std::size_t L = a.size();
  Series out(L, Num(0));
  for (std::size_t i = 0; i < L; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < L; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// (1 + v)^alpha for v with zero constant term.
Series series_binomial(const Series& v, const Rat& alpha) {
  const std::size_t L = v.size();
  Series out(L, Num(0)), pw(L, Num(0));
  out[0] = Num(1);
  pw[0] = Num(1);
  Rat coef = 1;
  for (std::size_t i = 1; i < L; ++i) {
    coef = coef * (alpha - Rat(static_cast<long>(i) - 1)) / Rat(static_cast<long>(i));
    pw = series_mul(pw, v);
    for (std::size_t k = 0; k < L; ++k) out[k] += Num(coef) * pw[k];
  }
  return out;
}

Series series_pow(const Series& a, int e) {
  Series out(a.size(), Num(0));
  out[0] = Num(1);
  for (int i = 0; i < e; ++i) out = series_mul(out, a);
  return out;
}

long tau_degree(const Rat& exp, int N) {
  Rat k = exp * N;
  if (k.get_den() != 1) throw std::logic_error("branch exponent outside (1/N)Z");
  return k.get_num().get_si();
}

}  // namespace

bool Asymptote::is_rational() const {
  for (const auto& [e, c] : implicit.terms())
    if (!c.is_rational()) return false;
  return true;
}

std::optional<QBiPoly> Asymptote::rational_implicit() const {
  if (!is_rational()) return std::nullopt;
  return to_qbipoly(implicit);
}

QBiPoly to_qbipoly(const KBiPoly& p) {
  return p.map([](const Num& c) { return c.rational(); });
}

std::vector<RTerm> truncate_branch(const InfinityBranch& B) {
  std::vector<RTerm> out;
  for (const auto& t : B.r_terms)
    if (t.exp >= 0) out.push_back(t);
  return out;
}

std::pair<KPoly, KPoly> build_parametrization(const std::vector<RTerm>& r_tilde, int n) {
  std::vector<Num> py;
  for (const auto& t : r_tilde) {
    Rat e = t.exp * n;
    if (e.get_den() != 1 || sgn(e) < 0) throw std::logic_error("r~(t^n) is not a polynomial");
    long k = e.get_num().get_si();
    if (static_cast<long>(py.size()) <= k) py.resize(k + 1, Num(0));
    py[k] += t.coeff;
  }
  return {KPoly::monomial(Num(1), n), KPoly(py)};
}

KBiPoly implicitize(const KPoly& px, const KPoly& py) {
  std::vector<KBiPoly> p, q;
  for (int i = 0; i <= std::max(0, px.degree()); ++i) p.push_back(KBiPoly(-px.coeff(i)));
  for (int i = 0; i <= std::max(0, py.degree()); ++i) q.push_back(KBiPoly(-py.coeff(i)));
  p[0] += KBiPoly::x();
  q[0] += KBiPoly::y();
  return monic_leading_form(sylvester_resultant(p, q));
}

QBiPoly implicitize(const QPoly& px, const QPoly& py) {
  std::vector<QBiPoly> p, q;
  for (int i = 0; i <= std::max(0, px.degree()); ++i) p.push_back(QBiPoly(Rat(-px.coeff(i))));
  for (int i = 0; i <= std::max(0, py.degree()); ++i) q.push_back(QBiPoly(Rat(-py.coeff(i))));
  p[0] += QBiPoly::x();
  q[0] += QBiPoly::y();
  return resultant_sylvester(p, q);
}

std::optional<QBiPoly> norm_down(const KBiPoly& p) {
  FieldPtr field;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_exact()) return std::nullopt;
    if (c.field() && !field) field = c.field();
  }
  if (!field) return integer_primitive(to_qbipoly(p));
  // p as a polynomial in theta with coefficients in Q[x, y]
  std::vector<QBiPoly> in_theta(field->degree(), QBiPoly());
  for (const auto& [e, c] : p.terms()) {
    if (c.is_rational()) {
      in_theta[0].add_term(e.first, e.second, c.rational());
      continue;
    }
    if (!c.field()->same_as(*field)) return std::nullopt;
    const QPoly& r = c.residue();
    for (int k = 0; k <= r.degree(); ++k) in_theta[k].add_term(e.first, e.second, r.coeff(k));
  }
  while (in_theta.size() > 1 && in_theta.back().is_zero()) in_theta.pop_back();
  if (in_theta.size() == 1) return integer_primitive(in_theta[0]);
  std::vector<QBiPoly> mp;
  for (int k = 0; k <= field->degree(); ++k) mp.push_back(QBiPoly(field->minpoly().coeff(k)));
  return integer_primitive(resultant_sylvester(mp, in_theta));
}

Asymptote build_asymptote(const InfinityBranch& B) {
  Asymptote a;
  a.m = B.point.m;
  a.n = B.n;
  a.r_tilde = truncate_branch(B);
  auto [px, py] = build_parametrization(a.r_tilde, B.n);
  a.px = px;
  a.py = py;
  a.implicit = implicitize(px, py);
  a.field = B.field;
  a.numeric = B.numeric;
  int g = B.n;
  for (int v : B.reduced) g = std::gcd(g, v);
  a.properness_gcd = g;
  return a;
}

KBiPoly unshear(const KBiPoly& p, const Rat& lambda) {
  if (sgn(lambda) == 0) return p;
  return monic_leading_form(p.shear(Num(Rat(-lambda))));
}

Asymptote original_frame_asymptote(const InfinityBranch& B, const Rat& lambda) {
  if (sgn(lambda) == 0) return build_asymptote(B);
  const int N = B.N;
  const Num lam(lambda);
  std::map<long, Num> c;  // tau-degree -> coefficient, z = tau^N
  for (const auto& t : B.r_terms) c[tau_degree(t.exp, N)] += t.coeff;
  auto coeff = [&](long k) {
    auto it = c.find(k);
    return it == c.end() ? Num(0) : it->second;
  };
  const Num m = B.point.m;
  const Num C0 = Num(1) + lam * m;

  Asymptote a;
  a.m = m;
  a.field = B.field;
  a.numeric = B.numeric;

  // x = z + lambda*r(z) = C tau^D (1 + sum_j w_j tau^-j),  y = r(z)
  int D = N;
  Num C = C0;
  std::vector<Num> omega;  // omega[j], j >= 1
  const int L = N + 1;
  omega.assign(L, Num(0));
  if (!C0.is_zero()) {
    for (int j = 1; j < L; ++j) omega[j] = lam * coeff(N - j) / C;
  } else {
    long K = std::numeric_limits<long>::min();
    for (const auto& [k, v] : c)
      if (k < N && !v.is_zero()) K = std::max(K, k);
    if (K <= 0) {
      // x stays bounded along the branch: vertical line x = lambda * c_0
      const Num x0 = lam * coeff(0);
      a.vertical = true;
      a.n = 1;
      a.px = KPoly(x0);
      a.py = KPoly::x();
      a.implicit = implicitize(a.px, a.py);
      return a;
    }
    if (B.exact_above && *B.exact_above * N >= Rat(K - N))
      throw std::runtime_error("branch series too short to revert to the original frame");
    D = static_cast<int>(K);
    C = lam * coeff(K);
    for (int j = 1; j < L; ++j) omega[j] = coeff(K - j) / coeff(K);
  }

  // tau = sigma * u(1/sigma) with u = (1 + sum_j omega_j s^j u^-j)^(-1/D), s = 1/sigma
  Series u(L, Num(0));
  u[0] = Num(1);
  for (int it = 0; it < L; ++it) {
    Series um1 = u;
    um1[0] = Num(0);
    Series uinv = series_binomial(um1, Rat(-1));
    Series w(L, Num(0)), uinv_j(L, Num(0));
    uinv_j[0] = Num(1);
    for (int j = 1; j < L; ++j) {
      uinv_j = series_mul(uinv_j, uinv);
      if (omega[j].is_zero()) continue;
      for (int k = 0; j + k < L; ++k) w[j + k] += omega[j] * uinv_j[k];
    }
    u = series_binomial(w, Rat(-1, D));
  }

  // y(sigma) = sum_k c_k sigma^k u^k, keep sigma^j with j >= 0
  std::vector<Num> p(L, Num(0));
  for (const auto& [k, v] : c) {
    if (k < 0 || v.is_zero()) continue;
    if (k >= L) throw std::logic_error("branch exponent above 1");
    Series uk = series_pow(u, static_cast<int>(k));
    for (long i = 0; i <= k; ++i) p[k - i] += v * uk[i];
  }
  int g = D;
  for (int j = 1; j < L; ++j)
    if (!p[j].is_zero()) g = std::gcd(g, j);
  std::vector<Num> pr;
  for (int j = 0; j < L; j += g) pr.push_back(p[j]);
  a.px = KPoly::monomial(C, D / g);
  a.py = KPoly(pr);
  a.n = std::max(a.px.degree(), a.py.degree());
  a.properness_gcd = 1;
  a.implicit = implicitize(a.px, a.py);
  return a;
}

std::optional<bool> leaf_independence_check(const InfinityBranch& B, int max_ext_degree) {
  if (B.N == 1) return true;
  const int N = B.N, n = B.n, b = B.b;
  const auto rt = truncate_branch(B);
  std::vector<long> Ni, deg;
  for (const auto& t : rt) {
    Ni.push_back(tau_degree(1 - t.exp, N));
    deg.push_back(Rat(t.exp * n).get_num().get_si());
  }
  if (B.numeric) {
    PrecisionGuard guard(std::max(256L, current_bits()));
    for (int s = 1; s < N; ++s)
      for (std::size_t i = 0; i < rt.size(); ++i) {
        Ball base = rt[i].coeff.to_ball();
        Ball leaf = base * Ball(root_of_unity(N, s * Ni[i]), ulp_scale()) *
                    Ball(root_of_unity(N, static_cast<long>(s) * b * deg[i]), ulp_scale());
        if (!(leaf - base).contains_zero()) return false;
      }
    return true;
  }
  Adjoined z;
  try {
    z = adjoin_root_of_unity(B.field, N, max_ext_degree);
  } catch (const DegreeBoundExceeded&) {
    return std::nullopt;
  }
  const Num& zeta = z.alpha;
  for (int s = 1; s < N; ++s) {
    // x component: (c^b t)^n = c^(bn) t^n with c = zeta^s
    if (!(zeta.pow((static_cast<long>(s) * b * n) % N) - Num(1)).is_zero()) return false;
    for (std::size_t i = 0; i < rt.size(); ++i) {
      Num base = embed(rt[i].coeff, z);
      Num leaf = base * zeta.pow((s * Ni[i]) % N);
      Num reparam = leaf * zeta.pow((static_cast<long>(s) * b * deg[i]) % N);
      if (!(reparam - base).is_zero()) return false;
    }
  }
  return true;
}

bool param_on_implicit(const Asymptote& a) {
  std::vector<KPoly> xp{KPoly(Num(1))}, yp{KPoly(Num(1))};
  KPoly acc;
  for (const auto& [e, c] : a.implicit.terms()) {
    while (static_cast<int>(xp.size()) <= e.first) xp.push_back(xp.back() * a.px);
    while (static_cast<int>(yp.size()) <= e.second) yp.push_back(yp.back() * a.py);
    acc += KPoly(c) * xp[e.first] * yp[e.second];
  }
  return is_zero(acc);
}

bool leading_form_ok(const Asymptote& a) {
  if (a.vertical) return a.implicit.total_degree() == 1 && !a.implicit.coeff(1, 0).is_zero() && a.implicit.coeff(0, 1).is_zero();
  // x = C t^D, y = c t^e + ...: the leading form is x^e if e > D, y^D if e < D, else (C y - c x)^D
  const int D = a.px.degree(), e = a.py.degree();
  const int deg = std::max(D, e);
  KBiPoly expect;
  if (e > D) expect = KBiPoly::monomial(Num(1), e, 0);
  else if (e < D) expect = KBiPoly::monomial(Num(1), 0, D);
  else expect = pow(KBiPoly::monomial(a.px.leading(), 0, 1) - KBiPoly::monomial(a.py.leading(), 1, 0), D);
  expect = monic_leading_form(expect);
  KBiPoly top = a.implicit.homogeneous(a.implicit.total_degree());
  return a.implicit.total_degree() == deg && a.n == deg && is_zero(top - expect);
}

}  // namespace gasymp
