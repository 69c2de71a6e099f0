#include "gasymp/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gasymp {

namespace {

using ZPoly = std::vector<Int>;
using MPoly = std::vector<std::uint64_t>;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------- arithmetic mod a small prime ----------

void mtrim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

MPoly msub(const MPoly& a, const MPoly& b, u64 p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  mtrim(r);
  return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  mtrim(r);
  return r;
}

std::pair<MPoly, MPoly> mdivmod(MPoly a, const MPoly& b, u64 p) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  MPoly q(a.size() - b.size() + 1, 0);
  u64 inv = invmod(b.back(), p);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    u64 f = mulmod(a[i], inv, p);
    q[i - (b.size() - 1)] = f;
    if (!f) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i - (b.size() - 1) + j;
      a[k] = (a[k] + p - mulmod(f, b[j], p)) % p;
    }
  }
  a.resize(b.size() - 1);
  mtrim(a);
  mtrim(q);
  return {q, a};
}

MPoly mmonic(MPoly a, u64 p) {
  if (a.empty()) return a;
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

MPoly mgcd(MPoly a, MPoly b, u64 p) {
  while (!b.empty()) {
    MPoly r = mdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void mext_gcd(const MPoly& a, const MPoly& b, u64 p, MPoly& s, MPoly& t) {
  MPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mdivmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    MPoly s2 = msub(s0, mmul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    MPoly t2 = msub(t0, mmul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("Hensel factors are not coprime mod p");
  u64 inv = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  s = s0;
  t = t0;
}

MPoly mderiv(const MPoly& a, u64 p) {
  MPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mulmod(a[i], i % p, p));
  mtrim(r);
  return r;
}

MPoly mpowmod(MPoly base, const Int& e, const MPoly& mod, u64 p) {
  MPoly r{1};
  base = mdivmod(base, mod, p).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mdivmod(mmul(r, r, p), mod, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mdivmod(mmul(r, base, p), mod, p).second;
  }
  return r;
}

MPoly to_mod(const ZPoly& a, u64 p) {
  MPoly r;
  for (const auto& c : a) r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  mtrim(r);
  return r;
}

void equal_degree_split(const MPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<MPoly>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  for (;;) {
    MPoly a(n);
    for (auto& c : a) c = rng() % p;
    mtrim(a);
    if (a.size() < 2) continue;
    MPoly b = msub(mpowmod(a, e, g, p), MPoly{1}, p);
    MPoly h = mgcd(g, b, p);
    int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0 && dh < n) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(mdivmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

// Irreducible monic factors of a monic squarefree polynomial mod p.
std::vector<MPoly> factor_mod(MPoly g, u64 p) {
  std::mt19937_64 rng(0x5eed1234u + p);
  std::vector<MPoly> out;
  MPoly x{0, 1};
  MPoly h = x;
  for (int i = 1; 2 * i <= static_cast<int>(g.size()) - 1; ++i) {
    h = mpowmod(h, Int(static_cast<unsigned long>(p)), g, p);
    MPoly gi = mgcd(g, msub(h, x, p), p);
    if (gi.size() > 1) {
      equal_degree_split(gi, i, p, rng, out);
      g = mdivmod(g, gi, p).first;
      h = mdivmod(h, g, p).second;
    }
  }
  if (g.size() > 1) out.push_back(g);
  return out;
}

// ---------- integer polynomials ----------

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmod(ZPoly a, const Int& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zsym(ZPoly a, const Int& m) {
  Int half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

ZPoly from_mod(const MPoly& a) {
  ZPoly r;
  for (auto c : a) r.push_back(Int(static_cast<unsigned long>(c)));
  return r;
}

Int zcontent(const ZPoly& a) {
  Int g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly a) {
  Int g = zcontent(a);
  if (sgn(g) == 0) return a;
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

bool zdivexact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (a.size() < b.size()) return a.empty();
  ZPoly r = a;
  q.assign(a.size() - b.size() + 1, Int(0));
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Int f = r[i] / b.back();
    q[i - (b.size() - 1)] = f;
    for (std::size_t j = 0; j < b.size(); ++j) r[i - (b.size() - 1) + j] -= f * b[j];
  }
  for (const auto& c : r)
    if (sgn(c) != 0) return false;
  ztrim(q);
  return true;
}

// ---------- Hensel lifting ----------

// f = g*h mod p with g monic; returns (G, H) with f = G*H mod p^k and G monic.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const MPoly& g0, const MPoly& h0, u64 p, int k,
                                    const Int& pk) {
  MPoly s, t;
  mext_gcd(g0, h0, p, s, t);
  ZPoly g = from_mod(g0), h = from_mod(h0);
  h.back() = f.back();
  h = zmod(h, pk);
  Int pj = static_cast<unsigned long>(p);
  for (int j = 1; j < k; ++j) {
    ZPoly e = zmod(zmul(g, h), pk);
    ZPoly fe = zmod(f, pk);
    e.resize(std::max(e.size(), fe.size()), Int(0));
    for (std::size_t i = 0; i < fe.size(); ++i) e[i] = fe[i] - e[i];
    e = zmod(e, pk);
    if (e.empty()) break;
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    MPoly em = to_mod(e, p);
    MPoly sigma = mdivmod(mmul(t, em, p), g0, p).second;
    auto [tau, rem] = mdivmod(msub(em, mmul(h0, sigma, p), p), g0, p);
    if (!rem.empty()) throw std::logic_error("Hensel step: inexact division");
    ZPoly zs = from_mod(sigma), zt = from_mod(tau);
    g.resize(std::max(g.size(), zs.size()), Int(0));
    for (std::size_t i = 0; i < zs.size(); ++i) g[i] += pj * zs[i];
    h.resize(std::max(h.size(), zt.size()), Int(0));
    for (std::size_t i = 0; i < zt.size(); ++i) h[i] += pj * zt[i];
    g = zmod(g, pk);
    h = zmod(h, pk);
    pj *= static_cast<unsigned long>(p);
  }
  return {g, h};
}

std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<MPoly>& us, u64 p, int k, const Int& pk) {
  if (us.size() == 1) {
    Int inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
    ZPoly m = f;
    for (auto& c : m) c *= inv;
    return {zmod(m, pk)};
  }
  std::size_t half = us.size() / 2;
  std::vector<MPoly> left(us.begin(), us.begin() + half), right(us.begin() + half, us.end());
  MPoly g0{1}, h0{mpz_fdiv_ui(f.back().get_mpz_t(), p)};
  for (const auto& u : left) g0 = mmul(g0, u, p);
  for (const auto& u : right) h0 = mmul(h0, u, p);
  auto [g, h] = hensel_pair(f, g0, h0, p, k, pk);
  auto a = hensel_multi(g, left, p, k, pk);
  auto b = hensel_multi(h, right, p, k, pk);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 2 with f(0) != 0.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  // pick the prime giving the fewest modular factors among a few candidates
  u64 best_p = 0;
  std::vector<MPoly> best;
  int tried = 0;
  for (u64 p = 5; tried < 5; p += 2) {
    if (!is_prime_small(p)) continue;
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    MPoly fm = to_mod(f, p);
    MPoly d = mderiv(fm, p);
    if (d.empty() || mgcd(fm, d, p).size() != 1) continue;
    auto fac = factor_mod(mmonic(fm, p), p);
    ++tried;
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best.size() <= 1) return {f};
  const u64 p = best_p;

  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Int bound = norm * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
  int k = 1;
  Int pk = static_cast<unsigned long>(p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_multi(f, best, p, k, pk);

  std::vector<ZPoly> found;
  std::vector<int> idx(lifted.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  for (int s = 1; 2 * s <= static_cast<int>(idx.size());) {
    bool hit = false;
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    const int r = static_cast<int>(idx.size());
    while (true) {
      ZPoly g{f.back()};
      for (int c : comb) g = zmod(zmul(g, lifted[idx[c]]), pk);
      g = zprimitive(zsym(g, pk));
      ZPoly q;
      if (g.size() > 1 && zdivexact(f, g, q)) {
        found.push_back(g);
        f = q;
        std::vector<int> rest;
        for (int i = 0; i < r; ++i)
          if (std::find(comb.begin(), comb.end(), i) == comb.end()) rest.push_back(idx[i]);
        idx = rest;
        hit = true;
        break;
      }
      int i = s - 1;
      while (i >= 0 && comb[i] == r - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (f.size() > 1) found.push_back(zprimitive(f));
  return found;
}

QPoly zpoly_to_monic(const ZPoly& z) {
  std::vector<Rat> v;
  for (const auto& c : z) v.emplace_back(c);
  return QPoly(std::move(v)).monic();
}

ZPoly to_zpoly(const QPoly& u) {
  QPoly p = primitive_integer(u);
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(c.get_num());
  return z;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

QPoly primitive_integer(const QPoly& u) {
  if (u.is_zero()) return u;
  Int den = 1, num = 0;
  for (const auto& c : u.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat s(den, num);
  s.canonicalize();
  if (sgn(u.leading()) < 0) s = -s;
  return s * u;
}

std::vector<QPoly> factor_squarefree_rational(const QPoly& u) {
  std::vector<QPoly> out;
  if (u.degree() < 1) return out;
  if (u.degree() == 1) return {u.monic()};
  ZPoly f = to_zpoly(u);
  if (sgn(f[0]) == 0) {
    out.push_back(QPoly::x());
    f.erase(f.begin());
  }
  if (f.size() == 2) {
    out.push_back(zpoly_to_monic(f));
  } else if (f.size() > 2) {
    for (const auto& g : zassenhaus(f)) out.push_back(zpoly_to_monic(g));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<QFactor> factor_rational(const QPoly& u) {
  if (u.is_zero()) throw std::invalid_argument("factor_rational: zero polynomial");
  std::vector<QFactor> out;
  for (const auto& [p, m] : squarefree_decomposition(u))
    for (auto& g : factor_squarefree_rational(p)) out.push_back({g, m});
  std::sort(out.begin(), out.end(), [](const QFactor& a, const QFactor& b) {
    if (a.poly != b.poly) return poly_less(a.poly, b.poly);
    return a.mult < b.mult;
  });
  return out;
}

bool is_irreducible_rational(const QPoly& u) {
  if (u.degree() < 1) return false;
  if (squarefree_part(u).degree() != u.degree()) return false;
  return factor_squarefree_rational(u).size() == 1;
}

// ---------- bivariate ----------

namespace {

using YPoly = UniPoly<QPoly>;  // polynomial in y with coefficients in Q[x]

YPoly to_y(const QBiPoly& f) { return YPoly(f.y_coeffs()); }
QBiPoly from_y(const YPoly& p) { return QBiPoly::from_y_coeffs(p.coeffs()); }

QPoly content_x(const YPoly& p) {
  QPoly g;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

YPoly primitive_y(const YPoly& p) {
  if (p.is_zero()) return p;
  QPoly c = content_x(p);
  std::vector<QPoly> v;
  for (const auto& a : p.coeffs()) v.push_back(exact_div(a, c));
  return YPoly(std::move(v));
}

YPoly pseudo_rem(YPoly a, const YPoly& b) {
  const int n = b.degree();
  const QPoly& lb = b.leading();
  while (!a.is_zero() && a.degree() >= n) {
    QPoly la = a.leading();
    YPoly shifted = YPoly::monomial(la, a.degree() - n) * b;
    a = YPoly(lb) * a - shifted;
  }
  return a;
}

QBiPoly shift_x(const QBiPoly& f, const Rat& a) {
  std::vector<QPoly> cs = f.y_coeffs();
  for (auto& c : cs) c = c.shift(a);
  return QBiPoly::from_y_coeffs(cs);
}

}  // namespace

QBiPoly bivariate_gcd(const QBiPoly& a, const QBiPoly& b) {
  if (a.is_zero()) return integer_primitive(b);
  if (b.is_zero()) return integer_primitive(a);
  YPoly pa = to_y(a), pb = to_y(b);
  QPoly c = gcd(content_x(pa), content_x(pb));
  pa = primitive_y(pa);
  pb = primitive_y(pb);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    YPoly r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    pb = primitive_y(r);
  }
  YPoly g = primitive_y(pa);
  return integer_primitive(from_y(YPoly(c) * g));
}

QBiPoly bivariate_squarefree_part(const QBiPoly& f) {
  if (f.is_zero()) return f;
  YPoly p = to_y(f);
  QPoly c = content_x(p);
  YPoly pp = primitive_y(p);
  QBiPoly ppb = from_y(pp);
  QBiPoly sq = ppb;
  if (pp.degree() > 0) sq = exact_div(ppb, bivariate_gcd(ppb, ppb.dy()));
  QBiPoly cs = QBiPoly::from_y_coeffs({squarefree_part(c)});
  return integer_primitive(sq * cs);
}

std::vector<QBiPoly> factor_bivariate(const QBiPoly& f) {
  std::vector<QBiPoly> out;
  if (f.is_zero()) throw std::invalid_argument("factor_bivariate: zero polynomial");
  YPoly p = to_y(f);
  QPoly c = content_x(p);
  for (const auto& g : factor_squarefree_rational(c)) out.push_back(integer_primitive(QBiPoly::from_y_coeffs({g})));
  YPoly pp = primitive_y(p);
  if (pp.degree() <= 0) return out;
  QBiPoly P = from_y(pp);
  if (pp.degree() == 1) {
    out.push_back(integer_primitive(P));
    return out;
  }
  if (P.deg_x() <= 0) {
    std::vector<Rat> v;
    for (const auto& a : pp.coeffs()) v.push_back(a.coeff(0));
    for (const auto& g : factor_squarefree_rational(QPoly(v))) {
      QBiPoly b;
      for (int j = 0; j <= g.degree(); ++j) b.add_term(0, j, g.coeffs()[j]);
      out.push_back(integer_primitive(b));
    }
    return out;
  }

  // evaluation point with nonvanishing leading coefficient and squarefree image
  Rat a = 0;
  for (int step = 0;; ++step) {
    a = (step % 2 == 0) ? Rat(step / 2) : Rat(-(step + 1) / 2);
    if (is_zero(pp.leading().eval(a))) continue;
    std::vector<Rat> v;
    for (const auto& cc : pp.coeffs()) v.push_back(cc.eval(a));
    QPoly u(v);
    if (gcd(u, u.derivative()).degree() == 0) break;
  }
  QBiPoly F = shift_x(P, a);
  YPoly FY = to_y(F);
  std::vector<Rat> v0;
  for (const auto& cc : FY.coeffs()) v0.push_back(cc.coeff(0));
  std::vector<QPoly> us = factor_squarefree_rational(QPoly(v0));
  if (us.size() == 1) {
    out.push_back(integer_primitive(P));
    return out;
  }

  const QPoly lc = FY.leading();
  const int k = F.deg_x() + lc.degree() + 1;
  const int dy = FY.degree();
  // series inverse of lc mod x^k
  std::vector<Rat> inv(k, Rat(0));
  inv[0] = Rat(1) / lc.coeff(0);
  for (int i = 1; i < k; ++i) {
    Rat s = 0;
    for (int j = 1; j <= i; ++j) s += lc.coeff(j) * inv[i - j];
    inv[i] = -s * inv[0];
  }
  // monic target as series: target[j] = coefficient of x^j, a polynomial in y
  std::vector<QPoly> target(k);
  {
    std::vector<std::vector<Rat>> t(k, std::vector<Rat>(dy + 1, Rat(0)));
    for (int yd = 0; yd <= dy; ++yd) {
      const QPoly& cc = FY.coeffs()[yd];
      for (int i = 0; i <= cc.degree(); ++i)
        for (int j = 0; i + j < k; ++j) t[i + j][yd] += cc.coeffs()[i] * inv[j];
    }
    for (int j = 0; j < k; ++j) target[j] = QPoly(t[j]);
  }

  const std::size_t r = us.size();
  std::vector<QPoly> bez(r);
  for (std::size_t i = 0; i < r; ++i) {
    QPoly co(Rat(1));
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) co = co * us[j];
    auto [g, s, t] = ext_gcd(co, us[i]);
    bez[i] = s;
  }
  // U[i][j] = coefficient of x^j of the i-th lifted factor
  std::vector<std::vector<QPoly>> U(r, std::vector<QPoly>(k));
  for (std::size_t i = 0; i < r; ++i) U[i][0] = us[i];
  auto series_mul = [k](const std::vector<QPoly>& A, const std::vector<QPoly>& B, int upto) {
    std::vector<QPoly> C(k);
    for (int i = 0; i <= upto; ++i)
      for (int j = 0; i + j <= upto; ++j)
        if (!A[i].is_zero() && !B[j].is_zero()) C[i + j] += A[i] * B[j];
    return C;
  };
  for (int j = 1; j < k; ++j) {
    std::vector<QPoly> prod = U[0];
    for (std::size_t i = 1; i < r; ++i) prod = series_mul(prod, U[i], j);
    QPoly e = target[j] - prod[j];
    if (e.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) U[i][j] = (bez[i] * e) % us[i];
  }

  auto to_bipoly = [&](const std::vector<QPoly>& s) {
    QBiPoly b;
    for (int j = 0; j < k; ++j)
      for (int yd = 0; yd <= s[j].degree(); ++yd) b.add_term(j, yd, s[j].coeffs()[yd]);
    return b;
  };

  std::vector<int> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = static_cast<int>(i);
  QBiPoly rest = F;
  std::vector<QBiPoly> found;
  for (int s = 1; 2 * s <= static_cast<int>(idx.size());) {
    bool hit = false;
    const int n = static_cast<int>(idx.size());
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    QPoly lcr = to_y(rest).leading();
    std::vector<QPoly> lcs(k);
    for (int i = 0; i <= lcr.degree() && i < k; ++i) lcs[i] = QPoly(lcr.coeffs()[i]);
    while (true) {
      std::vector<QPoly> g = lcs;
      for (int c : comb) g = series_mul(g, U[idx[c]], k - 1);
      QBiPoly cand = from_y(primitive_y(to_y(to_bipoly(g))));
      if (cand.deg_y() > 0 && divides(cand, rest)) {
        found.push_back(cand);
        rest = exact_div(rest, cand);
        std::vector<int> keep;
        for (int i = 0; i < n; ++i)
          if (std::find(comb.begin(), comb.end(), i) == comb.end()) keep.push_back(idx[i]);
        idx = keep;
        hit = true;
        break;
      }
      int i = s - 1;
      while (i >= 0 && comb[i] == n - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.deg_y() > 0) found.push_back(rest);
  for (const auto& g : found) out.push_back(integer_primitive(shift_x(g, -a)));
  return out;
}

}  // namespace gasymp
