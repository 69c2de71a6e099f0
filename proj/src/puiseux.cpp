#include "gasymp/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gasymp/factor.hpp"

namespace gasymp {

namespace {

using HPoly = BiPoly<Num>;  // (power of Y, power of u)

// Series built so far: y = sum(terms) + z^E * Y, with z = u^Q.
struct Partial {
  FieldPtr field;
  std::vector<SeriesTerm> terms;
  Rat E = 0;
  int Q = 1;
  int steps = 0;
};

struct Ctx {
  const TruncationPolicy& policy;
  bool numeric = false;
  std::vector<PuiseuxClass> out;
};

Num binom(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Num(Rat(b));
}

Real tolerance() {
  Real t(1);
  mpfr_mul_2si(t.backend().data(), t.backend().data(), -current_bits() / 3, MPFR_RNDN);
  return t;
}

bool looks_real(const Complex& z) {
  Real s = std::max(Real(1), z.abs());
  return boost::multiprecision::abs(z.im) <= tolerance() * s;
}

std::vector<int> orders(const HPoly& H) {
  std::vector<int> ord(std::max(0, H.deg_x() + 1), -1);
  for (const auto& [e, c] : H.terms())
    if (ord[e.first] < 0 || e.second < ord[e.first]) ord[e.first] = e.second;
  return ord;
}

HPoly embed_h(const HPoly& H, const Adjoined& a) {
  return H.map([&](const Num& c) { return embed(c, a); });
}

void embed_partial(Partial& p, const Adjoined& a) {
  for (auto& t : p.terms) t.coeff = embed(t.coeff, a);
  p.field = a.field;
}

// H(u^p (c + Y), u^q) / u^shift
HPoly edge_substitute(const HPoly& H, int p, int q, const Num& c, long shift) {
  const int dY = H.deg_x();
  std::vector<Num> cp(dY + 1, Num(1));
  for (int k = 1; k <= dY; ++k) cp[k] = cp[k - 1] * c;
  HPoly out;
  for (const auto& [e, h] : H.terms()) {
    const int i = e.first;
    const long ue = static_cast<long>(p) * i + static_cast<long>(q) * e.second - shift;
    for (int l = 0; l <= i; ++l) out.add_term(l, static_cast<int>(ue), h * binom(i, l) * cp[i - l]);
  }
  return out;
}

HPoly truncate_h(const HPoly& H, long M, bool& dropped) {
  HPoly out;
  for (const auto& [e, h] : H.terms()) {
    if (e.second >= M) dropped = true;
    else out.add_term(e.first, e.second, h);
  }
  return out;
}

// H(Y + c u^k, u) mod u^M
HPoly regular_shift(const HPoly& H, const Num& c, int k, long M, bool& dropped) {
  const int dY = H.deg_x();
  std::vector<Num> cp(dY + 1, Num(1));
  for (int l = 1; l <= dY; ++l) cp[l] = cp[l - 1] * c;
  HPoly out;
  for (const auto& [e, h] : H.terms()) {
    const int i = e.first;
    for (int l = 0; l <= i; ++l) {
      long ue = e.second + static_cast<long>(k) * (i - l);
      if (ue >= M) {
        dropped = true;
        continue;
      }
      out.add_term(l, static_cast<int>(ue), h * binom(i, l) * cp[i - l]);
    }
  }
  return out;
}

// Refines a root of P near guess by Newton and returns a disc that contains a root.
Ball polish_root(const KPoly& P, Complex c) {
  auto pb = to_balls(P);
  auto db = to_balls(P.derivative());
  std::vector<Complex> pm, dm;
  for (const auto& b : pb) pm.push_back(b.mid());
  for (const auto& b : db) dm.push_back(b.mid());
  auto horner = [](const std::vector<Complex>& v, const Complex& x) {
    Complex acc;
    for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (int it = 0; it < 200; ++it) {
    Complex d = horner(dm, c);
    if (d.abs() == 0) break;
    Complex step = horner(pm, c) / d;
    c -= step;
    if (step.abs() <= ulp_scale() * std::max(Real(1), c.abs())) break;
  }
  Ball x(c);
  Real num = eval_ball(pb, x).abs_upper();
  Real den = eval_ball(db, x).abs_lower();
  Real rad = den > 0 ? Real(P.degree() * num / den) : Real(1);
  return Ball(c, rad + ulp_scale() * std::max(Real(1), c.abs()));
}

// The q-th root of w preferred by root_order_less.
Complex choose_qth_root(const Complex& w, int q) {
  if (q == 1) return w;
  Real mod = boost::multiprecision::pow(w.abs(), Real(1) / q);
  Real arg = w.arg();
  std::vector<Complex> cands;
  for (int k = 0; k < q; ++k) cands.push_back(Complex::polar(mod, (arg + 2 * real_pi() * k) / q));
  for (auto& c : cands)
    if (looks_real(c)) c.im = 0;
  return *std::min_element(cands.begin(), cands.end(), root_order_less);
}

struct EdgeRoot {
  Complex approx;
  Num c;
  std::shared_ptr<Adjoined> adj;  // exact mode only
};

std::vector<EdgeRoot> edge_roots_exact(const KPoly& psi_all, int q, const FieldPtr& K, const TruncationPolicy& pol) {
  std::vector<EdgeRoot> out;
  for (const auto& [part, mult] : squarefree_decomposition(psi_all)) {
    (void)mult;
    for (const auto& psi : factor_over(part.monic(), K)) {
      std::vector<Ball> ws = roots_over(psi, K);
      if (q == 1) {
        for (const auto& w : ws) {
          Adjoined a = adjoin_root(K, psi, w, pol.max_ext_degree);
          out.push_back({w.mid(), a.alpha, std::make_shared<Adjoined>(a)});
        }
        continue;
      }
      KPoly phi = psi.inflate(q);
      std::vector<KPoly> pf = factor_over(phi, K);
      for (const auto& w : ws) {
        const Complex guess = choose_qth_root(w.mid(), q);
        const KPoly* hit = nullptr;
        Ball cb;
        for (long bits = current_bits(); bits <= 8192 && !hit; bits *= 2) {
          PrecisionGuard guard(bits);
          cb = polish_root(phi, guess);
          std::vector<const KPoly*> hits;
          for (const auto& f : pf)
            if (eval_ball(to_balls(f), cb).contains_zero()) hits.push_back(&f);
          if (hits.size() == 1) hit = hits[0];
        }
        if (!hit) throw FieldError("could not identify the factor of the edge polynomial");
        Adjoined a = adjoin_root(K, *hit, cb, pol.max_ext_degree);
        out.push_back({cb.mid(), a.alpha, std::make_shared<Adjoined>(a)});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const EdgeRoot& a, const EdgeRoot& b) { return root_order_less(a.approx, b.approx); });
  return out;
}

// Numeric mode: roots clustered by proximity, one representative per cluster.
std::vector<EdgeRoot> edge_roots_numeric(const KPoly& psi, int q) {
  std::vector<Complex> mids;
  for (const auto& b : to_balls(psi)) mids.push_back(b.mid());
  std::vector<Complex> roots = approximate_roots(mids);
  std::vector<std::vector<Complex>> clusters;
  const Real tol = tolerance();
  for (const auto& r : roots) {
    bool placed = false;
    for (auto& cl : clusters)
      if ((cl[0] - r).abs() <= tol * std::max(Real(1), r.abs())) {
        cl.push_back(r);
        placed = true;
        break;
      }
    if (!placed) clusters.push_back({r});
  }
  std::vector<EdgeRoot> out;
  for (const auto& cl : clusters) {
    Complex w;
    for (const auto& r : cl) w += r;
    w /= Complex(Real(static_cast<long>(cl.size())));
    Real spread(0);
    for (const auto& r : cl) spread = std::max(spread, (r - w).abs());
    if (cl.size() == 1) {
      Ball b = polish_root(psi, w);
      w = b.mid();
      spread = b.rad();
    }
    if (looks_real(w)) w.im = 0;
    Complex c = choose_qth_root(w, q);
    Real rad = spread / std::max(Real(q) * boost::multiprecision::pow(c.abs(), Real(q - 1)), tolerance());
    out.push_back({c, Num::numeric(Ball(c, rad + ulp_scale() * std::max(Real(1), c.abs()))), nullptr});
  }
  std::stable_sort(out.begin(), out.end(), [](const EdgeRoot& a, const EdgeRoot& b) { return root_order_less(a.approx, b.approx); });
  return out;
}

void emit(const Partial& part, std::optional<Rat> trunc, Ctx& ctx) {
  PuiseuxClass pc;
  for (const auto& t : part.terms)
    if (!t.coeff.is_zero()) pc.rep.terms.push_back(t);
  std::stable_sort(pc.rep.terms.begin(), pc.rep.terms.end(), [](const SeriesTerm& a, const SeriesTerm& b) { return a.exp < b.exp; });
  pc.rep.N = part.Q;
  pc.rep.trunc = std::move(trunc);
  pc.rep.field = part.field;
  pc.rep.numeric = ctx.numeric;
  pc.class_size = part.Q;
  ctx.out.push_back(std::move(pc));
}

int count_beyond(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b, const Rat& cover) {
  int n = 0;
  for (const auto* v : {&a, &b})
    for (const auto& t : *v)
      if (t.exp > cover && !t.coeff.is_zero()) ++n;
  return n;
}

// H(0,0) = 0 and dH/dY(0,0) != 0: one solution, power series in u.
void regular(const HPoly& H, Partial part, Ctx& ctx) {
  const auto& pol = ctx.policy;
  const Num h10 = H.coeff(1, 0);
  std::vector<SeriesTerm> found;
  bool exact = false;
  auto run = [&](long M) {
    found.clear();
    bool dropped = false;
    HPoly h = truncate_h(H, M, dropped);
    exact = false;
    while (true) {
      int k = -1;
      for (const auto& [e, c] : h.terms())
        if (e.first == 0 && (k < 0 || e.second < k)) k = e.second;
      if (k < 0) {
        exact = !dropped;
        return;
      }
      Num c = -h.coeff(0, k) / h10;
      found.push_back({part.E + Rat(k, part.Q), c});
      h = regular_shift(h, c, k, M, dropped);
    }
  };

  long M = 1;
  if (pol.guarantee == TruncationPolicy::Guarantee::FixedOrder) {
    Rat need = (pol.fixed_order - part.E) * part.Q;
    Int ce;
    mpz_cdiv_q(ce.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
    M = std::max<long>(1, ce.get_si());
    run(M);
  } else {
    Rat span = (pol.cover_exponent - part.E) * part.Q;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
    const long base = std::max<long>(0, fl.get_si() + 1);
    M = base + 2 * pol.guard_terms + 1;
    while (true) {
      run(M);
      if (exact || count_beyond(part.terms, found, pol.cover_exponent) >= pol.guard_terms) break;
      if (M > base + 256) break;  // sparse tail: accept fewer guard terms
      M *= 2;
    }
  }
  for (auto& t : found) part.terms.push_back(std::move(t));
  emit(part, exact ? std::nullopt : std::optional<Rat>(part.E + Rat(M, part.Q)), ctx);
}

void expand(const HPoly& H, Partial part, Ctx& ctx) {
  if (part.steps > ctx.policy.max_polygon_steps) {
    throw IncompleteExpansion("Newton polygon steps exceeded " + std::to_string(ctx.policy.max_polygon_steps),
                              ctx.out);
  }
  std::vector<int> ord = orders(H);
  if (ord.empty()) throw std::invalid_argument("zero polynomial in Puiseux expansion");
  int i_min = 0;
  if (ord[0] < 0) {
    int l0 = 1;
    while (ord[l0] < 0) ++l0;
    if (l0 > 1) throw std::invalid_argument("repeated Puiseux solution: polynomial is not squarefree");
    emit(part, std::nullopt, ctx);
    i_min = l0;
  }
  int ell = i_min;
  while (ell < static_cast<int>(ord.size()) && ord[ell] != 0) ++ell;
  if (ell == static_cast<int>(ord.size())) throw std::logic_error("Puiseux expansion: u divides the polynomial");
  if (ell == i_min) return;
  if (i_min == 0 && ell == 1) {
    regular(H, part, ctx);
    return;
  }

  std::vector<std::pair<long, long>> hull;
  for (int i = i_min; i <= ell; ++i) {
    if (ord[i] < 0) continue;
    std::pair<long, long> pt{i, ord[i]};
    while (hull.size() >= 2) {
      auto [ax, ay] = hull[hull.size() - 2];
      auto [bx, by] = hull.back();
      long cross = (bx - ax) * (pt.second - ay) - (by - ay) * (pt.first - ax);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    auto [i1, j1] = hull[s];
    auto [i2, j2] = hull[s + 1];
    const long dj = j1 - j2, di = i2 - i1;
    const long g = std::gcd(dj, di);
    const int p = static_cast<int>(dj / g), q = static_cast<int>(di / g);
    const long shift = static_cast<long>(q) * j1 + static_cast<long>(p) * i1;
    std::vector<Num> psi(g + 1, Num(0));
    for (const auto& [e, h] : H.terms()) {
      if (e.first < i1 || e.first > i2) continue;
      if (static_cast<long>(q) * e.second + static_cast<long>(p) * e.first != shift) continue;
      psi[(e.first - i1) / q] += h;
    }
    KPoly Psi(psi);
    std::vector<EdgeRoot> roots = ctx.numeric ? edge_roots_numeric(Psi, q) : edge_roots_exact(Psi, q, part.field, ctx.policy);
    for (const auto& r : roots) {
      Partial next = part;
      HPoly Hn = H;
      if (r.adj && r.adj->field != part.field) {
        embed_partial(next, *r.adj);
        Hn = embed_h(H, *r.adj);
      }
      next.E = part.E + Rat(p, static_cast<long>(part.Q) * q);
      next.Q = part.Q * q;
      next.terms.push_back({next.E, r.c});
      next.steps = part.steps + 1;
      expand(edge_substitute(Hn, p, q, r.c, shift), std::move(next), ctx);
    }
  }
}

HPoly shifted_h(const YZPoly& g, const Num& m) {
  const int dy = g.deg_x();
  std::vector<Num> mp(dy + 1, Num(1));
  for (int k = 1; k <= dy; ++k) mp[k] = mp[k - 1] * m;
  HPoly H;
  for (const auto& [e, c] : g.terms())
    for (int l = 0; l <= e.first; ++l) H.add_term(l, e.second, Num(c) * binom(e.first, l) * mp[e.first - l]);
  return H;
}

std::vector<PuiseuxClass> run_at(const YZPoly& g, const Num& m, const TruncationPolicy& policy, bool numeric) {
  Ctx ctx{policy, numeric, {}};
  Num mm = numeric ? Num::numeric(m.to_ball()) : m;
  Partial part;
  part.field = numeric ? nullptr : m.field();
  if (!mm.is_zero()) part.terms.push_back({Rat(0), mm});
  expand(shifted_h(g, mm), part, ctx);
  return ctx.out;
}

}  // namespace

Num PuiseuxSeries::constant() const {
  for (const auto& t : terms)
    if (t.exp == 0) return t.coeff;
  return Num(0);
}

std::string PuiseuxSeries::str(const std::string& var) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    std::string c = t.coeff.str();
    bool compound = c.find(' ') != std::string::npos;
    if (!first) os << " + ";
    first = false;
    if (compound) c = "(" + c + ")";
    if (t.exp == 0) os << c;
    else os << c << "*" << var << "^(" << rat_str(t.exp) << ")";
  }
  if (trunc) os << " + O(" << var << "^(" << rat_str(*trunc) << "))";
  return os.str();
}

bool root_order_less(const Complex& a, const Complex& b) {
  const bool ra = looks_real(a), rb = looks_real(b);
  if (ra != rb) return ra;
  const Real tol = tolerance() * std::max({Real(1), a.abs(), b.abs()});
  if (boost::multiprecision::abs(a.re - b.re) > tol) return a.re > b.re;
  if (ra) return false;
  return a.im > b.im;
}

std::vector<RootWithMult> constant_terms(const YZPoly& g, int max_ext_degree, bool* numeric) {
  std::vector<Rat> c0(std::max(0, g.deg_x() + 1), Rat(0));
  for (const auto& [e, c] : g.terms())
    if (e.second == 0) c0[e.first] = c;
  QPoly p0(c0);
  if (numeric) *numeric = false;
  struct Item {
    Complex approx;
    RootWithMult r;
  };
  std::vector<Item> items;
  for (const auto& f : factor_rational(p0)) {
    for (const auto& box : isolate_roots(f.poly, current_bits())) {
      Ball b = box.ball();
      if (f.poly.degree() > max_ext_degree) {
        if (numeric) *numeric = true;
        items.push_back({b.mid(), {Num::numeric(b), f.mult}});
        continue;
      }
      Adjoined a = adjoin_root(nullptr, to_kpoly(f.poly), b, max_ext_degree);
      items.push_back({b.mid(), {a.alpha, f.mult}});
    }
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return root_order_less(a.approx, b.approx); });
  std::vector<RootWithMult> out;
  for (auto& it : items) out.push_back(std::move(it.r));
  return out;
}

std::vector<PuiseuxClass> puiseux_at(const YZPoly& g, const Num& m, const TruncationPolicy& policy) {
  PrecisionGuard guard(std::max(policy.precision, current_bits()));
  if (m.is_exact()) {
    try {
      return run_at(g, m, policy, false);
    } catch (const DegreeBoundExceeded&) {
    }
  }
  return run_at(g, m, policy, true);
}

std::vector<PuiseuxClass> puiseux_solutions(const YZPoly& g, const TruncationPolicy& policy) {
  PrecisionGuard guard(std::max(policy.precision, current_bits()));
  std::vector<PuiseuxClass> all;
  for (const auto& r : constant_terms(g, policy.max_ext_degree)) {
    auto part = puiseux_at(g, r.value, policy);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

PuiseuxSeries conjugate_series(const PuiseuxClass& c, int j) {
  PuiseuxSeries s = c.rep;
  const int N = c.rep.N;
  for (auto& t : s.terms) {
    Rat k = t.exp * N;
    long kk = k.get_num().get_si();
    if (kk % N == 0) continue;
    Complex z = root_of_unity(N, static_cast<long>(j) * kk);
    t.coeff = Num::numeric(t.coeff.to_ball() * Ball(z, ulp_scale()));
  }
  s.field = nullptr;
  s.numeric = s.numeric || N > 1;
  if (!s.numeric) s.field = c.rep.field;
  return s;
}

PuiseuxSeries conjugate_series_exact(const PuiseuxClass& c, int j, const Num& zeta_n) {
  PuiseuxSeries s = c.rep;
  const int N = c.rep.N;
  for (auto& t : s.terms) {
    long kk = Rat(t.exp * N).get_num().get_si();
    long e = ((static_cast<long>(j) * kk) % N + N) % N;
    if (e != 0) t.coeff *= zeta_n.pow(e);
  }
  s.field = zeta_n.field() ? zeta_n.field() : c.rep.field;
  return s;
}

std::optional<Rat> residual_valuation(const YZPoly& g, const PuiseuxSeries& s) {
  PrecisionGuard guard(std::max(256L, current_bits()));
  const int N = s.N;
  std::vector<Num> sc;
  for (const auto& t : s.terms) {
    Rat k = t.exp * N;
    if (k.get_den() != 1 || sgn(k) < 0) throw std::invalid_argument("residual_valuation: exponent outside (1/N)Z>=0");
    long kk = k.get_num().get_si();
    if (static_cast<long>(sc.size()) <= kk) sc.resize(kk + 1, Num(0));
    sc[kk] += t.coeff;
  }
  KPoly su(sc);
  // g(y, z) = sum_i G_i(z) y^i, Horner in y with z = u^N
  const int dy = g.deg_x();
  std::vector<KPoly> G(dy + 1);
  for (const auto& [e, c] : g.terms()) G[e.first] += KPoly::monomial(Num(c), e.second * N);
  KPoly acc;
  for (int i = dy; i >= 0; --i) acc = acc * su + G[i];
  for (int k = 0; k <= acc.degree(); ++k)
    if (!acc.coeffs()[k].is_zero()) return Rat(k, N);
  return std::nullopt;
}

}  // namespace gasymp
