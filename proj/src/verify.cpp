#include "gasymp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "gasymp/roots.hpp"

namespace gasymp {

namespace {

constexpr double kPi = 3.14159265358979323846;

Ball eval_q(const QBiPoly& f, const Ball& x, const Ball& y) {
  Ball acc(Complex(Real(0)));
  for (const auto& [e, c] : f.terms()) acc += Ball::exact(c) * pow_int(x, e.first) * pow_int(y, e.second);
  return acc;
}

Real real_of(double v) { return real_from_double(v); }

bool is_real_ray(double theta) {
  return std::abs(theta) < 1e-12 || std::abs(theta - kPi) < 1e-12;
}

// Gauss-Newton for min |px(t) - X|^2 + |py(t) - Y|^2 over complex t.
Complex refine_t(const std::vector<Complex>& px, const std::vector<Complex>& py, const Complex& X,
                 const Complex& Y, Complex t) {
  auto ev = [](const std::vector<Complex>& p, const Complex& t, Complex& dp) {
    Complex v(Real(0)), d(Real(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      d = d * t + v;
      v = v * t + *it;
    }
    dp = d;
    return v;
  };
  const Real eps = ulp_scale();
  for (int it = 0; it < 80; ++it) {
    Complex dx, dy;
    Complex rx = ev(px, t, dx) - X, ry = ev(py, t, dy) - Y;
    Real jj = dx.norm() + dy.norm();
    if (jj == 0) break;
    Complex g = dx.conj() * rx + dy.conj() * ry;
    Complex step = g / Complex(jj);
    t -= step;
    if (step.abs() <= eps * std::max(Real(1), t.abs())) break;
  }
  return t;
}

std::vector<Complex> mids(const KPoly& p) {
  std::vector<Complex> out;
  for (const auto& b : to_balls(p)) out.push_back(b.mid());
  return out;
}

Real point_distance(const std::vector<Ball>& bx, const std::vector<Ball>& by, const Ball& x, const Ball& y,
                    const Complex& t) {
  Ball tb(t);
  Real a = (eval_ball(bx, tb) - x).abs_upper(), b = (eval_ball(by, tb) - y).abs_upper();
  return sqrt(a * a + b * b);
}

}  // namespace

std::vector<double> SamplePlan::effective_rays() const {
  if (!rays.empty()) return rays;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  std::vector<double> out{0.0, kPi};
  out.push_back(u(rng));
  out.push_back(u(rng));
  return out;
}

Ball eval_branch(const InfinityBranch& B, double radius, double theta, int leaf) {
  const Real R = real_of(radius);
  const Real arg = real_of(theta) + Real(2) * real_pi() * Real(leaf);
  Ball acc(Complex(Real(0)));
  for (const auto& t : B.r_terms) {
    const Real e = to_real(t.exp);
    const Real mod = pow(R, e);
    Complex zp = Complex::polar(mod, arg * e);
    Ball term = t.coeff.to_ball() * Ball(zp, ulp_scale() * mod * 4);
    acc += term;
  }
  return acc;
}

SampleResult sample_branch(const InfinityBranch& B, const SamplePlan& plan, const QBiPoly* f) {
  if (plan.radii.empty()) throw std::invalid_argument("sample plan without radii");
  for (std::size_t i = 1; i < plan.radii.size(); ++i)
    if (!(plan.radii[i] > plan.radii[i - 1])) throw std::invalid_argument("sample radii must be strictly increasing");
  int guards = 0;
  for (const auto& t : B.r_terms) guards += sgn(t.exp) < 0;
  if (B.exact_above && guards < 2) throw std::invalid_argument("branch carries fewer than two guard terms");

  SampleResult res;
  res.radii = plan.radii;
  const auto rays = plan.effective_rays();
  const int leaves = plan.all_leaves ? B.N : 1;
  const int d = f ? f->total_degree() : 0;
  long bits = plan.precision;

  for (int attempt = 0;; ++attempt) {
    PrecisionGuard guard(bits);
    res.points.clear();
    res.bits = bits;
    res.certified = true;

    auto eval_point = [&](double R, double th, int leaf) {
      BranchPoint p;
      p.radius = R;
      p.ray = th;
      p.leaf = leaf;
      p.x = Ball(Complex::polar(real_of(R), real_of(th)), ulp_scale() * real_of(R) * 4);
      p.y = eval_branch(B, R, th, leaf);
      p.residual = f ? eval_q(*f, p.x, p.y).abs_upper() / pow(real_of(R), d) : Real(0);
      const Real scale = std::max(Real(1), p.y.mid().abs());
      if (p.y.rad() > scale * pow(Real(2), -bits / 2)) res.certified = false;
      return p;
    };

    // raise the smallest radius until the truncation is accurate there
    if (f && attempt == 0) {
      for (int step = 0; step < 32 && !res.radii.empty(); ++step) {
        Real worst = 0;
        for (double th : rays)
          for (int l = 0; l < leaves; ++l) worst = std::max(worst, eval_point(res.radii[0], th, l).residual);
        if (worst < plan.residual_target) break;
        ++res.radius_escalations;
        res.radii[0] *= 10;
        if (res.radii.size() > 1 && res.radii[0] >= res.radii[1]) res.radii.erase(res.radii.begin());
      }
      res.certified = true;
    }

    for (double th : rays)
      for (int l = 0; l < leaves; ++l)
        for (double R : res.radii) res.points.push_back(eval_point(R, th, l));
    if (res.certified || attempt >= plan.max_escalations) break;
    ++res.precision_escalations;
    bits *= 2;
  }
  return res;
}

Distance distance_to_asymptote(const Ball& x, const Ball& y, const Asymptote& a) {
  const auto cx = mids(a.px), cy = mids(a.py);
  const auto bx = to_balls(a.px), by = to_balls(a.py);
  const Complex X = x.mid(), Y = y.mid();

  std::vector<Complex> starts;
  auto add_roots = [&](std::vector<Complex> p, const Complex& target) {
    while (p.size() > 1 && p.back().abs() == 0) p.pop_back();
    if (p.size() < 2) return;
    p[0] -= target;
    for (const auto& r : approximate_roots(p)) starts.push_back(r);
  };
  add_roots(cx, X);
  add_roots(cy, Y);

  Distance out;
  bool found = false;
  for (const auto& s : starts) {
    Complex t = refine_t(cx, cy, X, Y, s);
    Real d = point_distance(bx, by, x, y, t);
    if (!found || d < out.value) out.value = d;
    found = true;
  }
  if (!found) {
    // dense grid around the origin, scaled to the point
    out.approximate = true;
    const Real span = std::max(Real(1), std::max(X.abs(), Y.abs()));
    for (int i = -64; i <= 64; ++i)
      for (int j = -64; j <= 64; ++j) {
        Complex t(span * Real(i) / Real(64), span * Real(j) / Real(64));
        Real d = point_distance(bx, by, x, y, t);
        if (!found || d < out.value) out.value = d;
        found = true;
      }
  }
  return out;
}

std::optional<bool> divisibility_check(const QBiPoly& f, const InfinityBranch& B, std::optional<int> power) {
  if (!B.point.m.is_exact()) return std::nullopt;
  const int d = f.total_degree();
  const int e = power.value_or(B.N);
  if (e > d) return false;
  std::vector<Rat> v(d + 1, Rat(0));
  const QBiPoly fd = f.homogeneous(d);
  for (const auto& [ex, c] : fd.terms()) v[ex.second] = c;
  KPoly p = to_kpoly(QPoly(v));
  const KPoly lin = KPoly::x() - KPoly(B.point.m);
  for (int i = 0; i < e; ++i) {
    auto [q, r] = divmod(p, lin);
    if (!is_zero(r)) return false;
    p = q;
  }
  return true;
}

std::string DecayTolerance::describe() const {
  std::ostringstream os;
  switch (mode) {
    case Mode::TailModel:
      os << "non-increasing and final <= " << value << " * |leading dropped term|";
      break;
    case Mode::Relative:
      os << "non-increasing and final <= " << value << " * first";
      break;
    case Mode::Absolute:
      os << "non-increasing and final <= " << value;
      break;
  }
  return os.str();
}

Real DecayReport::max_final_on_real_rays() const {
  Real worst = 0;
  for (const auto& s : series)
    if (is_real_ray(s.ray) && !s.distances.empty()) worst = std::max(worst, s.distances.back());
  return worst;
}

DecayReport approach_decay_check(const QBiPoly& f, const InfinityBranch& B, const Asymptote& a,
                                 const SamplePlan& plan, const DecayTolerance& tol) {
  DecayReport rep;
  rep.rule = tol.describe();
  rep.samples = sample_branch(B, plan, &f);
  PrecisionGuard guard(rep.samples.bits);

  const RTerm* lead_tail = nullptr;
  for (const auto& t : B.r_terms)
    if (sgn(t.exp) < 0 && (!lead_tail || t.exp > lead_tail->exp)) lead_tail = &t;

  std::map<std::pair<double, int>, DecaySeries> by_key;
  std::map<std::pair<double, int>, std::vector<Real>> noise;  // evaluation error of each point
  std::vector<std::pair<double, int>> order;
  for (const auto& p : rep.samples.points) {
    auto key = std::make_pair(p.ray, p.leaf);
    auto [it, fresh] = by_key.try_emplace(key);
    if (fresh) {
      order.push_back(key);
      it->second.ray = p.ray;
      it->second.leaf = p.leaf;
    }
    it->second.radii.push_back(p.radius);
    it->second.distances.push_back(distance_to_asymptote(p.x, p.y, a).value);
    noise[key].push_back(Real(16) * (p.x.rad() + p.y.rad()));
  }

  rep.pass = !order.empty();
  const Real floor_tol = real_of(1e-12);
  for (const auto& key : order) {
    DecaySeries s = by_key[key];
    s.non_increasing = true;
    for (std::size_t i = 1; i < s.distances.size(); ++i) {
      const Real slack = s.distances[i - 1] * real_of(1e-9) + noise[key][i];
      if (s.distances[i] > s.distances[i - 1] + slack) s.non_increasing = false;
    }
    switch (tol.mode) {
      case DecayTolerance::Mode::TailModel: {
        Real tail = 0;
        if (lead_tail) {
          PrecisionGuard g(rep.samples.bits);
          tail = lead_tail->coeff.to_ball().abs_upper() * pow(real_of(s.radii.back()), to_real(lead_tail->exp));
        }
        s.tolerance = std::max(floor_tol, real_of(tol.value) * tail);
        break;
      }
      case DecayTolerance::Mode::Relative:
        s.tolerance = std::max(floor_tol, real_of(tol.value) * s.distances.front());
        break;
      case DecayTolerance::Mode::Absolute:
        s.tolerance = real_of(tol.value);
        break;
    }
    s.pass = s.non_increasing && !s.distances.empty() && s.distances.back() <= s.tolerance;
    rep.pass = rep.pass && s.pass;
    rep.series.push_back(std::move(s));
  }
  return rep;
}

}  // namespace gasymp
