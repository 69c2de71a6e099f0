#include "gasymp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace gasymp {

Ball RootBox::ball() const {
  return Ball(Complex::from_rat(re, im), to_real(rad) * (1 + ulp_scale()));
}

Ball eval_ball(const std::vector<Ball>& coeffs, const Ball& x) {
  Ball acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Ball> to_balls(const QPoly& p) {
  std::vector<Ball> out;
  for (const auto& c : p.coeffs()) out.push_back(Ball::exact(c));
  return out;
}

namespace {

using cld = std::complex<long double>;

std::vector<cld> aberth_ld(const std::vector<cld>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  long double bound = 0;
  for (int i = 0; i < n; ++i) {
    long double r = std::pow(std::abs(a[i] / a[n]), 1.0L / (n - i));
    bound = std::max(bound, r);
  }
  bound = 2 * bound + 1e-3L;
  std::vector<cld> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(bound * (0.5L + 0.5L * (k + 1) / n), 2 * M_PIl * k / n + 0.4L);
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < 800; ++iter) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      cld p = a[n], dp = 0;
      for (int k = n - 1; k >= 0; --k) {
        dp = dp * z[i] + p;
        p = p * z[i] + a[k];
      }
      if (p == cld(0)) {
        done[i] = true;
        continue;
      }
      cld ratio = p / dp;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      cld w = ratio / (1.0L - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return {};
      z[i] -= w;
      if (std::abs(w) <= 1e-17L * std::max(1.0L, std::abs(z[i]))) done[i] = true;
      else all = false;
    }
    if (all) break;
  }
  return z;
}

void horner2(const std::vector<Complex>& a, const Complex& z, Complex& p, Complex& dp) {
  const int n = static_cast<int>(a.size()) - 1;
  p = a[n];
  dp = Complex();
  for (int k = n - 1; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
}

}  // namespace

std::vector<Complex> approximate_roots(const std::vector<Complex>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n <= 0) return {};
  if (coeffs.back().norm() == 0) throw std::invalid_argument("approximate_roots: zero leading coefficient");
  std::vector<Complex> a(coeffs);
  for (auto& c : a) c /= coeffs.back();
  if (n == 1) return {-a[0]};

  std::vector<Complex> z(n);
  std::vector<cld> al;
  bool finite = true;
  for (const auto& c : a) {
    long double re = c.re.convert_to<long double>(), im = c.im.convert_to<long double>();
    if (!std::isfinite(re) || !std::isfinite(im)) finite = false;
    al.emplace_back(re, im);
  }
  std::vector<cld> zl = finite ? aberth_ld(al) : std::vector<cld>{};
  if (zl.size() == static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) z[i] = Complex(Real(static_cast<double>(zl[i].real())), Real(static_cast<double>(zl[i].imag())));
    // long double digits beyond double
    for (int i = 0; i < n; ++i) {
      z[i].re += Real(static_cast<double>(zl[i].real() - static_cast<long double>(static_cast<double>(zl[i].real()))));
      z[i].im += Real(static_cast<double>(zl[i].imag() - static_cast<long double>(static_cast<double>(zl[i].imag()))));
    }
  } else {
    Real bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, a[i].abs());
    bound += 1;
    for (int k = 0; k < n; ++k) z[k] = Complex::polar(bound * (k + 1) / n, Real(2) * real_pi() * k / n + Real(0.4));
  }

  const Real eps = ulp_scale() * 64;
  std::vector<bool> done(n, false);
  int stall = 0;
  for (int iter = 0; iter < 400; ++iter) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex p, dp;
      horner2(a, z[i], p, dp);
      if (p.norm() == 0) {
        done[i] = true;
        continue;
      }
      if (dp.norm() == 0) dp = Complex(eps);
      Complex ratio = p / dp;
      Complex s;
      for (int j = 0; j < n; ++j)
        if (j != i) {
          Complex d = z[i] - z[j];
          if (d.norm() != 0) s += Complex(Real(1)) / d;
        }
      Complex w = ratio / (Complex(Real(1)) - ratio * s);
      z[i] -= w;
      Real zi = z[i].abs();
      if (w.abs() <= eps * (zi > 1 ? zi : Real(1))) done[i] = true;
      else all = false;
    }
    if (all) break;
    if (++stall > 400) break;
  }
  return z;
}

namespace {

struct Certified {
  bool ok = false;
  std::vector<Complex> centers;
  std::vector<Real> radii;
};

Certified certify(const QPoly& p, const std::vector<Complex>& z, long target_bits) {
  Certified c;
  const int n = p.degree();
  auto pb = to_balls(p);
  auto dpb = to_balls(p.derivative());
  bool real_poly = true;
  c.centers = z;
  c.radii.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Ball v = eval_ball(pb, Ball(z[i]));
    Ball dv = eval_ball(dpb, Ball(z[i]));
    Real lo = dv.abs_lower();
    if (lo == 0) return c;
    Real r = Real(n) * v.abs_upper() / lo;
    r *= (1 + ulp_scale() * 16);
    if (real_poly && boost::multiprecision::abs(z[i].im) <= r) {
      r += boost::multiprecision::abs(z[i].im);
      c.centers[i].im = 0;
    }
    c.radii[i] = r;
    Real scale = z[i].abs();
    if (scale < 1) scale = 1;
    Real lim = scale;
    mpfr_mul_2si(lim.backend().data(), lim.backend().data(), -target_bits, MPFR_RNDN);
    if (r > lim) return c;
  }
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if ((c.centers[i] - c.centers[j]).abs() <= c.radii[i] + c.radii[j]) return c;
  c.ok = true;
  return c;
}

Rat upper_rat(const Real& r) {
  // dyadic rational slightly above r
  Rat q = to_rat(r);
  return q + q / Rat(Int(1) << 40);
}

}  // namespace

std::vector<RootBox> isolate_roots(const QPoly& p, long bits) {
  const int n = p.degree();
  if (n < 1) return {};
  for (long prec = std::max(2 * bits, 128L); prec <= (1L << 16); prec *= 2) {
    PrecisionGuard guard(prec);
    std::vector<Complex> a;
    for (const auto& c : p.coeffs()) a.push_back(Complex::from_rat(c));
    auto z = approximate_roots(a);
    Certified c = certify(p, z, bits);
    if (!c.ok) continue;
    std::vector<RootBox> out;
    for (std::size_t i = 0; i < z.size(); ++i) {
      RootBox b{to_rat(c.centers[i].re), to_rat(c.centers[i].im), upper_rat(c.radii[i])};
      if (sgn(b.rad) == 0) b.rad = Rat(1, 1) / Rat(Int(1) << static_cast<unsigned long>(prec));
      out.push_back(b);
    }
    std::sort(out.begin(), out.end(), [](const RootBox& x, const RootBox& y) {
      if (x.re != y.re) return x.re < y.re;
      return x.im < y.im;
    });
    return out;
  }
  throw std::runtime_error("root isolation failed to converge");
}

RootBox refine_root(const QPoly& p, const RootBox& box, long bits) {
  if (box.rad == 0) return box;
  for (long prec = std::max(2 * bits, 128L); prec <= (1L << 17); prec *= 2) {
    PrecisionGuard guard(prec);
    std::vector<Complex> a;
    for (const auto& c : p.coeffs()) a.push_back(Complex::from_rat(c));
    Complex z = Complex::from_rat(box.re, box.im);
    const bool real = sgn(box.im) == 0;
    for (int it = 0; it < 200; ++it) {
      Complex v, dv;
      horner2(a, z, v, dv);
      if (dv.norm() == 0) break;
      Complex w = v / dv;
      z -= w;
      if (real) z.im = 0;
      Real zs = z.abs();
      if (w.abs() <= ulp_scale() * 16 * (zs > 1 ? zs : Real(1))) break;
    }
    auto pbb = to_balls(p);
    Ball v = eval_ball(pbb, Ball(z));
    Ball dv = eval_ball(to_balls(p.derivative()), Ball(z));
    Real lo = dv.abs_lower();
    if (lo == 0) continue;
    Real r = Real(p.degree()) * v.abs_upper() / lo * (1 + ulp_scale() * 16);
    if (r == 0) r = ulp_scale() * (z.abs() + 1);
    Real scale = z.abs();
    if (scale < 1) scale = 1;
    Real lim = scale;
    mpfr_mul_2si(lim.backend().data(), lim.backend().data(), -bits, MPFR_RNDN);
    Real dist = (z - Complex::from_rat(box.re, box.im)).abs();
    if (r <= lim && dist + r <= to_real(box.rad)) {
      return RootBox{to_rat(z.re), to_rat(z.im), upper_rat(r)};
    }
  }
  throw std::runtime_error("root refinement failed");
}

}  // namespace gasymp
