#include "gasymp/numeric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gasymp {

namespace {

unsigned bits_to_digits(long bits) {
  return static_cast<unsigned>(std::ceil(static_cast<double>(bits) * 0.30102999566398120)) + 1;
}

}  // namespace

PrecisionGuard::PrecisionGuard(long bits) : saved_(Real::default_precision()) {
  Real::default_precision(bits_to_digits(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

long current_bits() {
  return static_cast<long>(std::floor(Real::default_precision() / 0.30102999566398120));
}

Real to_real(const Rat& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Rat to_rat(const Real& r) {
  if (r == 0) return Rat(0);
  Int m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), r.backend().data());
  Rat out(m);
  if (e > 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else if (e < 0) {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return out;
}

Real real_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real real_from_double(double v) {
  Real r;
  mpfr_set_d(r.backend().data(), v, MPFR_RNDN);
  return r;
}

Real ulp_scale() {
  Real r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), 2 - current_bits(), MPFR_RNDN);
  return r;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

// ---- Complex ----

Complex::Complex() : re(0), im(0) {}
Complex::Complex(const Real& r) : re(r), im(0) {}
Complex::Complex(const Real& r, const Real& i) : re(r), im(i) {}

Complex Complex::from_rat(const Rat& r, const Rat& i) { return {to_real(r), to_real(i)}; }

Complex Complex::polar(const Real& mod, const Real& arg) {
  return {Real(mod * boost::multiprecision::cos(arg)), Real(mod * boost::multiprecision::sin(arg))};
}

Real Complex::abs() const { return boost::multiprecision::hypot(re, im); }
Real Complex::norm() const { return re * re + im * im; }
Real Complex::arg() const { return boost::multiprecision::atan2(im, re); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = r;
  im = i;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.norm();
  if (den == 0) throw std::domain_error("complex division by zero");
  Real r = (re * o.re + im * o.im) / den;
  Real i = (im * o.re - re * o.im) / den;
  re = r;
  im = i;
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }

Complex pow_int(const Complex& z, long e) {
  if (e < 0) return Complex(Real(1)) / pow_int(z, -e);
  Complex acc(Real(1)), base = z;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Complex sqrt(const Complex& z) {
  Real m = z.abs();
  if (m == 0) return Complex();
  Real r = boost::multiprecision::sqrt((m + z.re) / 2);
  Real i = boost::multiprecision::sqrt((m - z.re) / 2);
  if (z.im < 0) i = -i;
  return {r, i};
}

Complex root_of_unity(long n, long k) {
  k %= n;
  if (k < 0) k += n;
  // exact values on the axes keep real leaves real
  if (k == 0) return Complex(Real(1));
  if (2 * k == n) return Complex(Real(-1));
  if (4 * k == n) return Complex(Real(0), Real(1));
  if (4 * k == 3 * n) return Complex(Real(0), Real(-1));
  Real ang = 2 * real_pi() * k / n;
  return Complex::polar(Real(1), ang);
}

std::string complex_str(const Complex& z, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << z.re.convert_to<double>();
  double im = z.im.convert_to<double>();
  if (im != 0) os << (im < 0 ? " - " : " + ") << std::fabs(im) << "i";
  return os.str();
}

// ---- Ball ----

namespace {

Real slack(const Complex& mid) { return (boost::multiprecision::abs(mid.re) + boost::multiprecision::abs(mid.im)) * ulp_scale(); }

}  // namespace

Ball::Ball() : mid_(), rad_(0) {}
Ball::Ball(const Complex& mid, const Real& rad) : mid_(mid), rad_(rad) {}

Ball Ball::exact(const Rat& re, const Rat& im) {
  Complex c = Complex::from_rat(re, im);
  return Ball(c, slack(c));
}

bool Ball::contains_zero() const { return mid_.abs() <= rad_; }

bool Ball::contains(const Complex& z) const { return (mid_ - z).abs() <= rad_; }

bool Ball::overlaps(const Ball& o) const { return (mid_ - o.mid_).abs() <= rad_ + o.rad_; }

Real Ball::abs_upper() const { return mid_.abs() + rad_; }

Real Ball::abs_lower() const {
  Real v = mid_.abs() - rad_;
  return v < 0 ? Real(0) : v;
}

Ball& Ball::operator+=(const Ball& o) {
  mid_ += o.mid_;
  rad_ += o.rad_ + slack(mid_);
  return *this;
}

Ball& Ball::operator-=(const Ball& o) {
  mid_ -= o.mid_;
  rad_ += o.rad_ + slack(mid_);
  return *this;
}

Ball& Ball::operator*=(const Ball& o) {
  Real r = mid_.abs() * o.rad_ + o.mid_.abs() * rad_ + rad_ * o.rad_;
  mid_ *= o.mid_;
  rad_ = r + slack(mid_);
  return *this;
}

Ball& Ball::operator/=(const Ball& o) {
  Real lo = o.abs_lower();
  if (lo == 0) throw std::domain_error("ball division by a ball containing zero");
  Real m = o.mid_.abs();
  // 1/o is enclosed by the disc around 1/mid with radius rad/(|mid| (|mid| - rad))
  Complex inv = Complex(Real(1)) / o.mid_;
  Ball b(inv, o.rad_ / (m * lo) + slack(inv));
  return *this *= b;
}

Ball operator+(Ball a, const Ball& b) { return a += b; }
Ball operator-(Ball a, const Ball& b) { return a -= b; }
Ball operator*(Ball a, const Ball& b) { return a *= b; }
Ball operator/(Ball a, const Ball& b) { return a /= b; }

Ball pow_int(const Ball& b, long e) {
  if (e < 0) return Ball(Complex(Real(1))) / pow_int(b, -e);
  Ball acc(Complex(Real(1))), base = b;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

}  // namespace gasymp
