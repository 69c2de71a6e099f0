#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <string>

namespace gasymp {

using Int = mpz_class;
using Rat = mpq_class;
using Real = boost::multiprecision::mpfr_float;

// Sets the working precision of newly created Real values on this thread.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(long bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

long current_bits();

Real to_real(const Rat& q);
Rat to_rat(const Real& r);  // exact
Real real_from_double(double v);
Real real_pi();
Real ulp_scale();  // 2^(2 - bits) at the current precision

std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& s);

struct Complex {
  Real re;
  Real im;

  Complex();
  Complex(const Real& r);
  Complex(const Real& r, const Real& i);
  static Complex from_rat(const Rat& r, const Rat& i = 0);
  static Complex polar(const Real& mod, const Real& arg);

  Real abs() const;
  Real norm() const;  // |z|^2
  Real arg() const;
  Complex conj() const { return {re, -im}; }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex pow_int(const Complex& z, long e);
Complex sqrt(const Complex& z);
Complex root_of_unity(long n, long k);  // exp(2 pi i k / n)
std::string complex_str(const Complex& z, int digits = 12);

// Complex disc with a midpoint and a nonnegative radius that encloses the true value.
class Ball {
 public:
  Ball();
  Ball(const Complex& mid, const Real& rad = 0);
  static Ball exact(const Rat& re, const Rat& im = 0);

  const Complex& mid() const { return mid_; }
  const Real& rad() const { return rad_; }

  bool contains_zero() const;
  bool contains(const Complex& z) const;
  bool overlaps(const Ball& o) const;
  Real abs_upper() const;
  Real abs_lower() const;
  Ball inflate(const Real& extra) const { return Ball(mid_, rad_ + extra); }

  Ball operator-() const { return Ball(-mid_, rad_); }
  Ball& operator+=(const Ball& o);
  Ball& operator-=(const Ball& o);
  Ball& operator*=(const Ball& o);
  Ball& operator/=(const Ball& o);

 private:
  Complex mid_;
  Real rad_;
};

Ball operator+(Ball a, const Ball& b);
Ball operator-(Ball a, const Ball& b);
Ball operator*(Ball a, const Ball& b);
Ball operator/(Ball a, const Ball& b);
Ball pow_int(const Ball& b, long e);

}  // namespace gasymp
