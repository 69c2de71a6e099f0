#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gasymp/roots.hpp"
#include "gasymp/unipoly.hpp"

namespace gasymp {

class ExtensionField;
using FieldPtr = std::shared_ptr<const ExtensionField>;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Q(theta) for a root theta of an irreducible monic minpoly, fixed by an isolating disc.
class ExtensionField {
 public:
  // Verifies irreducibility and that the disc isolates exactly one root.
  static FieldPtr create(const QPoly& minpoly, const RootBox& box);
  // Trusted constructor: minpoly known irreducible and box known to isolate.
  static FieldPtr create_unchecked(const QPoly& minpoly, const RootBox& box);

  int degree() const { return minpoly_.degree(); }
  const QPoly& minpoly() const { return minpoly_; }
  const RootBox& box() const { return box_; }
  // Enclosure of theta valid at the current working precision.
  Ball theta() const;
  bool is_real() const { return sgn(box_.im) == 0; }
  bool same_as(const ExtensionField& o) const;

 private:
  ExtensionField(QPoly m, RootBox b);
  QPoly minpoly_;
  RootBox box_;
};

// Coefficient value: exact rational, exact element of Q(theta), or a numeric ball.
class Num {
 public:
  Num() = default;
  Num(long v) : q_(v) {}
  Num(int v) : q_(v) {}
  Num(const Rat& q) : q_(q) {}
  Num(FieldPtr f, const QPoly& residue);
  static Num numeric(const Ball& b);
  static Num generator(const FieldPtr& f);

  enum class Kind { Rational, Algebraic, Numeric };
  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ != Kind::Numeric; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  const Rat& rational() const;
  const FieldPtr& field() const { return field_; }
  const QPoly& residue() const { return res_; }
  const Ball& ball_value() const { return ball_; }

  Ball to_ball() const;  // at the current precision
  Complex approx() const { return to_ball().mid(); }
  bool is_zero() const;
  // Certainly nonzero (for numeric values, the ball excludes zero).
  bool is_nonzero() const { return !is_zero(); }

  Num operator-() const;
  Num& operator+=(const Num& o);
  Num& operator-=(const Num& o);
  Num& operator*=(const Num& o);
  Num& operator/=(const Num& o);
  friend Num operator+(Num a, const Num& b) { return a += b; }
  friend Num operator-(Num a, const Num& b) { return a -= b; }
  friend Num operator*(Num a, const Num& b) { return a *= b; }
  friend Num operator/(Num a, const Num& b) { return a /= b; }
  // exact equality for exact values, overlap for numeric ones
  friend bool operator==(const Num& a, const Num& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Num& a, const Num& b) { return !(a == b); }

  Num inverse() const;
  Num pow(long e) const;

  // Text form: "p/q" for rationals, a polynomial in "θ" for algebraic values,
  // "~re+imi" for numeric values.
  std::string str() const;
  std::string latex() const;

 private:
  static Num make_alg(FieldPtr f, QPoly residue);
  FieldPtr common_field(const Num& o) const;

  Kind kind_ = Kind::Rational;
  Rat q_ = 0;
  FieldPtr field_;
  QPoly res_;
  Ball ball_;
};

inline bool is_zero(const Num& a) { return a.is_zero(); }

using KPoly = UniPoly<Num>;

KPoly to_kpoly(const QPoly& p);
std::vector<Ball> to_balls(const KPoly& p);
Num embed_rational(const Rat& q);

// Norm of p in F[y] down to Q[y]: Res_theta(minpoly(theta), p(y, theta)).
QPoly norm_poly(const KPoly& p, const FieldPtr& f);

// Monic irreducible factors of a squarefree p over F (Trager); F may be null (Q).
std::vector<KPoly> factor_over(const KPoly& p, const FieldPtr& f);

// Roots of an irreducible p over F, as certified disjoint balls (current precision).
std::vector<Ball> roots_over(const KPoly& p, const FieldPtr& f);

// Result of adjoining a root alpha of an irreducible p over F: L = Q(gamma).
struct Adjoined {
  FieldPtr field;   // null if alpha is rational and F is null
  Num old_theta;    // image of F's generator in L
  Num alpha;        // image of alpha in L
};

// root_index selects which root (order of roots_over) to adjoin.
// Throws DegreeBoundExceeded if [L:Q] would exceed max_degree.
struct DegreeBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
Adjoined adjoin_root(const FieldPtr& f, const KPoly& p, const Ball& alpha, int max_degree);

// Maps an element of F into L given F's generator image.
Num embed(const Num& x, const Adjoined& a);

// Best-effort common field for two exact values living in different extensions.
Adjoined merge_fields(const FieldPtr& a, const FieldPtr& b, int max_degree);

}  // namespace gasymp

namespace gasymp {

// n-th cyclotomic polynomial over Q.
QPoly cyclotomic_poly(int n);

// Adjoins zeta = exp(2 pi i / n) to F; alpha is zeta's image.
Adjoined adjoin_root_of_unity(const FieldPtr& f, int n, int max_degree);

// Exact equality of two lists of values living in possibly different fields.
// Empty result: undecided (numeric values or field bound exceeded).
std::optional<bool> lists_equal(const std::vector<Num>& a, const std::vector<Num>& b, int max_degree);

}  // namespace gasymp
