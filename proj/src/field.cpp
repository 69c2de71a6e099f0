#include "gasymp/field.hpp"

#include <algorithm>
#include <sstream>

#include "gasymp/bipoly.hpp"
#include "gasymp/factor.hpp"
#include "gasymp/resultant.hpp"

namespace gasymp {

namespace {

constexpr long kStoredBits = 512;

bool box_fine_enough(const RootBox& b, long bits) {
  // rad <= 2^-bits * max(1, |center|)
  Rat scale = abs(b.re) + abs(b.im);
  if (scale < 1) scale = 1;
  Rat lim = scale / Rat(Int(1) << static_cast<unsigned long>(bits));
  return b.rad <= lim;
}

std::string poly_in(const QPoly& p, const std::string& var, bool latex) {
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool unit = (a == 1);
    if (i == 0 || !unit) {
      if (latex && a.get_den() != 1) os << "\\frac{" << a.get_num() << "}{" << a.get_den() << "}";
      else os << rat_str(a);
      if (i > 0) os << (latex ? " " : "*");
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << (latex ? "^{" : "^") << i << (latex ? "}" : "");
    }
  }
  if (first) os << "0";
  return os.str();
}

// Q(Y, T) = sum_i res_i(T) * (Y - k T)^i with x-slot Y and y-slot T.
QBiPoly lift_to_bivariate(const KPoly& p, long k) {
  QBiPoly Y = QBiPoly::x(), T = QBiPoly::y();
  QBiPoly shift = Y - QBiPoly::monomial(Rat(k), 0, 1);
  QBiPoly out, pw(Rat(1));
  for (int i = 0; i <= p.degree(); ++i) {
    const Num& c = p.coeffs()[i];
    QBiPoly ci;
    if (c.is_rational()) {
      ci = QBiPoly(c.rational());
    } else if (c.kind() == Num::Kind::Algebraic) {
      for (int j = 0; j <= c.residue().degree(); ++j) ci.add_term(0, j, c.residue().coeffs()[j]);
    } else {
      throw FieldError("norm of a polynomial with numeric coefficients");
    }
    out += ci * pw;
    pw = pw * shift;
  }
  (void)T;
  return out;
}

QPoly norm_shifted(const KPoly& p, const FieldPtr& f, long k) {
  QBiPoly q = lift_to_bivariate(p, k);
  std::vector<QPoly> tq = q.y_coeffs();  // coefficient of T^j as a polynomial in Y
  std::vector<QPoly> mu;
  for (const auto& c : f->minpoly().coeffs()) mu.emplace_back(c);
  if (tq.size() <= 1) {
    // no theta dependence: Res(mu, c) = c^deg(mu)
    QPoly c = tq.empty() ? QPoly() : tq[0];
    return pow(c, f->degree());
  }
  return sylvester_resultant(mu, tq);
}

bool squarefree(const QPoly& p) { return gcd(p, p.derivative()).degree() == 0; }

long shift_for(int step) { return (step % 2 == 1) ? (step + 1) / 2 : -(step / 2); }

}  // namespace

// ---------- ExtensionField ----------

ExtensionField::ExtensionField(QPoly m, RootBox b) : minpoly_(std::move(m)), box_(std::move(b)) {}

FieldPtr ExtensionField::create_unchecked(const QPoly& minpoly, const RootBox& box) {
  QPoly m = minpoly.monic();
  RootBox b = box_fine_enough(box, kStoredBits) ? box : refine_root(m, box, kStoredBits);
  return FieldPtr(new ExtensionField(m, b));
}

FieldPtr ExtensionField::create(const QPoly& minpoly, const RootBox& box) {
  if (minpoly.degree() < 1) throw FieldError("minimal polynomial must be nonconstant");
  if (!is_irreducible_rational(minpoly)) throw FieldError("minimal polynomial is reducible over Q");
  QPoly m = minpoly.monic();
  PrecisionGuard guard(256);
  Ball given = box.ball();
  int hits = 0;
  RootBox chosen;
  for (const auto& r : isolate_roots(m, 64)) {
    if (given.contains(r.ball().mid())) {
      ++hits;
      chosen = r;
    } else if (given.overlaps(r.ball())) {
      throw FieldError("root box does not isolate a single root");
    }
  }
  if (hits != 1) throw FieldError("root box does not isolate a single root");
  return create_unchecked(m, chosen);
}

Ball ExtensionField::theta() const {
  long bits = current_bits() + 16;
  if (box_fine_enough(box_, bits)) return box_.ball();
  return refine_root(minpoly_, box_, bits).ball();
}

bool ExtensionField::same_as(const ExtensionField& o) const {
  if (this == &o) return true;
  if (minpoly_ != o.minpoly_) return false;
  PrecisionGuard guard(128);
  return box_.ball().overlaps(o.box_.ball());
}

// ---------- Num ----------

Num Num::make_alg(FieldPtr f, QPoly residue) {
  if (f) residue = residue % f->minpoly();
  if (residue.degree() <= 0) return Num(residue.coeff(0));
  Num n;
  n.kind_ = Kind::Algebraic;
  n.field_ = std::move(f);
  n.res_ = std::move(residue);
  return n;
}

Num::Num(FieldPtr f, const QPoly& residue) { *this = make_alg(std::move(f), residue); }

Num Num::numeric(const Ball& b) {
  Num n;
  n.kind_ = Kind::Numeric;
  n.ball_ = b;
  return n;
}

Num Num::generator(const FieldPtr& f) { return make_alg(f, QPoly::x()); }

const Rat& Num::rational() const {
  if (kind_ != Kind::Rational) throw FieldError("value is not rational");
  return q_;
}

Ball Num::to_ball() const {
  switch (kind_) {
    case Kind::Rational:
      return Ball::exact(q_);
    case Kind::Algebraic:
      return eval_ball(to_balls(res_), field_->theta());
    case Kind::Numeric:
      return ball_;
  }
  return ball_;
}

bool Num::is_zero() const {
  switch (kind_) {
    case Kind::Rational:
      return sgn(q_) == 0;
    case Kind::Algebraic:
      return false;
    case Kind::Numeric:
      return ball_.contains_zero();
  }
  return false;
}

FieldPtr Num::common_field(const Num& o) const {
  if (!field_) return o.field_;
  if (!o.field_) return field_;
  if (field_ == o.field_ || field_->same_as(*o.field_)) return field_;
  throw FieldError("arithmetic between different extension fields");
}

Num Num::operator-() const {
  switch (kind_) {
    case Kind::Rational:
      return Num(Rat(-q_));
    case Kind::Algebraic:
      return make_alg(field_, -res_);
    case Kind::Numeric:
      return numeric(-ball_);
  }
  return *this;
}

namespace {
QPoly as_poly(const Num& n) { return n.is_rational() ? QPoly(n.rational()) : n.residue(); }
}  // namespace

Num& Num::operator+=(const Num& o) {
  if (kind_ == Kind::Numeric || o.kind_ == Kind::Numeric) return *this = numeric(to_ball() + o.to_ball());
  if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) {
    q_ += o.q_;
    return *this;
  }
  FieldPtr f = common_field(o);
  return *this = make_alg(f, as_poly(*this) + as_poly(o));
}

Num& Num::operator-=(const Num& o) { return *this += -o; }

Num& Num::operator*=(const Num& o) {
  if (kind_ == Kind::Numeric || o.kind_ == Kind::Numeric) return *this = numeric(to_ball() * o.to_ball());
  if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) {
    q_ *= o.q_;
    return *this;
  }
  FieldPtr f = common_field(o);
  return *this = make_alg(f, as_poly(*this) * as_poly(o));
}

Num Num::inverse() const {
  switch (kind_) {
    case Kind::Rational:
      if (sgn(q_) == 0) throw std::domain_error("division by zero");
      return Num(Rat(1 / q_));
    case Kind::Algebraic: {
      auto [g, s, t] = ext_gcd(res_, field_->minpoly());
      if (g.degree() != 0) throw FieldError("element not invertible: minimal polynomial reducible");
      return make_alg(field_, s);
    }
    case Kind::Numeric:
      return numeric(Ball(Complex(Real(1))) / ball_);
  }
  return *this;
}

Num& Num::operator/=(const Num& o) {
  if (o.is_exact() && o.is_zero()) throw std::domain_error("division by zero");
  return *this *= o.inverse();
}

Num Num::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Num acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

std::string Num::str() const {
  switch (kind_) {
    case Kind::Rational:
      return rat_str(q_);
    case Kind::Algebraic:
      return poly_in(res_, "θ", false);
    case Kind::Numeric:
      return "~" + complex_str(ball_.mid(), 15);
  }
  return {};
}

std::string Num::latex() const {
  switch (kind_) {
    case Kind::Rational:
      if (q_.get_den() == 1) return q_.get_num().get_str();
      return std::string(sgn(q_) < 0 ? "-" : "") + "\\frac{" + Int(abs(q_.get_num())).get_str() + "}{" +
             q_.get_den().get_str() + "}";
    case Kind::Algebraic:
      return poly_in(res_, "\\theta", true);
    case Kind::Numeric:
      return "\\approx " + complex_str(ball_.mid(), 15);
  }
  return {};
}

// ---------- polynomials over F ----------

KPoly to_kpoly(const QPoly& p) {
  std::vector<Num> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return KPoly(std::move(v));
}

std::vector<Ball> to_balls(const KPoly& p) {
  std::vector<Ball> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_ball());
  return out;
}

Num embed_rational(const Rat& q) { return Num(q); }

QPoly norm_poly(const KPoly& p, const FieldPtr& f) {
  if (!f) {
    std::vector<Rat> v;
    for (const auto& c : p.coeffs()) v.push_back(c.rational());
    return QPoly(std::move(v));
  }
  return norm_shifted(p, f, 0);
}

std::vector<KPoly> factor_over(const KPoly& p, const FieldPtr& f) {
  if (p.degree() < 1) return {};
  if (p.degree() == 1) return {p.monic()};
  bool rational = true;
  for (const auto& c : p.coeffs()) rational = rational && c.is_rational();
  if (!f) {
    if (!rational) throw FieldError("factor_over: coefficients outside Q with no field");
    std::vector<KPoly> out;
    for (const auto& g : factor_squarefree_rational(norm_poly(p, nullptr))) out.push_back(to_kpoly(g));
    return out;
  }
  QPoly n;
  long k = 0;
  for (int step = 0;; ++step) {
    k = shift_for(step);
    n = norm_shifted(p, f, k);
    if (squarefree(n)) break;
    if (step > 64) throw FieldError("no squarefree norm found");
  }
  auto parts = factor_squarefree_rational(n);
  if (parts.size() == 1) return {p.monic()};
  Num theta = Num::generator(f);
  KPoly pk = p.shift(Num(Rat(-k)) * theta);
  std::vector<KPoly> out;
  for (const auto& ni : parts) {
    KPoly g = gcd(pk, to_kpoly(ni));
    if (g.degree() < 1) continue;
    out.push_back(g.shift(Num(Rat(k)) * theta).monic());
  }
  return out;
}

std::vector<Ball> roots_over(const KPoly& p, const FieldPtr& f) {
  if (p.degree() < 1) return {};
  if (p.degree() == 1) return {(-p.coeffs()[0] / p.coeffs()[1]).to_ball()};
  QPoly m = squarefree_part(norm_poly(p, f));
  const long bits = current_bits();
  std::vector<RootBox> boxes = isolate_roots(m, 32);
  for (long target = 32; target <= 8192; target *= 2) {
    std::vector<RootBox> keep;
    {
      PrecisionGuard guard(std::max(bits, target + 64));
      auto pb = to_balls(p);
      for (const auto& b : boxes)
        if (eval_ball(pb, b.ball()).contains_zero()) keep.push_back(b);
    }
    if (static_cast<int>(keep.size()) == p.degree()) {
      std::vector<Ball> balls;
      for (const auto& b : keep) balls.push_back(box_fine_enough(b, bits) ? b.ball() : refine_root(m, b, bits).ball());
      return balls;
    }
    boxes.clear();
    for (const auto& b : keep) boxes.push_back(refine_root(m, b, target * 2));
  }
  throw FieldError("could not separate roots over the extension");
}

Adjoined adjoin_root(const FieldPtr& f, const KPoly& p, const Ball& alpha, int max_degree) {
  if (p.degree() == 1) {
    Num a = -p.coeffs()[0] / p.coeffs()[1];
    return {f, f ? Num::generator(f) : Num(0), a};
  }
  const int fdeg = f ? f->degree() : 1;
  if (fdeg * p.degree() > max_degree)
    throw DegreeBoundExceeded("extension degree " + std::to_string(fdeg * p.degree()) + " exceeds bound " +
                              std::to_string(max_degree));
  if (!f) {
    QPoly m = norm_poly(p, nullptr).monic();
    for (long bits = 32; bits <= 4096; bits *= 2) {
      std::vector<RootBox> hit;
      for (const auto& b : isolate_roots(m, bits))
        if (b.ball().overlaps(alpha)) hit.push_back(b);
      if (hit.size() == 1) {
        FieldPtr L = ExtensionField::create_unchecked(m, hit[0]);
        return {L, Num(0), Num::generator(L)};
      }
      if (hit.empty()) break;
    }
    throw FieldError("adjoin_root: could not locate the requested root");
  }

  long k = 0;
  QPoly n;
  for (int step = 0;; ++step) {
    k = shift_for(step);
    n = norm_shifted(p, f, k);
    if (squarefree(n)) break;
    if (step > 64) throw FieldError("no primitive element found");
  }
  n = n.monic();
  const Ball theta = f->theta();
  const Ball gamma = alpha + Ball::exact(Rat(k)) * theta;
  auto pb = to_balls(p);
  RootBox chosen;
  bool found = false;
  std::vector<RootBox> cands = isolate_roots(n, 32);
  for (long bits = 32; bits <= 8192 && !found; bits *= 2) {
    std::vector<RootBox> keep;
    for (const auto& b : cands) {
      Ball g = b.ball();
      if (!g.overlaps(gamma)) continue;
      Ball a = g - Ball::exact(Rat(k)) * theta;
      if (!eval_ball(pb, a).contains_zero()) continue;
      keep.push_back(b);
    }
    if (keep.size() == 1) {
      chosen = keep[0];
      found = true;
      break;
    }
    if (keep.empty()) break;
    cands.clear();
    for (const auto& b : keep) cands.push_back(refine_root(n, b, bits * 2));
  }
  if (!found) throw FieldError("adjoin_root: ambiguous primitive element root");
  FieldPtr L = ExtensionField::create_unchecked(n, chosen);
  Num gam = Num::generator(L);

  // theta_L = root of gcd(mu(z), p(gamma - k z; z)) over L
  KPoly z = KPoly::x();
  KPoly lin = KPoly(gam) - KPoly(Num(Rat(k))) * z;
  KPoly s, pw(Num(1));
  for (int i = 0; i <= p.degree(); ++i) {
    const Num& c = p.coeffs()[i];
    KPoly ci = c.is_rational() ? KPoly(c) : to_kpoly(c.residue());
    s += ci * pw;
    pw = pw * lin;
  }
  KPoly g = gcd(to_kpoly(f->minpoly()), s);
  if (g.degree() != 1) throw FieldError("primitive element: gcd is not linear");
  Num theta_l = -g.coeffs()[0];
  Num alpha_l = gam - Num(Rat(k)) * theta_l;
  return {L, theta_l, alpha_l};
}

Num embed(const Num& x, const Adjoined& a) {
  if (x.kind() != Num::Kind::Algebraic) return x;
  Num acc(0);
  const auto& r = x.residue().coeffs();
  for (auto it = r.rbegin(); it != r.rend(); ++it) acc = acc * a.old_theta + Num(*it);
  return acc;
}

Adjoined merge_fields(const FieldPtr& a, const FieldPtr& b, int max_degree) {
  if (!b) return {a, a ? Num::generator(a) : Num(0), Num(0)};
  if (!a) return {b, Num(0), Num::generator(b)};
  if (a == b || a->same_as(*b)) return {a, Num::generator(a), Num::generator(a)};
  auto factors = factor_over(to_kpoly(b->minpoly()), a);
  for (long bits = current_bits(); bits <= 8192; bits *= 2) {
    PrecisionGuard guard(bits);
    Ball tb = b->theta();
    std::vector<const KPoly*> hit;
    for (const auto& g : factors)
      if (eval_ball(to_balls(g), tb).contains_zero()) hit.push_back(&g);
    if (hit.size() == 1) return adjoin_root(a, *hit[0], tb, max_degree);
    if (hit.empty()) break;
  }
  throw FieldError("merge_fields: no factor vanishes at the generator");
}

}  // namespace gasymp

namespace gasymp {

QPoly cyclotomic_poly(int n) {
  QPoly p = QPoly::monomial(Rat(1), n) - QPoly(Rat(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_div(p, cyclotomic_poly(d));
  return p;
}

Adjoined adjoin_root_of_unity(const FieldPtr& f, int n, int max_degree) {
  if (n <= 2) return {f, f ? Num::generator(f) : Num(0), Num(n == 1 ? 1 : -1)};
  const KPoly phi = to_kpoly(cyclotomic_poly(n));
  auto factors = f ? factor_over(phi, f) : std::vector<KPoly>{phi};
  for (long bits = std::max(128L, current_bits()); bits <= 8192; bits *= 2) {
    PrecisionGuard guard(bits);
    Ball z(root_of_unity(n, 1), ulp_scale());
    std::vector<const KPoly*> hit;
    for (const auto& g : factors)
      if (eval_ball(to_balls(g), z).contains_zero()) hit.push_back(&g);
    if (hit.size() == 1) return adjoin_root(f, *hit[0], z, max_degree);
    if (hit.empty()) break;
  }
  throw FieldError("adjoin_root_of_unity: no factor vanishes at the root of unity");
}

std::optional<bool> lists_equal(const std::vector<Num>& a, const std::vector<Num>& b, int max_degree) {
  if (a.size() != b.size()) return false;
  // cheap exclusion first
  for (long bits : {128L, 512L}) {
    PrecisionGuard guard(std::max(bits, current_bits()));
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i].to_ball() - b[i].to_ball()).contains_zero()) return false;
  }
  FieldPtr fa, fb;
  for (const auto* v : {&a, &b})
    for (const auto& x : *v) {
      if (!x.is_exact()) return std::nullopt;
      if (x.field()) (v == &a ? fa : fb) = x.field();
    }
  try {
    Adjoined m = merge_fields(fa, fb, max_degree);
    const Adjoined mb{m.field, m.alpha, Num(0)};
    for (std::size_t i = 0; i < a.size(); ++i) {
      Num x = embed(a[i], m);
      Num y = embed(b[i], mb);
      if (!(x - y).is_zero()) return false;
    }
    return true;
  } catch (const DegreeBoundExceeded&) {
    return std::nullopt;
  }
}

}  // namespace gasymp
