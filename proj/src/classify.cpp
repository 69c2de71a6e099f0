#include "gasymp/classify.hpp"

#include "gasymp/poly_parser.hpp"

namespace gasymp {

namespace {

KBiPoly lift(const QBiPoly& q) {
  return q.map([](const Rat& c) { return Num(c); });
}

// f_k(x0, y0)
Num eval_form(const KBiPoly& f, int k, const Num& x0, const Num& y0) {
  Num acc(0);
  for (const auto& [e, c] : f.terms())
    if (e.first + e.second == k) acc += c * x0.pow(e.first) * y0.pow(e.second);
  return acc;
}

std::string param_name(std::size_t i) {
  static const std::string letters = "abcdefghijklmnopqrsuvw";
  if (i < letters.size()) return std::string(1, letters[i]);
  return "c" + std::to_string(i);
}

}  // namespace

std::string reason_str(PerfectionVerdict::Reason r) {
  switch (r) {
    case PerfectionVerdict::Reason::MultipleBranches:
      return "multiple-branches";
    case PerfectionVerdict::Reason::DegreeDeficit:
      return "degree-deficit";
    case PerfectionVerdict::Reason::Perfect:
      return "perfect";
  }
  return "";
}

PerfectionVerdict is_perfect(const PreparedCurve& c, const std::vector<InfinityBranch>& branches) {
  PerfectionVerdict v;
  v.curve_degree = c.d;
  v.branch_count = static_cast<int>(branches.size());
  if (branches.size() != 1) {
    v.reason = PerfectionVerdict::Reason::MultipleBranches;
    return v;
  }
  const InfinityBranch& B = branches[0];
  v.branch_degree = B.n;
  if (B.n < c.d) {
    v.reason = PerfectionVerdict::Reason::DegreeDeficit;
    return v;
  }
  if (B.N != B.n) throw std::logic_error("perfect curve whose branch has ramification above its degree");
  v.perfect = true;
  v.reason = PerfectionVerdict::Reason::Perfect;
  return v;
}

PerfectionVerdict is_perfect(const QBiPoly& f) {
  PreparedCurve c = prepare_curve(f);
  std::vector<InfinityBranch> bs;
  for (const auto& P : infinity_points(c))
    for (auto& B : infinity_branches(c, P)) bs.push_back(std::move(B));
  return is_perfect(c, bs);
}

bool infinity_point_regular(const KBiPoly& f, const Num& x0, const Num& y0) {
  const int d = f.total_degree();
  const KBiPoly fd = f.homogeneous(d);
  if (!eval_form(fd.dx(), d - 1, x0, y0).is_zero()) return true;
  if (!eval_form(fd.dy(), d - 1, x0, y0).is_zero()) return true;
  return !eval_form(f, d - 1, x0, y0).is_zero();
}

std::optional<SinglePoint> single_infinity_point(const KBiPoly& f) {
  const int d = f.total_degree();
  if (d < 1) return std::nullopt;
  const KBiPoly fd = f.homogeneous(d);
  const Num lc = fd.coeff(0, d);  // coefficient of y^d
  if (lc.is_zero()) {
    // the point is (0 : 1 : 0) exactly when f_d = c x^d
    if (fd.size() == 1 && !fd.coeff(d, 0).is_zero()) return SinglePoint{Num(0), Num(1)};
    return std::nullopt;
  }
  // f_d(1, y) = lc (y - m)^d with m = -coeff(y^(d-1)) / (d lc)
  const Num m = -fd.coeff(1, d - 1) / (Num(d) * lc);
  KBiPoly expect = lc * pow(KBiPoly::y() - KBiPoly::monomial(m, 1, 0), d);
  if (!is_zero(expect - fd)) return std::nullopt;
  return SinglePoint{Num(1), m};
}

bool is_regular_perfect(const KBiPoly& f) {
  auto p = single_infinity_point(f);
  return p && infinity_point_regular(f, p->x0, p->y0);
}

bool is_regular_perfect(const QBiPoly& f) { return is_regular_perfect(lift(f)); }

std::vector<std::pair<int, int>> irrelevant_monomials(int d) {
  std::vector<std::pair<int, int>> out;
  for (int k = d - 2; k >= 0; --k)
    for (int i = k; i >= 0; --i) out.push_back({i, k - i});
  return out;
}

ProximityClassDescriptor proximity_class(const KBiPoly& f) {
  if (!is_regular_perfect(f)) throw UnsupportedClass("unsupported-class: curve is not regular perfect");
  ProximityClassDescriptor p;
  p.d = f.total_degree();
  p.form_d = f.homogeneous(p.d);
  p.form_d1 = f.homogeneous(p.d - 1);
  p.irrelevant = irrelevant_monomials(p.d);
  p.dimension = static_cast<int>(p.irrelevant.size());
  return p;
}

ProximityClassDescriptor proximity_class(const QBiPoly& f) { return proximity_class(lift(f)); }

std::vector<std::string> ProximityClassDescriptor::parameter_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < irrelevant.size(); ++i) out.push_back(param_name(i));
  return out;
}

std::string ProximityClassDescriptor::family_str() const {
  std::string s = format_poly(form_d + form_d1);
  auto names = parameter_names();
  for (std::size_t i = 0; i < irrelevant.size(); ++i) {
    auto [a, b] = irrelevant[i];
    std::string mono;
    auto part = [&](const char* v, int e) {
      if (e == 0) return;
      mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    part("x", a);
    part("y", b);
    s += " + " + names[i] + mono;
  }
  return s;
}

KBiPoly ProximityClassDescriptor::member(const std::vector<Rat>& coeffs) const {
  if (coeffs.size() != irrelevant.size()) throw std::invalid_argument("member: wrong number of coefficients");
  KBiPoly out = form_d + form_d1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.add_term(irrelevant[i].first, irrelevant[i].second, Num(coeffs[i]));
  return out;
}

bool same_class(const KBiPoly& f, const KBiPoly& g) {
  if (!is_regular_perfect(f) || !is_regular_perfect(g)) throw UnsupportedClass("unsupported-class: input is not regular perfect");
  const int d = f.total_degree();
  if (g.total_degree() != d) return false;
  const KBiPoly a = monic_leading_form(f), b = monic_leading_form(g);
  return is_zero(a.homogeneous(d) - b.homogeneous(d)) && is_zero(a.homogeneous(d - 1) - b.homogeneous(d - 1));
}

bool same_class(const QBiPoly& f, const QBiPoly& g) { return same_class(lift(f), lift(g)); }

ProximityClassDescriptor asymptote_family(const PreparedCurve& c, const InfinityBranch& B) {
  if (!infinity_point_regular(lift(c.f), Num(1), B.point.m))
    throw UnsupportedClass("family-enumeration-unavailable: singular infinity point");
  Asymptote a = original_frame_asymptote(B, c.lambda);
  auto p = single_infinity_point(a.implicit);
  if (!p || !infinity_point_regular(a.implicit, p->x0, p->y0))
    throw std::logic_error("asymptote at a regular infinity point is not regular perfect");
  return proximity_class(a.implicit);
}

std::vector<KBiPoly> sample_members(const ProximityClassDescriptor& d, int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::vector<KBiPoly> out;
  for (int i = 0; i < k; ++i) {
    std::vector<Rat> cs;
    for (std::size_t j = 0; j < d.irrelevant.size(); ++j) {
      Rat q(num(rng), den(rng));
      q.canonicalize();
      cs.push_back(q);
    }
    out.push_back(d.member(cs));
  }
  return out;
}

}  // namespace gasymp
