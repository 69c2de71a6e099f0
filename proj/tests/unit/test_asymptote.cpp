#include <gtest/gtest.h>

#include "gasymp/asymptote.hpp"
#include "gasymp/poly_parser.hpp"

using namespace gasymp;

namespace {

const char* kQuartic = "2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3";
const char* kParamQuartic = "-y + x^2 - 2*x*y^2 + y^4";
const char* kIntro = "-y*x - y^2 - x^3 + 2*x^2*y + x^2 - 2*y";

std::vector<InfinityBranch> all_branches(const PreparedCurve& c, TruncationPolicy pol = {}) {
  std::vector<InfinityBranch> out;
  for (const auto& P : infinity_points(c))
    for (auto& B : infinity_branches(c, P, pol)) out.push_back(std::move(B));
  return out;
}

// p and q agree up to a nonzero rational factor
bool proportional(const QBiPoly& p, const QBiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const auto& [e, c] = *p.terms().begin();
  Rat qc = q.coeff(e.first, e.second);
  if (sgn(qc) == 0) return false;
  return (qc / c) * p == q;
}

}  // namespace

TEST(Implicitize, FromParametrization) {
  EXPECT_EQ(implicitize(QPoly::x(), QPoly({Rat(0), Rat(2)})), parse_poly("y - 2*x"));
  QBiPoly cusp = implicitize(QPoly::monomial(Rat(1), 3), QPoly({Rat(-1, 3), Rat(0), Rat(1)}));
  EXPECT_TRUE(proportional(cusp, parse_poly("-x^2 + y^3 + y^2 + 1/3*y + 1/27")));
  EXPECT_TRUE(proportional(implicitize(QPoly::monomial(Rat(1), 2), QPoly::x()), parse_poly("y^2 - x")));
}

TEST(Asymptote, QuarticWithTwoPoints) {
  PreparedCurve c = prepare_curve(parse_poly(kQuartic));
  auto bs = all_branches(c);
  ASSERT_EQ(bs.size(), 2u);
  Asymptote a1 = build_asymptote(bs[0]);
  Asymptote a2 = build_asymptote(bs[1]);
  EXPECT_EQ(to_qbipoly(a1.implicit), parse_poly("y - 2*x"));
  EXPECT_EQ(to_qbipoly(a2.implicit), parse_poly("y^3 + y^2 - x^2 + 1/3*y + 1/27"));
  EXPECT_EQ(format_upoly(a2.py), "t^2 - 1/3");
  EXPECT_EQ(format_upoly(a1.py), "2*t");
  for (const auto* a : {&a1, &a2}) {
    EXPECT_TRUE(param_on_implicit(*a));
    EXPECT_TRUE(leading_form_ok(*a));
    EXPECT_EQ(a->properness_gcd, 1);
    EXPECT_LE(a->implicit.total_degree(), c.d);
  }
  for (const auto& B : bs) EXPECT_EQ(leaf_independence_check(B), std::optional<bool>(true));
}

TEST(Asymptote, QuarticParabola) {
  PreparedCurve c = prepare_curve(parse_poly(kParamQuartic));
  auto bs = all_branches(c);
  ASSERT_EQ(bs.size(), 1u);
  Asymptote a = build_asymptote(bs[0]);
  EXPECT_EQ(a.n, 2);
  EXPECT_EQ(to_qbipoly(a.implicit), parse_poly("y^2 - x"));
  EXPECT_EQ(leaf_independence_check(bs[0]), std::optional<bool>(true));
}

TEST(Asymptote, LeafIndependenceDetectsCorruption) {
  PreparedCurve c = prepare_curve(parse_poly(kParamQuartic));
  auto B = all_branches(c)[0];
  // with b = 1 the reparametrization t -> c t no longer fixes t^n
  B.b = 1;
  EXPECT_EQ(leaf_independence_check(B), std::optional<bool>(false));
}

TEST(Asymptote, AlgebraicCoefficients) {
  // circle: lines y = +-i x at the two conjugate points
  PreparedCurve c = prepare_curve(parse_poly("x^2 + y^2 - 1"));
  for (const auto& B : all_branches(c)) {
    Asymptote a = build_asymptote(B);
    EXPECT_EQ(a.n, 1);
    EXPECT_FALSE(a.is_rational());
    EXPECT_TRUE(param_on_implicit(a));
    EXPECT_TRUE(leading_form_ok(a));
  }
  // y^2 = 2 x^2 + x: lines through irrational slopes, branch exponents stay integral
  PreparedCurve h = prepare_curve(parse_poly("y^2 - 2*x^2 - x"));
  auto hb = all_branches(h);
  ASSERT_EQ(hb.size(), 2u);
  for (const auto& B : hb) {
    Asymptote a = build_asymptote(B);
    EXPECT_TRUE(param_on_implicit(a));
    EXPECT_EQ(a.implicit.total_degree(), 1);
  }
}

TEST(Asymptote, OriginalFrameIntroCubic) {
  PreparedCurve c = prepare_curve(parse_poly(kIntro));
  ASSERT_EQ(c.lambda, 1);
  TruncationPolicy pol;
  pol.cover_exponent = 2;
  auto bs = all_branches(c, pol);
  std::vector<QBiPoly> got;
  for (const auto& B : bs) {
    Asymptote a = original_frame_asymptote(B, c.lambda);
    EXPECT_TRUE(param_on_implicit(a));
    EXPECT_TRUE(leading_form_ok(a));
    got.push_back(to_qbipoly(a.implicit));
  }
  ASSERT_EQ(got.size(), 2u);
  QBiPoly parabola = parse_poly("y - 2*x^2 + 3/2*x + 15/8");
  QBiPoly line = parse_poly("y - 1/2*x + 1/8");
  bool p_found = false, l_found = false;
  for (const auto& g : got) {
    p_found = p_found || proportional(g, parabola);
    l_found = l_found || proportional(g, line);
  }
  EXPECT_TRUE(p_found) << format_poly(got[0]) << " | " << format_poly(got[1]);
  EXPECT_TRUE(l_found) << format_poly(got[0]) << " | " << format_poly(got[1]);
}

TEST(Asymptote, OriginalFrameShearedConics) {
  TruncationPolicy pol;
  pol.cover_exponent = 2;
  PreparedCurve h = prepare_curve(parse_poly("x*y - 1"));
  std::vector<QBiPoly> got;
  for (const auto& B : all_branches(h, pol)) got.push_back(to_qbipoly(original_frame_asymptote(B, h.lambda).implicit));
  ASSERT_EQ(got.size(), 2u);
  EXPECT_TRUE((got[0] == parse_poly("x") && got[1] == parse_poly("y")) ||
              (got[0] == parse_poly("y") && got[1] == parse_poly("x")))
      << format_poly(got[0]) << " | " << format_poly(got[1]);

  PreparedCurve p = prepare_curve(parse_poly("y - x^2"));
  auto pb = all_branches(p, pol);
  ASSERT_EQ(pb.size(), 1u);
  Asymptote a = original_frame_asymptote(pb[0], p.lambda);
  EXPECT_TRUE(proportional(to_qbipoly(a.implicit), parse_poly("y - x^2"))) << format_poly(to_qbipoly(a.implicit));
}
