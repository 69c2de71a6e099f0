#include <gtest/gtest.h>

#include <random>

#include "gasymp/classify.hpp"
#include "gasymp/poly_parser.hpp"

using namespace gasymp;

namespace {

const char* kQuartic = "2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3";
const char* kParamQuartic = "-y + x^2 - 2*x*y^2 + y^4";
const char* kCubic = "x^3 + 3*x^2*y + 3*x*y^2 + y^3 + 2*x^2 + y - 3";

KBiPoly K(const char* s) {
  return parse_poly(s).map([](const Rat& c) { return Num(c); });
}

Rat r_coeff(const InfinityBranch& B, const Rat& e) {
  for (const auto& t : B.r_terms)
    if (t.exp == e) return t.coeff.rational();
  return Rat(0);
}

}  // namespace

TEST(Perfect, PowerCurves) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {5, 3}, {7, 4}}) {
    std::string s = "y^" + std::to_string(n) + " - x^" + std::to_string(m);
    auto v = is_perfect(parse_poly(s));
    EXPECT_TRUE(v.perfect) << s;
    EXPECT_EQ(v.branch_count, 1) << s;
    EXPECT_EQ(v.branch_degree, n) << s;
    EXPECT_EQ(v.curve_degree, n) << s;
  }
  auto v = is_perfect(parse_poly("y^3 - x"));
  EXPECT_TRUE(v.perfect);
  EXPECT_FALSE(is_regular_perfect(parse_poly("y^3 - x")));
}

TEST(Perfect, NotPerfect) {
  auto a = is_perfect(parse_poly(kParamQuartic));
  EXPECT_FALSE(a.perfect);
  EXPECT_EQ(a.reason, PerfectionVerdict::Reason::DegreeDeficit);
  EXPECT_EQ(a.branch_degree, 2);

  auto b = is_perfect(parse_poly(kQuartic));
  EXPECT_FALSE(b.perfect);
  EXPECT_EQ(b.reason, PerfectionVerdict::Reason::MultipleBranches);
  EXPECT_EQ(b.branch_count, 2);
  EXPECT_EQ(reason_str(b.reason), "multiple-branches");
}

TEST(RegularPerfect, Examples) {
  EXPECT_TRUE(is_regular_perfect(parse_poly(kCubic)));
  EXPECT_TRUE(is_regular_perfect(parse_poly("y^2 - x")));
  EXPECT_TRUE(is_regular_perfect(parse_poly("y - 2*x")));
  EXPECT_TRUE(is_regular_perfect(parse_poly("x - 5")));
  EXPECT_FALSE(is_regular_perfect(parse_poly(kQuartic)));
  EXPECT_FALSE(is_regular_perfect(parse_poly("x*y - 1")));
  // x^2 is the leading form: point (0 : 1 : 0), f_1 = y
  EXPECT_TRUE(is_regular_perfect(parse_poly("x^2 - y")));

  auto p = single_infinity_point(K(kCubic));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->y0.rational(), Rat(-1));
  // regular perfect curves are perfect
  EXPECT_TRUE(is_perfect(parse_poly(kCubic)).perfect);
}

TEST(Proximity, CubicClass) {
  auto d = proximity_class(parse_poly(kCubic));
  EXPECT_EQ(d.d, 3);
  EXPECT_EQ(d.dimension, 3);
  EXPECT_EQ(d.irrelevant, (std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {0, 0}}));
  EXPECT_EQ(d.parameter_names(), (std::vector<std::string>{"a", "b", "c"}));
  KBiPoly back = d.member({Rat(0), Rat(1), Rat(-3)});
  EXPECT_TRUE(back == K(kCubic));
}

TEST(Proximity, Dimensions) {
  for (int d = 1; d <= 8; ++d) {
    auto mons = irrelevant_monomials(d);
    EXPECT_EQ(static_cast<int>(mons.size()), d * (d - 1) / 2) << d;
    for (auto [i, j] : mons) EXPECT_LE(i + j, d - 2);
  }
  auto line = proximity_class(parse_poly("y - 2*x"));
  EXPECT_EQ(line.dimension, 0);
  EXPECT_EQ(line.family_str(), "y - 2*x");
  EXPECT_EQ(proximity_class(parse_poly("y^4 - x^3 + x^2 + 1")).dimension, 6);
  EXPECT_THROW(proximity_class(parse_poly("y^3 - x")), UnsupportedClass);
}

TEST(Proximity, SameClass) {
  EXPECT_TRUE(same_class(parse_poly("y^2 - x"), parse_poly("y^2 - x + 7")));
  EXPECT_TRUE(same_class(parse_poly("y^2 - x"), parse_poly("3*y^2 - 3*x + 1")));
  EXPECT_FALSE(same_class(parse_poly("y^2 - x"), parse_poly("y^2 - 2*x")));
  EXPECT_FALSE(same_class(parse_poly("y^2 - x"), parse_poly("y^3 - x^2")));
  EXPECT_THROW(same_class(parse_poly("y^2 - x"), parse_poly("y^3 - x")), UnsupportedClass);
}

TEST(Proximity, AsymptoteFamilyOfQuartic) {
  PreparedCurve c = prepare_curve(parse_poly(kQuartic));
  auto pts = infinity_points(c);
  auto B = infinity_branches(c, pts[1])[0];
  auto fam = asymptote_family(c, B);
  EXPECT_EQ(fam.dimension, 3);
  EXPECT_EQ(fam.family_str(), "y^3 + y^2 - x^2 + a*x + b*y + c");
  const KBiPoly ft = K("y^3 - x^2 + y^2 + 1/3*y + 1/27");
  for (const char* s : {"y^3 - x^2 + y^2 - y + 1/27", "y^3 - x^2 + y^2 + 1/3*y - 2*x + 1/27",
                        "y^3 - x^2 + y^2"}) {
    EXPECT_TRUE(is_regular_perfect(K(s))) << s;
    EXPECT_TRUE(same_class(K(s), ft)) << s;
  }
  // the line asymptote at (1 : 2 : 0) is unique
  auto B1 = infinity_branches(c, pts[0])[0];
  EXPECT_EQ(asymptote_family(c, B1).dimension, 0);
}

TEST(Proximity, SingularPointHasNoFamily) {
  PreparedCurve c = prepare_curve(parse_poly("y^3 - x"));
  auto B = infinity_branches(c, infinity_points(c)[0])[0];
  EXPECT_THROW(asymptote_family(c, B), UnsupportedClass);
}

TEST(Proximity, RandomIrrelevantTerms) {
  std::mt19937 rng(20261016);
  for (const char* s : {kCubic, "y^2 - x", "y^4 - x^3 + 2*x*y^2 + 5"}) {
    const KBiPoly f = K(s);
    auto d = proximity_class(f);
    for (const auto& g : sample_members(d, 100, rng)) {
      ASSERT_TRUE(is_regular_perfect(g)) << s;
      ASSERT_TRUE(same_class(f, g)) << s;
    }
  }
}

TEST(Proximity, MembersHaveConvergentBranches) {
  std::mt19937 rng(7);
  const QBiPoly f = parse_poly("y^3 - x^2 + y^2 + 1/3*y + 1/27");
  auto d = proximity_class(f);
  PreparedCurve cf = prepare_curve(f);
  auto bf = infinity_branches(cf, infinity_points(cf)[0])[0];
  for (const auto& g : sample_members(d, 5, rng)) {
    PreparedCurve cg = prepare_curve(to_qbipoly(g));
    auto bg = infinity_branches(cg, infinity_points(cg)[0]);
    ASSERT_EQ(bg.size(), 1u);
    EXPECT_EQ(branches_convergent(bf, bg[0]), std::optional<bool>(true)) << format_poly(g);
  }
}

TEST(Proximity, CoefficientChain) {
  // m = 0, f_{d-1} = b0 x^2 + b1 x y + b2 y^2 with b0 = -8, b1 = 3:
  // a1 = (-b0)^(1/3) = 2 and a2 = -b1 / (3 a1) = -1/2
  PreparedCurve c = prepare_curve(parse_poly("y^3 - 8*x^2 + 3*x*y + y^2 + x - 4"));
  ASSERT_EQ(c.lambda, 0);
  auto bs = infinity_branches(c, infinity_points(c)[0]);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(r_coeff(bs[0], Rat(2, 3)), Rat(2));
  EXPECT_EQ(r_coeff(bs[0], Rat(1, 3)), Rat(-1, 2));
}
