#include <gtest/gtest.h>

#include "gasymp/poly_parser.hpp"
#include "gasymp/verify.hpp"

using namespace gasymp;

namespace {

const char* kQuartic = "2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3";
const char* kParamQuartic = "-y + x^2 - 2*x*y^2 + y^4";

struct Fixture {
  PreparedCurve c;
  std::vector<InfinityBranch> branches;
};

Fixture load(const char* s) {
  Fixture fx{prepare_curve(parse_poly(s)), {}};
  for (const auto& P : infinity_points(fx.c))
    for (auto& B : infinity_branches(fx.c, P)) fx.branches.push_back(std::move(B));
  return fx;
}

double re(const Ball& b) { return b.mid().re.convert_to<double>(); }
double im(const Ball& b) { return b.mid().im.convert_to<double>(); }

}  // namespace

TEST(Sample, SeriesEvaluation) {
  PrecisionGuard g(128);
  Fixture q = load(kQuartic);
  // r1 = 2z + 3/8 z^-3 - 9/64 z^-4 + 27/512 z^-5 + ...
  const double oracle = 200 + 0.375e-6 - 9.0 / 64 * 1e-8 + 27.0 / 512 * 1e-10;
  Ball y = eval_branch(q.branches[0], 100, 0, 0);
  EXPECT_NEAR(re(y) - 200, oracle - 200, 1e-12);
  EXPECT_NEAR(im(y), 0, 1e-30);

  Fixture l = load("y - 2*x");
  Ball yl = eval_branch(l.branches[0], 37.5, 1.0, 0);
  Ball expect = Ball(Complex::polar(real_from_double(75), real_from_double(1.0)));
  EXPECT_TRUE((yl - expect).abs_upper() < real_from_double(1e-30));

  Fixture e = load(kParamQuartic);
  Ball ye = eval_branch(e.branches[0], 1e4, 0, 0);
  EXPECT_NEAR(re(ye), 100 + 0.05 - 1e-7 / 64, 1e-12);
  // the other real leaf: z^(-1/4) and z^(-7/4) change sign, z^(1/2) does not
  Ball y2 = eval_branch(e.branches[0], 1e4, 0, 2);
  EXPECT_NEAR(re(y2), 100 - 0.05 + 1e-7 / 64, 1e-12);
  EXPECT_NEAR(im(y2), 0, 1e-30);
}

TEST(Sample, PlanAndEscalation) {
  Fixture q = load(kQuartic);
  SamplePlan plan;
  auto rays = plan.effective_rays();
  ASSERT_EQ(rays.size(), 4u);
  EXPECT_EQ(rays[0], 0.0);
  EXPECT_EQ(plan.effective_rays(), rays);  // seeded
  auto s = sample_branch(q.branches[1], plan, &q.c.f);
  EXPECT_EQ(s.points.size(), 4u * 3u * s.radii.size());
  EXPECT_TRUE(s.certified);
  for (const auto& p : s.points)
    if (p.radius == s.radii.front()) EXPECT_LT(p.residual, real_from_double(1e-3));

  // a tiny first radius gets raised
  SamplePlan small;
  small.radii = {1e-1, 1e5};
  auto t = sample_branch(q.branches[1], small, &q.c.f);
  EXPECT_GT(t.radius_escalations, 0);
  EXPECT_GT(t.radii.front(), 1e-1);

  SamplePlan bad;
  bad.radii = {1e3, 1e2};
  EXPECT_THROW(sample_branch(q.branches[0], bad), std::invalid_argument);
}

TEST(Distance, PointLineOracle) {
  PrecisionGuard g(128);
  Fixture q = load(kQuartic);
  Asymptote a1 = build_asymptote(q.branches[0]);
  Ball x(Complex(real_from_double(100)));
  Ball y = eval_branch(q.branches[0], 100, 0, 0);
  // distance from (x, y) to y = 2x
  const double oracle = std::abs(re(y - Ball(Complex(real_from_double(200))))) / std::sqrt(5.0);
  Distance d = distance_to_asymptote(x, y, a1);
  EXPECT_FALSE(d.approximate);
  EXPECT_NEAR(d.value.convert_to<double>() / oracle, 1.0, 1e-6);
  EXPECT_LT(d.value.convert_to<double>(), 1e-6);

  // a point on the asymptote itself
  Asymptote a2 = build_asymptote(q.branches[1]);
  Ball t(Complex(real_from_double(3.25), real_from_double(-0.5)));
  Ball px = eval_ball(to_balls(a2.px), t), py = eval_ball(to_balls(a2.py), t);
  EXPECT_LT(distance_to_asymptote(px, py, a2).value.convert_to<double>(), 1e-30);
}

TEST(Distance, DecreasingAlongRadii) {
  PrecisionGuard g(128);
  Fixture q = load(kQuartic);
  Asymptote a2 = build_asymptote(q.branches[1]);
  double prev = 1e300;
  for (double R : {1e2, 1e3, 1e4, 1e5}) {
    Ball x(Complex(real_from_double(R)));
    double d = distance_to_asymptote(x, eval_branch(q.branches[1], R, 0, 0), a2).value.convert_to<double>();
    EXPECT_LT(d, prev) << R;
    prev = d;
  }
}

TEST(Divisibility, ExamplesAndControl) {
  Fixture q = load(kQuartic);
  for (const auto& B : q.branches) {
    EXPECT_EQ(divisibility_check(q.c.f, B), std::optional<bool>(true));
    EXPECT_EQ(divisibility_check(q.c.f, B, B.N + 1), std::optional<bool>(false));
  }
}

TEST(Decay, PassAndNegativeControl) {
  Fixture q = load(kQuartic);
  Asymptote a1 = build_asymptote(q.branches[0]);
  Asymptote a2 = build_asymptote(q.branches[1]);
  auto r1 = approach_decay_check(q.c.f, q.branches[0], a1);
  EXPECT_TRUE(r1.pass);
  EXPECT_LT(r1.max_final_on_real_rays().convert_to<double>(), 1e-6);
  auto r2 = approach_decay_check(q.c.f, q.branches[1], a2);
  EXPECT_TRUE(r2.pass);
  auto bad = approach_decay_check(q.c.f, q.branches[1], a1);
  EXPECT_FALSE(bad.pass);
  for (const auto& s : bad.series) EXPECT_FALSE(s.non_increasing);

  Fixture e = load(kParamQuartic);
  auto re42 = approach_decay_check(e.c.f, e.branches[0], build_asymptote(e.branches[0]));
  EXPECT_TRUE(re42.pass);
  EXPECT_EQ(re42.series.size(), 4u * 4u);
}

TEST(Decay, ToleranceModes) {
  Fixture q = load(kQuartic);
  Asymptote a1 = build_asymptote(q.branches[0]);
  DecayTolerance rel{DecayTolerance::Mode::Relative, 1e-6};
  EXPECT_TRUE(approach_decay_check(q.c.f, q.branches[0], a1, {}, rel).pass);
  DecayTolerance abs_tol{DecayTolerance::Mode::Absolute, 1e-30};
  EXPECT_FALSE(approach_decay_check(q.c.f, q.branches[0], a1, {}, abs_tol).pass);
}
