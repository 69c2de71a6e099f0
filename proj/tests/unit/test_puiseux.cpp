#include <gtest/gtest.h>

#include <random>

#include "gasymp/factor.hpp"
#include "gasymp/poly_parser.hpp"
#include "gasymp/puiseux.hpp"

using namespace gasymp;

namespace {

// g(y, z) = F(1, y, z) for a curve f(x, y) of total degree d.
YZPoly dehomogenize_x(const QBiPoly& f) {
  const int d = f.total_degree();
  YZPoly g;
  for (const auto& [e, c] : f.terms()) g.add_term(e.second, d - e.first - e.second, c);
  return g;
}

Rat coeff_at(const PuiseuxSeries& s, const Rat& e) {
  for (const auto& t : s.terms)
    if (t.exp == e) return t.coeff.rational();
  return Rat(0);
}

const char* kQuartic = "2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3";
const char* kParamQuartic = "-y + x^2 - 2*x*y^2 + y^4";

}  // namespace

TEST(Puiseux, CubicPointRamifiesThree) {
  YZPoly g = dehomogenize_x(parse_poly(kQuartic));
  auto classes = puiseux_at(g, Num(0));
  ASSERT_EQ(classes.size(), 1u);
  const auto& s = classes[0].rep;
  EXPECT_EQ(s.N, 3);
  EXPECT_EQ(classes[0].class_size, 3);
  EXPECT_FALSE(s.numeric);
  EXPECT_EQ(coeff_at(s, Rat(1, 3)), Rat(1));
  EXPECT_EQ(coeff_at(s, Rat(1)), Rat(-1, 3));
  EXPECT_EQ(coeff_at(s, Rat(5, 3)), Rat(1, 9));
  EXPECT_EQ(coeff_at(s, Rat(7, 3)), Rat(-2, 81));
  EXPECT_EQ(coeff_at(s, Rat(0)), Rat(0));
}

TEST(Puiseux, SimplePointIsRegular) {
  YZPoly g = dehomogenize_x(parse_poly(kQuartic));
  auto classes = puiseux_at(g, Num(2));
  ASSERT_EQ(classes.size(), 1u);
  const auto& s = classes[0].rep;
  EXPECT_EQ(s.N, 1);
  EXPECT_EQ(coeff_at(s, Rat(0)), Rat(2));
  EXPECT_EQ(coeff_at(s, Rat(1)), Rat(0));
  EXPECT_EQ(coeff_at(s, Rat(4)), Rat(3, 8));
  EXPECT_EQ(coeff_at(s, Rat(5)), Rat(-9, 64));
}

TEST(Puiseux, QuarticRamificationFour) {
  YZPoly g = dehomogenize_x(parse_poly(kParamQuartic));
  auto classes = puiseux_solutions(g);
  ASSERT_EQ(classes.size(), 1u);
  const auto& s = classes[0].rep;
  EXPECT_EQ(s.N, 4);
  EXPECT_EQ(coeff_at(s, Rat(1, 2)), Rat(1));
  EXPECT_EQ(coeff_at(s, Rat(5, 4)), Rat(1, 2));
  EXPECT_EQ(coeff_at(s, Rat(11, 4)), Rat(-1, 64));
  EXPECT_EQ(coeff_at(s, Rat(3, 4)), Rat(0));
}

TEST(Puiseux, ExactLine) {
  YZPoly g = YZPoly::x() - YZPoly::y();  // y - z
  auto classes = puiseux_solutions(g);
  ASSERT_EQ(classes.size(), 1u);
  const auto& s = classes[0].rep;
  EXPECT_EQ(s.N, 1);
  ASSERT_EQ(s.terms.size(), 1u);
  EXPECT_EQ(s.terms[0].exp, Rat(1));
  EXPECT_FALSE(s.trunc.has_value());
  EXPECT_FALSE(residual_valuation(g, s).has_value());
}

TEST(Puiseux, ConjugateOfQuartic) {
  YZPoly g = dehomogenize_x(parse_poly(kParamQuartic));
  auto classes = puiseux_solutions(g);
  ASSERT_EQ(classes.size(), 1u);
  PrecisionGuard guard(128);
  PuiseuxSeries c1 = conjugate_series(classes[0], 1);
  for (const auto& t : c1.terms) {
    Complex v = t.coeff.approx();
    if (t.exp == Rat(1, 2)) {
      EXPECT_NEAR(v.re.convert_to<double>(), -1.0, 1e-30);
      EXPECT_NEAR(v.im.convert_to<double>(), 0.0, 1e-30);
    }
    if (t.exp == Rat(5, 4)) {
      EXPECT_NEAR(v.re.convert_to<double>(), 0.0, 1e-30);
      EXPECT_NEAR(v.im.convert_to<double>(), 0.5, 1e-30);
    }
  }
  // N = 1: conjugation is the identity
  auto line = puiseux_solutions(YZPoly::x() - YZPoly::y());
  PuiseuxSeries same = conjugate_series(line[0], 1);
  EXPECT_EQ(same.terms[0].coeff.approx().re.convert_to<double>(), 1.0);
}

TEST(Puiseux, ProductOfConjugatesHasIntegerPowers) {
  YZPoly g = dehomogenize_x(parse_poly(kQuartic));
  auto classes = puiseux_at(g, Num(0));
  ASSERT_EQ(classes.size(), 1u);
  PrecisionGuard guard(256);
  const int N = classes[0].rep.N;
  // product of (y - phi_j) as polynomial in y with coefficients in u = z^(1/N)
  std::vector<std::vector<Complex>> prod{{Complex(Real(1))}};  // prod[k][e]: y^k, u^e
  for (int j = 1; j <= N; ++j) {
    PuiseuxSeries cj = conjugate_series(classes[0], j);
    std::vector<Complex> phi;
    for (const auto& t : cj.terms) {
      long e = Rat(t.exp * N).get_num().get_si();
      if (static_cast<long>(phi.size()) <= e) phi.resize(e + 1);
      phi[e] += t.coeff.approx();
    }
    std::vector<std::vector<Complex>> next(prod.size() + 1);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      auto& up = next[k + 1];
      if (up.size() < prod[k].size()) up.resize(prod[k].size());
      for (std::size_t e = 0; e < prod[k].size(); ++e) up[e] += prod[k][e];
      auto& same = next[k];
      if (same.size() < prod[k].size() + phi.size()) same.resize(prod[k].size() + phi.size());
      for (std::size_t e = 0; e < prod[k].size(); ++e)
        for (std::size_t f = 0; f < phi.size(); ++f) same[e + f] -= prod[k][e] * phi[f];
    }
    prod = next;
  }
  for (const auto& row : prod)
    for (std::size_t e = 0; e < row.size(); ++e)
      if (e % N != 0) EXPECT_LT(row[e].abs().convert_to<double>(), 1e-40) << "u^" << e;
}

TEST(Puiseux, ResidualCertificate) {
  YZPoly g = dehomogenize_x(parse_poly(kQuartic));
  TruncationPolicy pol;
  pol.guarantee = TruncationPolicy::Guarantee::FixedOrder;
  pol.fixed_order = 3;
  auto classes = puiseux_at(g, Num(0), pol);
  ASSERT_EQ(classes.size(), 1u);
  PuiseuxSeries s = classes[0].rep;
  ASSERT_TRUE(s.trunc.has_value());
  EXPECT_GE(*s.trunc, Rat(3));
  auto v = residual_valuation(g, s);
  ASSERT_TRUE(v.has_value());
  EXPECT_GE(*v, *s.trunc);

  // flip the sign of one coefficient
  s.terms[1].coeff = -s.terms[1].coeff;
  auto bad = residual_valuation(g, s);
  ASSERT_TRUE(bad.has_value());
  EXPECT_LT(*bad, *s.trunc);
}

TEST(Puiseux, ClassSizesSumToDegree) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  int checked = 0;
  for (int trial = 0; trial < 30 && checked < 12; ++trial) {
    // random g with g(y, 0) of full degree, having repeated roots half of the time
    const int dy = 2 + trial % 3;
    YZPoly g;
    if (trial % 2 == 0) {
      g = pow(YZPoly::x() - YZPoly(Rat(coef(rng))), dy);
    } else {
      for (int i = 0; i <= dy; ++i) g.add_term(i, 0, Rat(coef(rng)));
      g.add_term(dy, 0, Rat(1) - g.coeff(dy, 0));
    }
    for (int i = 0; i < dy; ++i)
      for (int j = 1; j <= 3; ++j)
        if (coef(rng) > 1) g.add_term(i, j, Rat(coef(rng)));
    if (bivariate_squarefree_part(g).total_degree() != g.total_degree()) continue;
    auto classes = puiseux_solutions(g);
    int total = 0;
    for (const auto& c : classes) {
      total += c.class_size;
      auto v = residual_valuation(g, c.rep);
      if (c.rep.trunc && v) EXPECT_GE(*v, *c.rep.trunc) << format_poly(g, Style::Plain, {"y", "z"});
    }
    EXPECT_EQ(total, g.deg_x()) << format_poly(g, Style::Plain, {"y", "z"});
    ++checked;
  }
  EXPECT_GE(checked, 8);
}
