#include <gtest/gtest.h>

#include <map>
#include <random>

#include "gasymp/factor.hpp"
#include "gasymp/field.hpp"
#include "gasymp/resultant.hpp"

using namespace gasymp;

namespace {

QPoly qp(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long a : c) v.emplace_back(a);
  return QPoly(v);
}

// p(t) given as t-coefficients that are bivariate polynomials
std::vector<QBiPoly> x_minus_tn(int n) {
  std::vector<QBiPoly> v(n + 1);
  v[0] = QBiPoly::x();
  v[n] = QBiPoly(Rat(-1));
  return v;
}

std::vector<QBiPoly> y_minus(const QPoly& p) {
  std::vector<QBiPoly> v(std::max(1, p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) v[i] = QBiPoly(Rat(-p.coeffs()[i]));
  v[0] += QBiPoly::y();
  return v;
}

QBiPoly bi(std::initializer_list<std::tuple<int, int, Rat>> terms) {
  QBiPoly p;
  for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
  return p;
}

}  // namespace

TEST(Resultant, LineFromLinearParam) {
  // Res_t(x - t, y - 2t)
  auto r = resultant_sylvester(x_minus_tn(1), y_minus(qp({0, 2})));
  EXPECT_EQ(r, bi({{0, 1, 1}, {1, 0, -2}}));
}

TEST(Resultant, CuspidalParam) {
  QPoly p(std::vector<Rat>{Rat(-1, 3), 0, 1});
  auto r = resultant_sylvester(x_minus_tn(3), y_minus(p));
  // 27 y^3 + 27 y^2 - 27 x^2 + 9 y + 1 after integer normalization
  EXPECT_EQ(r, bi({{0, 3, 27}, {0, 2, 27}, {2, 0, -27}, {0, 1, 9}, {0, 0, 1}}));
  EXPECT_EQ(monic_leading_form(r), bi({{0, 3, 1}, {0, 2, 1}, {2, 0, -1}, {0, 1, Rat(1, 3)}, {0, 0, Rat(1, 27)}}));
}

TEST(Resultant, Parabola) {
  auto r = resultant_sylvester(x_minus_tn(2), y_minus(qp({0, 1})));
  EXPECT_EQ(r, bi({{0, 2, 1}, {1, 0, -1}}));
}

TEST(Resultant, DegenerateInputsRejected) {
  std::vector<QBiPoly> c1{QBiPoly::x()}, c2{QBiPoly::y()};
  EXPECT_THROW(resultant_sylvester(c1, c2), DegenerateResultant);
}

TEST(Resultant, MultiplicativeOnRandomInputs) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), deg(1, 3);
  auto rand_poly = [&]() {
    std::vector<Rat> v(deg(rng) + 1);
    for (auto& c : v) c = coef(rng);
    if (v.back() == 0) v.back() = 1;
    return QPoly(v);
  };
  for (int trial = 0; trial < 40; ++trial) {
    QPoly p = rand_poly(), q = rand_poly(), r = rand_poly();
    Rat a = sylvester_resultant(p.coeffs(), (q * r).coeffs());
    Rat b = sylvester_resultant(p.coeffs(), q.coeffs()) * sylvester_resultant(p.coeffs(), r.coeffs());
    EXPECT_EQ(abs(a), abs(b));
  }
}

TEST(Resultant, ProductOverRootsOfXMinusTn) {
  // Res_t(x - t^n, y - p(t)) = prod (y - p(alpha_i)) at rational x, checked numerically
  std::mt19937 rng(11);
  PrecisionGuard guard(128);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Rat> pc(n + 1);
    for (auto& c : pc) c = Rat(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
    pc[n] = 1;
    QPoly p(pc);
    auto raw = sylvester_resultant(x_minus_tn(n), y_minus(p));
    Rat x0(static_cast<long>(rng() % 9) + 2, 3), y0(static_cast<long>(rng() % 5) - 2, 7);
    Complex lhs = Complex::from_rat(raw.eval<Rat>(x0, y0));
    Complex rhs(Real(1));
    for (int k = 0; k < n; ++k) {
      Complex a = Complex::polar(pow(to_real(x0), Real(1) / n), Real(2) * real_pi() * k / n);
      Complex pa = Complex::from_rat(pc[n]);
      for (int i = n - 1; i >= 0; --i) pa = pa * a + Complex::from_rat(pc[i]);
      rhs *= Complex::from_rat(y0) - pa;
    }
    // sign convention of the Sylvester determinant
    if ((lhs - rhs).abs() > 1e-20 * (1 + rhs.abs())) rhs = -rhs;
    EXPECT_LT((lhs - rhs).abs().convert_to<double>(), 1e-20 * (1 + rhs.abs().convert_to<double>())) << n;
  }
}

TEST(Factor, QuarticLeadingForm) {
  // f_4(1, y) = 2 y^3 - y^4
  auto fs = factor_rational(qp({0, 0, 0, 2, -1}));
  ASSERT_EQ(fs.size(), 2u);
  std::map<std::string, int> got;
  for (const auto& f : fs) got[f.poly == qp({0, 1}) ? "y" : f.poly == qp({-2, 1}) ? "y-2" : "?"] = f.mult;
  EXPECT_EQ(got, (std::map<std::string, int>{{"y", 3}, {"y-2", 1}}));
}

TEST(Factor, IrreducibleAndSquare) {
  auto a = factor_rational(qp({1, 0, 1}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].mult, 1);
  auto b = factor_rational(qp({1, -2, 1}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].poly, qp({-1, 1}));
  EXPECT_EQ(b[0].mult, 2);
}

TEST(Factor, SwinnertonDyerStyleQuartic) {
  // x^4 - 10x^2 + 1 is irreducible yet splits mod every prime
  EXPECT_TRUE(is_irreducible_rational(qp({1, 0, -10, 0, 1})));
  EXPECT_FALSE(is_irreducible_rational(qp({-1, 0, 0, 0, 1})));
}

TEST(Factor, RoundTripRandomProducts) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-9, 9), deg(1, 4), mult(1, 3), count(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    QPoly u(Rat(static_cast<long>(coef(rng) == 0 ? 3 : 2)));
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      std::vector<Rat> v(deg(rng) + 1);
      for (auto& c : v) c = Rat(coef(rng), 1 + rng() % 4);
      if (v.back() == 0) v.back() = 1;
      u = u * pow(QPoly(v), mult(rng));
    }
    auto fs = factor_rational(u);
    QPoly back(Rat(1));
    for (const auto& f : fs) {
      back = back * pow(f.poly, f.mult);
      EXPECT_TRUE(is_irreducible_rational(f.poly));
    }
    EXPECT_EQ(back, u.monic()) << trial;
  }
}

TEST(Factor, Bivariate) {
  QBiPoly x = QBiPoly::x(), y = QBiPoly::y(), one(Rat(1));
  QBiPoly a = y * y - x, b = y - x * x - one, c = x * y - one;
  auto fs = factor_bivariate(a * b * c);
  EXPECT_EQ(fs.size(), 3u);
  QBiPoly prod(Rat(1));
  for (const auto& f : fs) prod = prod * f;
  EXPECT_EQ(integer_primitive(prod), integer_primitive(a * b * c));
  EXPECT_EQ(factor_bivariate(y * y - x * x * x).size(), 1u);
  EXPECT_EQ(bivariate_squarefree_part(a * a * b), integer_primitive(a * b));
}

TEST(Field, SqrtTwo) {
  auto f = ExtensionField::create(qp({-2, 0, 1}), RootBox{Rat(7, 5), 0, Rat(1, 10)});
  Num t = Num::generator(f);
  EXPECT_EQ(t * t, Num(2));
  EXPECT_EQ(t.inverse(), Num(Rat(1, 2)) * t);
  EXPECT_THROW((void)Num(0).inverse(), std::domain_error);
}

TEST(Field, ReducibleMinpolyRejected) {
  EXPECT_THROW(ExtensionField::create(qp({-1, 0, 1}), RootBox{1, 0, Rat(1, 2)}), FieldError);
}

TEST(Field, AgreesWithBallEvaluation) {
  PrecisionGuard guard(128);
  auto f = ExtensionField::create(qp({-2, -1, 0, 1}), RootBox{Rat(3, 2), 0, Rat(1, 5)});
  Num t = Num::generator(f);
  Num a = t * t + Num(Rat(1, 3)) * t - Num(5), b = t - Num(1);
  Ball ta = f->theta();
  Ball expect = (ta * ta + Ball::exact(Rat(1, 3)) * ta - Ball::exact(5)) / (ta - Ball::exact(1));
  Ball got = (a / b).to_ball();
  EXPECT_TRUE(got.overlaps(expect));
  EXPECT_LT(got.rad().convert_to<double>(), 1e-30);
}

TEST(Field, TragerAndPrimitiveElement) {
  PrecisionGuard guard(128);
  auto f = ExtensionField::create(qp({-2, 0, 1}), RootBox{Rat(7, 5), 0, Rat(1, 10)});
  // y^2 - 2 splits over Q(sqrt 2); y^2 - 3 stays irreducible
  EXPECT_EQ(factor_over(to_kpoly(qp({-2, 0, 1})), f).size(), 2u);
  auto g = to_kpoly(qp({-3, 0, 1}));
  ASSERT_EQ(factor_over(g, f).size(), 1u);
  auto roots = roots_over(g, f);
  ASSERT_EQ(roots.size(), 2u);
  Adjoined adj = adjoin_root(f, g, roots[1], 16);
  ASSERT_TRUE(adj.field);
  EXPECT_EQ(adj.field->degree(), 4);
  EXPECT_EQ(adj.old_theta * adj.old_theta, Num(2));
  EXPECT_EQ(adj.alpha * adj.alpha, Num(3));
  EXPECT_TRUE(adj.alpha.to_ball().overlaps(roots[1]));
  EXPECT_THROW(adjoin_root(f, g, roots[1], 3), DegreeBoundExceeded);
}
