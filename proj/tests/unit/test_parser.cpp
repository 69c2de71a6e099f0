#include <gtest/gtest.h>

#include <random>

#include "gasymp/poly_parser.hpp"

using namespace gasymp;

TEST(Parser, SimpleParabola) {
  QBiPoly p = parse_poly("y^2 - x");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coeff(0, 2), 1);
  EXPECT_EQ(p.coeff(1, 0), -1);
}

TEST(Parser, QuarticWithSevenTerms) {
  QBiPoly p = parse_poly("2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3");
  EXPECT_EQ(p.size(), 7u);
  EXPECT_EQ(p.total_degree(), 4);
  EXPECT_EQ(p.coeff(1, 3), 2);
  EXPECT_EQ(p.coeff(0, 0), 3);
}

TEST(Parser, RationalLiteralBindsTightest) {
  EXPECT_EQ(parse_poly("1/3*y"), parse_poly("(1/3)*y"));
  EXPECT_EQ(parse_poly("2/4^2"), QBiPoly(Rat(1, 4)));
  EXPECT_EQ(parse_poly("-(x - 1)^2"), parse_poly("-x^2 + 2*x - 1"));
}

TEST(Parser, Errors) {
  try {
    parse_poly("x*");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(e.offset(), 2u);
  }
  try {
    parse_poly("x + z");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::UnknownIdentifier);
    EXPECT_EQ(e.offset(), 4u);
  }
  auto kind_of = [](const std::string& s) {
    try {
      parse_poly(s);
    } catch (const ParseError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind_of("x/y"), static_cast<int>(ParseError::Kind::NonPolynomial));
  EXPECT_EQ(kind_of("x^(1/2)"), static_cast<int>(ParseError::Kind::NonPolynomial));
  EXPECT_EQ(kind_of("x^1/2"), static_cast<int>(ParseError::Kind::NonPolynomial));
  EXPECT_EQ(kind_of("x^-1"), static_cast<int>(ParseError::Kind::NonPolynomial));
  EXPECT_EQ(kind_of("2x"), static_cast<int>(ParseError::Kind::Syntax));
  EXPECT_EQ(kind_of("(x"), static_cast<int>(ParseError::Kind::Syntax));
  EXPECT_EQ(kind_of(""), static_cast<int>(ParseError::Kind::Syntax));
  EXPECT_EQ(kind_of("1/0"), static_cast<int>(ParseError::Kind::NonPolynomial));
}

TEST(Formatter, Examples) {
  EXPECT_EQ(format_poly(parse_poly("-2*x + y")), "y - 2*x");
  EXPECT_EQ(format_poly(QBiPoly()), "0");
  EXPECT_EQ(format_poly(parse_poly("-x^2 + y^3 + y^2 + 1/3*y + 1/27")), "y^3 + y^2 - x^2 + 1/3*y + 1/27");
  EXPECT_EQ(format_poly(parse_poly("x^2*y - 1/2"), Style::Latex), "x^{2} y - \\frac{1}{2}");
}

TEST(Formatter, RoundTripRandom) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-99, 99), den(1, 99), deg(0, 8), nterms(0, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    QBiPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
      int d = deg(rng);
      int i = std::uniform_int_distribution<int>(0, d)(rng);
      Rat c(num(rng), den(rng));
      c.canonicalize();
      p.add_term(i, d - i, c);
    }
    std::string s = format_poly(p);
    EXPECT_EQ(parse_poly(s), p) << s;
  }
}

TEST(Parser, ExpressionsFromTheExamples) {
  for (const char* s : {"2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3", "-y*x - y^2 - x^3 + 2*x^2*y + x^2 - 2*y",
                        "x^3 + 3*x^2*y + 3*x*y^2 + y^3 + 2*x^2 + y - 3", "y^3 - x", "y^3 - x^2 + y^2 - y + 1/27",
                        "y^3 - x^2 + y^2 + 1/3*y - 2*x + 1/27", "-y + x^2 - 2*x*y^2 + y^4", "x*y - 1", "y - x^2",
                        "−y + x^2"})
    EXPECT_NO_THROW(parse_poly(s)) << s;
}

TEST(Parser, Parametric) {
  auto [a, b] = parse_param("(t^4+t, t^2)");
  EXPECT_EQ(a.degree(), 4);
  EXPECT_EQ(b.degree(), 2);
  EXPECT_THROW(parse_param("(t^4+x, t^2)"), ParseError);
  EXPECT_THROW(parse_param("t, t"), ParseError);
}
