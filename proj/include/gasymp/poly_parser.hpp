#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "gasymp/bipoly.hpp"
#include "gasymp/field.hpp"

namespace gasymp {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownIdentifier, NonPolynomial };
  ParseError(Kind k, std::size_t offset, const std::string& msg);
  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

struct PolySource {
  std::string text;
  std::array<std::string, 2> vars{"x", "y"};
};

QBiPoly parse_poly(const PolySource& src);
QBiPoly parse_poly(const std::string& text);

// "(p(t), q(t))" -> pair of univariate polynomials in t.
std::pair<QPoly, QPoly> parse_param(const std::string& text, const std::string& var = "t");

enum class Style { Plain, Latex };

std::string format_poly(const QBiPoly& p, Style style = Style::Plain,
                        const std::array<std::string, 2>& vars = {"x", "y"});
std::string format_poly(const BiPoly<Num>& p, Style style = Style::Plain,
                        const std::array<std::string, 2>& vars = {"x", "y"});
std::string format_upoly(const QPoly& p, const std::string& var = "t", Style style = Style::Plain);
std::string format_upoly(const KPoly& p, const std::string& var = "t", Style style = Style::Plain);

}  // namespace gasymp
