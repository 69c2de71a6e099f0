#include "gasymp/poly_parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace gasymp {

ParseError::ParseError(Kind k, std::size_t offset, const std::string& msg)
    : std::runtime_error(msg + " at offset " + std::to_string(offset)), kind_(k), offset_(offset) {}

namespace {

constexpr int kMaxExponent = 1000;

class Parser {
 public:
  Parser(const std::string& text, const std::array<std::string, 2>& vars) : s_(normalize(text)), vars_(vars) {}

  QBiPoly run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(ParseError::Kind::Syntax, pos_, "empty expression");
    QBiPoly p = expr();
    skip();
    if (pos_ < s_.size()) {
      if (s_[pos_] == '/') throw ParseError(ParseError::Kind::NonPolynomial, pos_, "division by a non-constant");
      if (s_[pos_] == ')') throw ParseError(ParseError::Kind::Syntax, pos_, "unbalanced ')'");
      throw ParseError(ParseError::Kind::Syntax, pos_, std::string("unexpected '") + s_[pos_] + "'");
    }
    return p;
  }

 private:
  // U+2212 minus sign is accepted as '-'; offsets refer to the normalized text.
  static std::string normalize(const std::string& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i + 2 < t.size() && static_cast<unsigned char>(t[i]) == 0xE2 && static_cast<unsigned char>(t[i + 1]) == 0x88 &&
          static_cast<unsigned char>(t[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += t[i];
      }
    }
    return out;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  QBiPoly expr() {
    QBiPoly acc;
    bool neg = false;
    if (peek('-') || peek('+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    QBiPoly t = term();
    acc = neg ? -t : t;
    while (peek('+') || peek('-')) {
      bool minus = s_[pos_] == '-';
      ++pos_;
      QBiPoly u = term();
      if (minus) acc -= u;
      else acc += u;
    }
    return acc;
  }

  QBiPoly term() {
    QBiPoly acc = factor();
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        throw ParseError(ParseError::Kind::NonPolynomial, pos_, "division by a non-constant");
      } else if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        throw ParseError(ParseError::Kind::Syntax, pos_, "implicit multiplication is not allowed");
      } else {
        return acc;
      }
    }
  }

  QBiPoly factor() {
    QBiPoly b = base();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t at = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '('))
        throw ParseError(ParseError::Kind::NonPolynomial, pos_, "exponent must be a nonnegative integer");
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError(ParseError::Kind::Syntax, at, "expected exponent");
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '/' || s_[pos_] == '.'))
        throw ParseError(ParseError::Kind::NonPolynomial, pos_, "fractional exponent");
      if (digits.size() > 4 || std::stoi(digits) > kMaxExponent)
        throw ParseError(ParseError::Kind::NonPolynomial, at, "exponent too large");
      return pow(b, std::stoi(digits));
    }
    return b;
  }

  QBiPoly base() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(ParseError::Kind::Syntax, pos_, "unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return QBiPoly(rational());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string id;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) id += s_[pos_++];
      if (id == vars_[0]) return QBiPoly::x();
      if (id == vars_[1]) return QBiPoly::y();
      throw ParseError(ParseError::Kind::UnknownIdentifier, at, "unknown identifier '" + id + "'");
    }
    if (c == '(') {
      ++pos_;
      QBiPoly inner = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError(ParseError::Kind::Syntax, pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    throw ParseError(ParseError::Kind::Syntax, pos_, std::string("unexpected '") + c + "'");
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  Rat rational() {
    std::size_t at = pos_;
    std::string num = read_digits();
    if (pos_ < s_.size() && s_[pos_] == '.') throw ParseError(ParseError::Kind::Syntax, pos_, "decimal literals are not supported");
    if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      std::string den = read_digits();
      Int d(den);
      if (sgn(d) == 0) throw ParseError(ParseError::Kind::NonPolynomial, at, "zero denominator");
      Rat q(Int(num), d);
      q.canonicalize();
      return q;
    }
    return Rat(Int(num));
  }

  std::string s_;
  std::array<std::string, 2> vars_;
  std::size_t pos_ = 0;
};

// ---- formatting ----

struct CoeffText {
  bool negative = false;
  bool one = false;
  std::string text;  // magnitude, parenthesized when compound
};

CoeffText coeff_text(const Rat& c, Style style) {
  CoeffText t;
  t.negative = sgn(c) < 0;
  Rat a = abs(c);
  t.one = (a == 1);
  if (style == Style::Latex && a.get_den() != 1)
    t.text = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  else
    t.text = rat_str(a);
  return t;
}

CoeffText coeff_text(const Num& c, Style style) {
  if (c.is_rational()) return coeff_text(c.rational(), style);
  CoeffText t;
  std::string s = style == Style::Latex ? c.latex() : c.str();
  bool compound = s.find(' ') != std::string::npos;
  if (!compound && !s.empty() && s[0] == '-') {
    t.negative = true;
    s = s.substr(1);
  }
  t.text = compound ? "(" + s + ")" : s;
  return t;
}

std::string monomial(int i, int j, Style style, const std::array<std::string, 2>& v) {
  std::string out;
  auto part = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += style == Style::Latex ? " " : "*";
    out += name;
    if (e > 1) out += style == Style::Latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  };
  part(v[0], i);
  part(v[1], j);
  return out;
}

template <class K>
std::string format_impl(const BiPoly<K>& p, Style style, const std::array<std::string, 2>& vars) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::pair<int, int>, K>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.second > b.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    CoeffText ct = coeff_text(c, style);
    std::string mono = monomial(e.first, e.second, style, vars);
    if (first) {
      if (ct.negative) os << "-";
    } else {
      os << (ct.negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << ct.text;
    } else if (ct.one) {
      os << mono;
    } else {
      os << ct.text << (style == Style::Latex ? " " : "*") << mono;
    }
  }
  return os.str();
}

template <class K>
std::string format_u_impl(const UniPoly<K>& p, const std::string& var, Style style) {
  BiPoly<K> b;
  for (int i = 0; i <= p.degree(); ++i) b.add_term(i, 0, p.coeffs()[i]);
  return format_impl(b, style, {var, "_"});
}

}  // namespace

QBiPoly parse_poly(const PolySource& src) { return Parser(src.text, src.vars).run(); }

QBiPoly parse_poly(const std::string& text) { return parse_poly(PolySource{text, {"x", "y"}}); }

std::pair<QPoly, QPoly> parse_param(const std::string& text, const std::string& var) {
  // split "(a, b)" at the top-level comma
  std::size_t open = text.find_first_not_of(" \t");
  std::size_t close = text.find_last_not_of(" \t\n");
  if (open == std::string::npos || text[open] != '(' || text[close] != ')')
    throw ParseError(ParseError::Kind::Syntax, open == std::string::npos ? 0 : open, "expected '(p(t), q(t))'");
  int depth = 0;
  std::size_t comma = std::string::npos;
  for (std::size_t i = open + 1; i < close; ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == ',' && depth == 0) {
      if (comma != std::string::npos) throw ParseError(ParseError::Kind::Syntax, i, "too many components");
      comma = i;
    }
  }
  if (comma == std::string::npos) throw ParseError(ParseError::Kind::Syntax, close, "expected ','");
  auto component = [&](std::size_t from, std::size_t to) {
    std::string part = text.substr(from, to - from);
    QBiPoly b;
    try {
      b = Parser(part, {var, "\x01"}).run();
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), e.offset() + from, std::string(e.what()).substr(0, std::string(e.what()).rfind(" at offset")));
    }
    std::vector<Rat> c(std::max(0, b.deg_x() + 1), Rat(0));
    for (const auto& [e, v] : b.terms()) c[e.first] = v;
    return QPoly(c);
  };
  return {component(open + 1, comma), component(comma + 1, close)};
}

std::string format_poly(const QBiPoly& p, Style style, const std::array<std::string, 2>& vars) {
  return format_impl(p, style, vars);
}

std::string format_poly(const BiPoly<Num>& p, Style style, const std::array<std::string, 2>& vars) {
  return format_impl(p, style, vars);
}

std::string format_upoly(const QPoly& p, const std::string& var, Style style) { return format_u_impl(p, var, style); }

std::string format_upoly(const KPoly& p, const std::string& var, Style style) { return format_u_impl(p, var, style); }

}  // namespace gasymp
