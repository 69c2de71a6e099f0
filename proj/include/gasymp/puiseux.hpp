#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gasymp/bipoly.hpp"
#include "gasymp/field.hpp"

namespace gasymp {

struct SeriesTerm {
  Rat exp;
  Num coeff;
};

// phi(z) = sum coeff * z^exp, exponents increasing. Every term with exponent
// below `trunc` is present (trunc empty: the series is an exact finite solution).
struct PuiseuxSeries {
  std::vector<SeriesTerm> terms;
  int N = 1;
  std::optional<Rat> trunc;
  FieldPtr field;
  bool numeric = false;

  Num constant() const;
  std::string str(const std::string& var = "z") const;
};

struct PuiseuxClass {
  PuiseuxSeries rep;
  int class_size = 1;
};

struct TruncationPolicy {
  enum class Guarantee { UntilRegular, FixedOrder };
  Guarantee guarantee = Guarantee::UntilRegular;
  Rat fixed_order = 0;       // used with FixedOrder
  Rat cover_exponent = 1;    // UntilRegular: all exponents <= this are present
  int guard_terms = 2;       // and this many nonzero terms beyond it
  int max_polygon_steps = 64;
  int max_ext_degree = 16;
  long precision = 256;
};

struct IncompleteExpansion : std::runtime_error {
  IncompleteExpansion(const std::string& what, std::vector<PuiseuxClass> partial)
      : std::runtime_error(what), partial(std::move(partial)) {}
  std::vector<PuiseuxClass> partial;
};

// g(y, z) stored as QBiPoly with first exponent = power of y, second = power of z.
using YZPoly = QBiPoly;

// All Puiseux solutions of g(y, z) = 0 at z = 0 with finite y(0).
std::vector<PuiseuxClass> puiseux_solutions(const YZPoly& g, const TruncationPolicy& policy = {});

// Solutions with y(0) = m, where m is a root of g(y, 0) of the given multiplicity.
std::vector<PuiseuxClass> puiseux_at(const YZPoly& g, const Num& m, const TruncationPolicy& policy = {});

// j-th conjugate (1 <= j <= N): coefficient of z^(k/N) multiplied by exp(2 pi i j k / N).
// Coefficients are numeric unless zeta is supplied as an exact element.
PuiseuxSeries conjugate_series(const PuiseuxClass& c, int j);
PuiseuxSeries conjugate_series_exact(const PuiseuxClass& c, int j, const Num& zeta_n);

// z-adic valuation of g(s(z), z); empty means the residual vanishes identically.
std::optional<Rat> residual_valuation(const YZPoly& g, const PuiseuxSeries& s);

// Roots of g(y, 0), i.e. the candidate constant terms, with multiplicities.
struct RootWithMult {
  Num value;
  int mult;
};
std::vector<RootWithMult> constant_terms(const YZPoly& g, int max_ext_degree, bool* numeric = nullptr);

// Ordering used wherever a representative root must be chosen:
// real roots first (largest first), then larger real part, then positive imaginary part.
bool root_order_less(const Complex& a, const Complex& b);

}  // namespace gasymp
