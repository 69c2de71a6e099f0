#pragma once

#include <vector>

#include "gasymp/bipoly.hpp"

namespace gasymp {

struct QFactor {
  QPoly poly;  // monic, irreducible over Q
  int mult;
};

// Complete factorization over Q, factors sorted by (degree, coefficients).
std::vector<QFactor> factor_rational(const QPoly& u);

// Irreducible monic factors of a squarefree polynomial (Zassenhaus).
std::vector<QPoly> factor_squarefree_rational(const QPoly& u);

bool is_irreducible_rational(const QPoly& u);

// Primitive integer representative: integer coefficients, content 1, positive lc.
QPoly primitive_integer(const QPoly& u);

// Bivariate helpers over Q.
QBiPoly bivariate_gcd(const QBiPoly& a, const QBiPoly& b);
QBiPoly bivariate_squarefree_part(const QBiPoly& f);
// Irreducible factors of a squarefree f, each integer-primitive.
std::vector<QBiPoly> factor_bivariate(const QBiPoly& f);

}  // namespace gasymp
