#pragma once

#include <vector>

#include "gasymp/unipoly.hpp"

namespace gasymp {

// Disc {z : |z - (re + i im)| <= rad} holding exactly one root of a known polynomial.
struct RootBox {
  Rat re, im, rad;
  Ball ball() const;
};

// Simultaneous approximation of all roots (Aberth) at the current precision.
// Coefficients ascending; the leading one must be nonzero.
std::vector<Complex> approximate_roots(const std::vector<Complex>& coeffs);

// Certified isolation of the roots of a squarefree rational polynomial.
// Every disc has radius below 2^-bits * max(1, |root|).
std::vector<RootBox> isolate_roots(const QPoly& p, long bits = 128);

// Shrinks an isolating disc of a root of p.
RootBox refine_root(const QPoly& p, const RootBox& box, long bits);

Ball eval_ball(const std::vector<Ball>& coeffs, const Ball& x);
std::vector<Ball> to_balls(const QPoly& p);

}  // namespace gasymp
