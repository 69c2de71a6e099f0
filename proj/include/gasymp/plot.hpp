#pragma once

#include <string>
#include <vector>

#include "gasymp/asymptote.hpp"

namespace gasymp {

struct PlotWindow {
  double x0 = -10, x1 = 10, y0 = -10, y1 = 10;
};

struct PlotOptions {
  PlotWindow window;
  int grid = 512;  // cells per side
  int size = 800;  // pixels per side
};

struct Segment {
  double ax, ay, bx, by;
};

// Zero contour of a real polynomial over the window by marching squares.
std::vector<Segment> contour(const std::vector<std::vector<double>>& coeffs, const PlotOptions& opt);

// Dense coefficient table c[i][j] of x^i y^j; empty if a coefficient is not real.
std::vector<std::vector<double>> real_coeffs(const QBiPoly& p);
std::vector<std::vector<double>> real_coeffs(const KBiPoly& p);

struct PlotLayer {
  std::string label;
  KBiPoly poly;
};

// SVG 1.1 with axes, the curve (class "curve") and one stroke class per asymptote.
// Output depends only on the inputs.
std::string render_svg(const QBiPoly& curve, const std::vector<PlotLayer>& asymptotes, const PlotOptions& opt,
                       std::vector<std::string>* warnings = nullptr);

}  // namespace gasymp
