#include "gasymp/plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "gasymp/poly_parser.hpp"

namespace gasymp {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

double eval(const std::vector<std::vector<double>>& c, double x, double y) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    double row = 0;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * y + *jt;
    acc = acc * x + row;
  }
  return acc;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '<') out += "&lt;";
    else if (ch == '>') out += "&gt;";
    else if (ch == '&') out += "&amp;";
    else out += ch;
  }
  return out;
}

template <class P, class F>
std::vector<std::vector<double>> table(const P& p, F to_double) {
  const int dx = std::max(0, p.deg_x()), dy = std::max(0, p.deg_y());
  std::vector<std::vector<double>> c(dx + 1, std::vector<double>(dy + 1, 0.0));
  for (const auto& [e, v] : p.terms()) {
    double d;
    if (!to_double(v, d)) return {};
    c[e.first][e.second] = d;
  }
  return c;
}

}  // namespace

std::vector<std::vector<double>> real_coeffs(const QBiPoly& p) {
  return table(p, [](const Rat& q, double& d) {
    d = q.get_d();
    return true;
  });
}

std::vector<std::vector<double>> real_coeffs(const KBiPoly& p) {
  PrecisionGuard g(64);
  return table(p, [](const Num& v, double& d) {
    Complex z = v.approx();
    double re = z.re.convert_to<double>(), im = z.im.convert_to<double>();
    if (std::abs(im) > 1e-12 * std::max(1.0, std::abs(re))) return false;
    d = re;
    return true;
  });
}

std::vector<Segment> contour(const std::vector<std::vector<double>>& coeffs, const PlotOptions& opt) {
  const int n = opt.grid;
  const auto& w = opt.window;
  const double hx = (w.x1 - w.x0) / n, hy = (w.y1 - w.y0) / n;
  std::vector<double> v((n + 1) * (n + 1));
  auto at = [&](int i, int j) -> double& { return v[j * (n + 1) + i]; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) at(i, j) = eval(coeffs, w.x0 + i * hx, w.y0 + j * hy);

  std::vector<Segment> out;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      // corners counterclockwise from the lower left
      const double c[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      const double px[4] = {w.x0 + i * hx, w.x0 + (i + 1) * hx, w.x0 + (i + 1) * hx, w.x0 + i * hx};
      const double py[4] = {w.y0 + j * hy, w.y0 + j * hy, w.y0 + (j + 1) * hy, w.y0 + (j + 1) * hy};
      int mask = 0;
      for (int k = 0; k < 4; ++k) mask |= (c[k] > 0 ? 1 : 0) << k;
      if (mask == 0 || mask == 15) continue;
      // crossing point on edge k (corner k to corner k+1)
      auto cross = [&](int k, double& x, double& y) {
        const int l = (k + 1) % 4;
        const double t = c[k] / (c[k] - c[l]);
        x = px[k] + t * (px[l] - px[k]);
        y = py[k] + t * (py[l] - py[k]);
      };
      std::vector<int> edges;
      for (int k = 0; k < 4; ++k)
        if ((c[k] > 0) != (c[(k + 1) % 4] > 0)) edges.push_back(k);
      if (edges.size() == 4) {
        // saddle: the center value decides which corners connect
        const double center = eval(coeffs, px[0] + hx / 2, py[0] + hy / 2);
        const bool joined = (center > 0) == (c[0] > 0);
        if (joined) edges = {0, 1, 2, 3};
        else edges = {3, 0, 1, 2};
      }
      for (std::size_t e = 0; e + 1 < edges.size(); e += 2) {
        Segment s;
        cross(edges[e], s.ax, s.ay);
        cross(edges[e + 1], s.bx, s.by);
        out.push_back(s);
      }
    }
  return out;
}

std::string render_svg(const QBiPoly& curve, const std::vector<PlotLayer>& asymptotes, const PlotOptions& opt,
                       std::vector<std::string>* warnings) {
  const auto& w = opt.window;
  const double S = opt.size;
  auto sx = [&](double x) { return (x - w.x0) / (w.x1 - w.x0) * S; };
  auto sy = [&](double y) { return S - (y - w.y0) / (w.y1 - w.y0) * S; };
  auto path = [&](const std::vector<Segment>& segs) {
    std::string d;
    for (const auto& s : segs) {
      d += "M" + fmt(sx(s.ax)) + " " + fmt(sy(s.ay)) + "L" + fmt(sx(s.bx)) + " " + fmt(sy(s.by));
    }
    return d;
  };

  std::vector<std::string> notes;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size << "\" height=\"" << opt.size
     << "\" viewBox=\"0 0 " << opt.size << " " << opt.size << "\">\n";
  os << "<style>.axis{stroke:#999;stroke-width:1}.curve{stroke:#000;stroke-width:2;fill:none}"
        ".asymptote{stroke-width:1.5;fill:none;stroke-dasharray:6 4}</style>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  if (w.x0 < 0 && w.x1 > 0)
    os << "<line class=\"axis\" x1=\"" << fmt(sx(0)) << "\" y1=\"0\" x2=\"" << fmt(sx(0)) << "\" y2=\"" << fmt(S) << "\"/>\n";
  if (w.y0 < 0 && w.y1 > 0)
    os << "<line class=\"axis\" x1=\"0\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(S) << "\" y2=\"" << fmt(sy(0)) << "\"/>\n";

  auto segs = contour(real_coeffs(curve), opt);
  if (segs.empty()) {
    notes.push_back("curve has no real points in the window");
  } else {
    os << "<path class=\"curve\" d=\"" << path(segs) << "\"><title>" << escape(format_poly(curve)) << "</title></path>\n";
  }
  for (std::size_t k = 0; k < asymptotes.size(); ++k) {
    const auto c = real_coeffs(asymptotes[k].poly);
    if (c.empty()) {
      notes.push_back(asymptotes[k].label + " has non-real coefficients");
      continue;
    }
    auto as = contour(c, opt);
    if (as.empty()) continue;
    os << "<path class=\"asymptote asymptote-" << k << "\" stroke=\"" << kPalette[k % 6] << "\" d=\"" << path(as)
       << "\"><title>" << escape(asymptotes[k].label) << "</title></path>\n";
  }
  for (std::size_t k = 0; k < notes.size(); ++k)
    os << "<text class=\"warning\" x=\"10\" y=\"" << 20 + 16 * k << "\" font-size=\"14\" fill=\"#c00\">warning: "
       << escape(notes[k]) << "</text>\n";
  os << "</svg>\n";
  if (warnings) *warnings = notes;
  return os.str();
}

}  // namespace gasymp
