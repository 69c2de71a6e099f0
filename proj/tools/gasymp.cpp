// gasymp: infinity branches, g-asymptotes and proximity classes of plane curves.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gasymp/plot.hpp"
#include "gasymp/poly_parser.hpp"
#include "gasymp/report.hpp"

using namespace gasymp;

namespace {

enum Exit { kOk = 0, kParse = 2, kEngine = 3, kVerify = 4 };

std::vector<double> split_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct Common {
  std::string poly;
  std::string param;
  bool json = false;
  std::string svg;
  std::string window = "-10,10,-10,10";
  int grid = 512;
  std::string radii = "1e2,1e3,1e4,1e5";
  long precision = 128;
  int max_ext_degree = 16;
  int guard_terms = 2;
  bool norm_down = false;
  std::string decay_rule = "tail";
  double decay_tol = -1;
  unsigned seed = 1;

  void add_input(CLI::App* c) {
    c->add_option("polynomial", poly, "implicit polynomial in x, y");
    c->add_option("--param", param, "parametric input \"(px(t), py(t))\", implicitized first");
  }
  void add_engine(CLI::App* c) {
    c->add_option("--max-ext-degree", max_ext_degree, "largest algebraic extension degree before numeric fallback");
    c->add_option("--guard-terms", guard_terms, "nonzero series terms beyond the needed order");
    c->add_flag("--norm-down", norm_down, "also report rational norms of algebraic asymptotes");
  }
  void add_plot(CLI::App* c) {
    c->add_option("--window", window, "plot window x0,x1,y0,y1");
    c->add_option("--grid", grid, "marching-squares cells per side")->check(CLI::Range(2, 8192));
  }

  QBiPoly input() const {
    if (!param.empty()) {
      auto [px, py] = parse_param(param);
      return implicitize(px, py);
    }
    if (poly.empty()) throw ParseError(ParseError::Kind::Syntax, 0, "no polynomial given");
    return parse_poly(poly);
  }
  std::string input_text() const { return param.empty() ? poly : param; }

  AnalyzeOptions options() const {
    AnalyzeOptions o;
    o.policy.max_ext_degree = max_ext_degree;
    o.policy.guard_terms = guard_terms;
    o.plan.radii = split_doubles(radii);
    o.plan.precision = precision;
    o.plan.seed = seed;
    o.norm_down = norm_down;
    if (decay_rule == "tail") o.decay.mode = DecayTolerance::Mode::TailModel;
    else if (decay_rule == "relative") o.decay = {DecayTolerance::Mode::Relative, 1e-6};
    else if (decay_rule == "absolute") o.decay = {DecayTolerance::Mode::Absolute, 1e-6};
    else throw std::invalid_argument("unknown decay rule '" + decay_rule + "'");
    if (decay_tol > 0) o.decay.value = decay_tol;
    return o;
  }
  PlotOptions plot_options() const {
    auto w = split_doubles(window);
    if (w.size() != 4 || !(w[0] < w[1]) || !(w[2] < w[3])) throw std::invalid_argument("window must be x0,x1,y0,y1");
    PlotOptions p;
    p.window = {w[0], w[1], w[2], w[3]};
    p.grid = grid;
    return p;
  }
};

std::vector<PlotLayer> layers(const Analysis& a) {
  std::vector<PlotLayer> out;
  for (const auto& p : a.points)
    for (const auto& b : p.branches) out.push_back({format_poly(b.original.implicit), b.original.implicit});
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

int run_analyze(const Common& c, bool verify, bool report = true) {
  QBiPoly f;
  try {
    f = c.input();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  }
  Analysis a;
  a.input = c.input_text();
  try {
    AnalyzeOptions opt = c.options();
    opt.verify = verify;
    analyze(f, opt, a);
  } catch (const std::exception& e) {
    std::cerr << "engine error (" << a.stage << "): " << e.what() << "\n";
    std::cerr << to_json(a).dump(2) << "\n";
    return kEngine;
  }
  if (report) {
    if (c.json) std::cout << to_json(a).dump(2) << "\n";
    else std::cout << format_text(a);
  }
  if (!c.svg.empty()) {
    std::vector<std::string> warn;
    write_file(c.svg, render_svg(a.curve.f0, layers(a), c.plot_options(), &warn));
    for (const auto& w : warn) std::cerr << "warning: " << w << "\n";
  }
  return a.all_checks_pass() ? kOk : kVerify;
}

int run_plot(const Common& c) {
  if (c.svg.empty()) {
    std::cerr << "plot needs --svg PATH\n";
    return kParse;
  }
  return run_analyze(c, false, false);
}

int run_class(const Common& c, int sample) {
  QBiPoly f;
  try {
    f = c.input();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  }
  Analysis a;
  a.input = c.input_text();
  Json out;
  try {
    AnalyzeOptions opt = c.options();
    opt.verify = false;
    analyze(f, opt, a);
    std::mt19937 rng(c.seed);
    out["input"] = a.input;
    out["regular_perfect"] = a.regular_perfect;
    out["curve_class"] = a.proximity ? to_json(*a.proximity) : Json(nullptr);
    Json branches = Json::array();
    for (const auto& p : a.points)
      for (const auto& b : p.branches) {
        Json bj;
        bj["m"] = p.point.m.str();
        bj["asymptote"] = format_poly(b.original.implicit);
        if (b.family) {
          bj["family"] = to_json(*b.family);
          if (sample > 0) {
            Json ms = Json::array();
            for (const auto& g : sample_members(*b.family, sample, rng)) ms.push_back(format_poly(g));
            bj["samples"] = ms;
          }
        } else {
          bj["family"] = nullptr;
          bj["unavailable"] = b.family_note;
        }
        branches.push_back(bj);
      }
    out["branches"] = branches;
  } catch (const std::exception& e) {
    std::cerr << "engine error (" << a.stage << "): " << e.what() << "\n";
    return kEngine;
  }
  if (c.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& b : out["branches"]) {
      std::cout << "branch at m = " << b["m"].get<std::string>() << ": asymptote " << b["asymptote"].get<std::string>()
                << "\n";
      if (b["family"].is_null()) {
        std::cout << "  family unavailable (" << b["unavailable"].get<std::string>() << ")\n";
        continue;
      }
      std::cout << "  family " << b["family"]["family"].get<std::string>() << ", dimension "
                << b["family"]["dimension"].get<int>() << "\n";
      if (b.contains("samples"))
        for (const auto& s : b["samples"]) std::cout << "  member " << s.get<std::string>() << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinity branches, g-asymptotes and proximity classes of plane algebraic curves"};
  app.require_subcommand(1);
  Common c;
  int sample = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline with verification");
  c.add_input(analyze_cmd);
  c.add_engine(analyze_cmd);
  c.add_plot(analyze_cmd);
  analyze_cmd->add_flag("--json", c.json, "JSON report on stdout");
  analyze_cmd->add_option("--svg", c.svg, "also write a plot");
  analyze_cmd->add_option("--radii", c.radii, "sampling radii r1,r2,... (increasing)");
  analyze_cmd->add_option("--precision", c.precision, "sampling precision in bits")->check(CLI::Range(32L, 65536L));
  analyze_cmd->add_option("--decay-rule", c.decay_rule, "tail | relative | absolute");
  analyze_cmd->add_option("--decay-tol", c.decay_tol, "tolerance constant of the decay rule");
  analyze_cmd->add_option("--seed", c.seed, "seed of the random sampling rays");

  auto* plot_cmd = app.add_subcommand("plot", "SVG of the curve and its asymptotes");
  c.add_input(plot_cmd);
  c.add_engine(plot_cmd);
  c.add_plot(plot_cmd);
  plot_cmd->add_option("--svg,-o", c.svg, "output path")->required();

  auto* class_cmd = app.add_subcommand("class", "asymptote families per branch");
  c.add_input(class_cmd);
  c.add_engine(class_cmd);
  class_cmd->add_flag("--json", c.json, "JSON on stdout");
  class_cmd->add_option("--sample", sample, "emit K random class members")->check(CLI::NonNegativeNumber);
  class_cmd->add_option("--seed", c.seed, "seed for --sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*analyze_cmd) return run_analyze(c, true);
    if (*plot_cmd) return run_plot(c);
    return run_class(c, sample);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEngine;
  }
}
