#include "gasymp/report.hpp"

#include <cstdio>
#include <sstream>

#include "gasymp/poly_parser.hpp"

namespace gasymp {

namespace {

std::string term_str(const RTerm& t) {
  std::string c = t.coeff.str();
  if (c.find_first_of(" +") != std::string::npos) c = "(" + c + ")";
  if (t.exp == 0) return c;
  std::string z = t.exp == 1 ? "z" : "z^(" + rat_str(t.exp) + ")";
  if (c == "1") return z;
  if (c == "-1") return "-" + z;
  return c + "*" + z;
}

// The point (1 : m : 0) of the prepared frame, written in the input frame.
std::string input_frame_point(const Num& m, const Rat& lambda) {
  const Num x0 = Num(1) + Num(lambda) * m;
  if (x0.is_zero()) return "(0 : 1 : 0)";
  return "(1 : " + (m / x0).str() + " : 0)";
}

// Nonnegative-exponent terms plus the first `guard` negative ones.
std::vector<RTerm> rendered_terms(const InfinityBranch& B, int guard) {
  std::vector<RTerm> out;
  int neg = 0;
  for (const auto& t : B.r_terms) {
    if (sgn(t.exp) < 0 && neg++ >= guard) break;
    out.push_back(t);
  }
  return out;
}

std::string series_text(const InfinityBranch& B, int guard) {
  const auto shown = rendered_terms(B, guard);
  std::string s;
  for (const auto& t : shown) {
    std::string ts = term_str(t);
    if (s.empty()) s = ts;
    else if (ts[0] == '-') s += " - " + ts.substr(1);
    else s += " + " + ts;
  }
  if (s.empty()) s = "0";
  if (shown.size() < B.r_terms.size()) s += " + ...";
  else if (B.exact_above) s += " + O(z^(" + rat_str(*B.exact_above) + "))";
  return s;
}

Json opt_bool(const std::optional<bool>& b) {
  if (!b) return "inconclusive";
  return *b;
}

Json field_json(const FieldPtr& f) {
  if (!f) return nullptr;
  PrecisionGuard g(64);
  Json j;
  j["minpoly"] = format_upoly(f->minpoly(), "θ");
  j["theta"] = complex_str(f->theta().mid(), 15);
  return j;
}

Json asymptote_json(const Asymptote& a, bool with_norm) {
  Json j;
  j["degree"] = a.n;
  j["param"] = {{"x", format_upoly(a.px, "t")}, {"y", format_upoly(a.py, "t")}};
  j["implicit"] = format_poly(a.implicit);
  if (auto q = a.rational_implicit()) {
    j["implicit_primitive"] = format_poly(integer_primitive(*q));
  } else if (with_norm) {
    auto nd = norm_down(a.implicit);
    j["norm_down"] = nd ? Json(format_poly(*nd)) : Json(nullptr);
  }
  j["vertical"] = a.vertical;
  if (a.numeric) j["numeric"] = true;
  return j;
}

Json decay_json(const DecayReport& r) {
  Json j;
  j["rule"] = r.rule;
  j["radii"] = r.samples.radii;
  j["precision"] = r.samples.bits;
  j["radius_escalations"] = r.samples.radius_escalations;
  j["precision_escalations"] = r.samples.precision_escalations;
  Json series = Json::array();
  for (const auto& s : r.series) {
    Json e;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", s.ray);
    e["ray"] = buf;
    e["leaf"] = s.leaf;
    Json d = Json::array();
    for (const auto& v : s.distances) d.push_back(format_sci(v));
    e["distances"] = d;
    e["tolerance"] = format_sci(s.tolerance);
    e["non_increasing"] = s.non_increasing;
    e["pass"] = s.pass;
    series.push_back(e);
  }
  j["series"] = series;
  j["pass"] = r.pass;
  return j;
}

std::optional<bool> residual_ok(const PreparedCurve& c, const InfinityBranch& B) {
  const PuiseuxSeries& s = B.cls.rep;
  if (s.numeric) return std::nullopt;
  auto v = residual_valuation(c.g(), s);
  if (!s.trunc) return !v.has_value();
  return !v || *v >= *s.trunc;
}

void run_checks(const Analysis& an, const AnalyzeOptions& opt, BranchAnalysis& ba) {
  const PreparedCurve& c = an.curve;
  const InfinityBranch& B = ba.branch;
  auto add = [&](const std::string& name, std::optional<bool> ok, std::string detail = {}) {
    ba.checks.push_back({name, ok, std::move(detail)});
  };
  add("divisibility", divisibility_check(c.f, B));
  if (B.N > 1) add("leaf_independence", leaf_independence_check(B));
  add("residual", residual_ok(c, B));
  add("param_on_implicit", param_on_implicit(ba.prepared) && param_on_implicit(ba.original));
  add("leading_form", leading_form_ok(ba.prepared) && leading_form_ok(ba.original));
  add("degree_bound", ba.prepared.n <= c.d && ba.original.implicit.total_degree() <= c.d &&
                          ba.prepared.implicit.total_degree() <= c.d);
  if (opt.verify) {
    ba.decay = approach_decay_check(c.f, B, ba.prepared, opt.plan, opt.decay);
    add("approach_decay", ba.decay->pass, ba.decay->rule);
  }
}

}  // namespace

std::string format_sci(const Real& v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v.convert_to<double>());
  return buf;
}

bool Analysis::numeric() const {
  for (const auto& p : points) {
    if (p.point.numeric) return true;
    for (const auto& b : p.branches)
      if (b.branch.numeric) return true;
  }
  return false;
}

std::vector<std::string> Analysis::failed_checks() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points[i].branches.size(); ++j)
      for (const auto& ch : points[i].branches[j].checks)
        if (ch.ok && !*ch.ok) out.push_back("point " + std::to_string(i) + " branch " + std::to_string(j) + ": " + ch.name);
  return out;
}

bool Analysis::all_checks_pass() const { return failed_checks().empty(); }

void analyze(const QBiPoly& f, const AnalyzeOptions& opt, Analysis& out) {
  out.f = f;
  out.norm_down = opt.norm_down;
  out.guard_terms = opt.policy.guard_terms;
  if (out.input.empty()) out.input = format_poly(f);
  out.stage = "prepare";
  out.curve = prepare_curve(f);
  const PreparedCurve& c = out.curve;

  TruncationPolicy policy = opt.policy;
  // the reversion to the input frame needs the branch one order further
  if (sgn(c.lambda) != 0) policy.cover_exponent = std::max(policy.cover_exponent, Rat(2));

  out.stage = "infinity_points";
  std::vector<InfinityBranch> all;
  for (const auto& P : infinity_points(c, policy.max_ext_degree)) {
    out.points.push_back({P, {}});
    out.stage = "branches";
    for (auto& B : infinity_branches(c, P, policy)) {
      BranchAnalysis ba;
      ba.branch = B;
      out.stage = "asymptotes";
      ba.prepared = build_asymptote(B);
      ba.original = original_frame_asymptote(B, c.lambda);
      try {
        ba.family = asymptote_family(c, B);
      } catch (const UnsupportedClass& e) {
        ba.family_note = e.what();
      }
      out.points.back().branches.push_back(std::move(ba));
      all.push_back(std::move(B));
    }
  }

  out.stage = "classification";
  out.verdict = is_perfect(c, all);
  out.regular_perfect = is_regular_perfect(c.f0);
  if (out.regular_perfect) out.proximity = proximity_class(c.f0);

  out.stage = "verification";
  for (auto& p : out.points)
    for (auto& ba : p.branches) run_checks(out, opt, ba);
  out.stage = "done";
}

Json to_json(const ProximityClassDescriptor& d) {
  Json j;
  j["degree"] = d.d;
  j["form_d"] = format_poly(d.form_d);
  j["form_d1"] = format_poly(d.form_d1);
  Json mons = Json::array();
  auto names = d.parameter_names();
  for (std::size_t i = 0; i < d.irrelevant.size(); ++i) {
    auto [a, b] = d.irrelevant[i];
    KBiPoly m = KBiPoly::monomial(Num(1), a, b);
    mons.push_back({{"name", names[i]}, {"monomial", format_poly(m)}});
  }
  j["irrelevant_monomials"] = mons;
  j["dimension"] = d.dimension;
  j["family"] = d.family_str();
  return j;
}

Json to_json(const Analysis& a) {
  Json j;
  j["input"] = a.input;
  j["polynomial"] = format_poly(a.f);
  j["mode"] = a.numeric() ? "numeric-downgraded" : "exact";
  if (a.stage != "done") j["stage"] = a.stage;
  if (a.curve.d > 0) {
    Json prep;
    prep["lambda"] = rat_str(a.curve.lambda);
    prep["squarefree"] = format_poly(a.curve.f0);
    prep["prepared"] = format_poly(a.curve.f);
    prep["degree"] = a.curve.d;
    Json comps = Json::array();
    for (const auto& q : a.curve.components) comps.push_back(format_poly(q));
    prep["components"] = comps;
    j["preparation"] = prep;
  }
  Json pts = Json::array();
  for (const auto& p : a.points) {
    Json pj;
    pj["m"] = p.point.m.str();
    if (sgn(a.curve.lambda) != 0) pj["input_frame"] = input_frame_point(p.point.m, a.curve.lambda);
    pj["multiplicity"] = p.point.multiplicity;
    if (!p.point.m.is_rational()) {
      PrecisionGuard g(64);
      pj["m_approx"] = complex_str(p.point.m.approx(), 15);
    }
    pj["field"] = field_json(p.point.m.field());
    if (p.point.numeric) pj["numeric"] = true;
    Json bs = Json::array();
    for (const auto& ba : p.branches) {
      const InfinityBranch& B = ba.branch;
      Json bj;
      bj["N"] = B.N;
      bj["n"] = B.n;
      bj["b"] = B.b;
      bj["k"] = B.k;
      bj["reduced"] = B.reduced;
      Json terms = Json::array();
      for (const auto& t : rendered_terms(B, a.guard_terms)) terms.push_back(term_str(t));
      Json sj;
      sj["terms"] = terms;
      sj["computed_terms"] = B.r_terms.size();
      sj["order"] = B.exact_above ? Json("O(z^(" + rat_str(*B.exact_above) + "))") : Json(nullptr);
      sj["text"] = series_text(B, a.guard_terms);
      sj["field"] = field_json(B.field);
      bj["series"] = sj;
      bj["asymptote"] = asymptote_json(ba.original, a.norm_down);
      if (sgn(a.curve.lambda) != 0) bj["prepared_frame"] = asymptote_json(ba.prepared, a.norm_down);
      if (ba.family) bj["family"] = to_json(*ba.family);
      else bj["family"] = {{"unavailable", ba.family_note}};
      Json checks;
      for (const auto& ch : ba.checks) checks[ch.name] = opt_bool(ch.ok);
      bj["checks"] = checks;
      if (ba.decay) bj["decay"] = decay_json(*ba.decay);
      bs.push_back(bj);
    }
    pj["branches"] = bs;
    pts.push_back(pj);
  }
  j["infinity_points"] = pts;
  if (a.verdict) {
    Json v;
    v["perfect"] = a.verdict->perfect;
    v["reason"] = reason_str(a.verdict->reason);
    v["branch_count"] = a.verdict->branch_count;
    v["branch_degree"] = a.verdict->branch_degree;
    v["curve_degree"] = a.verdict->curve_degree;
    v["regular_perfect"] = a.regular_perfect;
    j["perfection"] = v;
  }
  j["proximity"] = a.proximity ? to_json(*a.proximity) : Json(nullptr);
  Json ver;
  auto failed = a.failed_checks();
  ver["pass"] = failed.empty() && a.stage == "done";
  ver["failed"] = failed;
  j["verification"] = ver;
  return j;
}

std::string format_text(const Analysis& a) {
  std::ostringstream os;
  os << "curve: " << format_poly(a.f) << "\n";
  os << "degree " << a.curve.d << ", shear lambda = " << rat_str(a.curve.lambda)
     << (a.numeric() ? ", numeric-downgraded" : ", exact") << "\n";
  for (const auto& p : a.points) {
    os << "infinity point (1 : " << p.point.m.str() << " : 0)";
    if (!p.point.m.is_rational()) {
      PrecisionGuard g(64);
      os << ", m ~ " << complex_str(p.point.m.approx(), 10);
    }
    if (sgn(a.curve.lambda) != 0) os << ", input frame " << input_frame_point(p.point.m, a.curve.lambda);
    os << ", multiplicity " << p.point.multiplicity << "\n";
    for (const auto& ba : p.branches) {
      const InfinityBranch& B = ba.branch;
      os << "  branch N=" << B.N << " n=" << B.n << " b=" << B.b << "\n";
      os << "    r(z) = " << series_text(B, a.guard_terms) << "\n";
      os << "    asymptote: " << format_poly(ba.original.implicit) << " = 0, param (" << format_upoly(ba.original.px)
         << ", " << format_upoly(ba.original.py) << ")\n";
      if (ba.family) os << "    family: " << ba.family->family_str() << "\n";
      for (const auto& ch : ba.checks)
        os << "    check " << ch.name << ": " << (ch.ok ? (*ch.ok ? "pass" : "FAIL") : "inconclusive") << "\n";
    }
  }
  if (a.verdict) {
    os << "perfect: " << (a.verdict->perfect ? "yes" : "no") << " (" << reason_str(a.verdict->reason) << ")";
    os << ", regular perfect: " << (a.regular_perfect ? "yes" : "no") << "\n";
  }
  if (a.proximity) os << "proximity class: " << a.proximity->family_str() << ", dimension " << a.proximity->dimension << "\n";
  return os.str();
}

}  // namespace gasymp
