#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gasymp/classify.hpp"
#include "gasymp/verify.hpp"
#include "json.hpp"

namespace gasymp {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  TruncationPolicy policy;
  SamplePlan plan;
  DecayTolerance decay;
  bool verify = true;
  bool norm_down = false;  // also report the rational norm of algebraic asymptotes
};

// One named check; empty `ok` means inconclusive (numeric data or a field bound).
struct Check {
  std::string name;
  std::optional<bool> ok;
  std::string detail;
};

struct BranchAnalysis {
  InfinityBranch branch;
  Asymptote prepared;  // in the sheared frame, x = t^n
  Asymptote original;  // in the input frame (same as prepared when lambda = 0)
  std::optional<ProximityClassDescriptor> family;
  std::string family_note;  // why the family is unavailable
  std::vector<Check> checks;
  std::optional<DecayReport> decay;
};

struct PointAnalysis {
  InfinityPoint point;
  std::vector<BranchAnalysis> branches;
};

struct Analysis {
  std::string input;
  QBiPoly f;  // as given
  PreparedCurve curve;
  std::vector<PointAnalysis> points;
  std::optional<PerfectionVerdict> verdict;
  bool regular_perfect = false;
  std::optional<ProximityClassDescriptor> proximity;
  std::string stage = "parse";  // last stage reached
  bool norm_down = false;
  int guard_terms = 2;  // negative-exponent terms shown per series

  bool numeric() const;
  bool all_checks_pass() const;
  std::vector<std::string> failed_checks() const;
};

// Runs prepare -> points -> branches -> asymptotes -> classification -> verification,
// filling `out` as it goes so a partial result survives an exception.
void analyze(const QBiPoly& f, const AnalyzeOptions& opt, Analysis& out);

Json to_json(const Analysis& a);
Json to_json(const ProximityClassDescriptor& d);
std::string format_text(const Analysis& a);

std::string format_sci(const Real& v, int digits = 6);

}  // namespace gasymp
