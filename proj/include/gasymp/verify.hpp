#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gasymp/asymptote.hpp"

namespace gasymp {

struct SamplePlan {
  std::vector<double> radii{1e2, 1e3, 1e4, 1e5};  // strictly increasing |z|
  std::vector<double> rays;                       // empty: {0, pi} plus two seeded random
  long precision = 128;
  unsigned seed = 1;
  double residual_target = 1e-3;  // chart residual required at the smallest radius
  int max_escalations = 4;
  bool all_leaves = true;  // sample every conjugate leaf, not just the principal one

  std::vector<double> effective_rays() const;
};

struct BranchPoint {
  double radius = 0;
  double ray = 0;
  int leaf = 0;
  Ball x, y;
  Real residual;  // |f(x, y)| / |z|^d, upper bound; 0 when f was not given
};

struct SampleResult {
  std::vector<double> radii;  // after escalation
  std::vector<BranchPoint> points;
  long bits = 0;
  int radius_escalations = 0;
  int precision_escalations = 0;
  bool certified = true;  // ball radii small relative to the values
};

// Points (z, r_trunc(z)) on the leaves of B. With f given, the smallest radius is
// raised until the chart residual drops below plan.residual_target.
SampleResult sample_branch(const InfinityBranch& B, const SamplePlan& plan, const QBiPoly* f = nullptr);

// Value of the truncated branch series on leaf `leaf` at z = R e^{i theta}.
Ball eval_branch(const InfinityBranch& B, double radius, double theta, int leaf);

struct Distance {
  Real value;  // upper bound of the Hermitian distance in C^2
  bool approximate = false;
};

Distance distance_to_asymptote(const Ball& x, const Ball& y, const Asymptote& a);

// (y - m x)^power divides the leading form of f; power defaults to N.
std::optional<bool> divisibility_check(const QBiPoly& f, const InfinityBranch& B, std::optional<int> power = {});

struct DecayTolerance {
  // TailModel: final <= value * |leading dropped term| at the last radius.
  // Relative: final <= value * first distance.  Absolute: final <= value.
  // The first two are floored at 1e-12.
  enum class Mode { TailModel, Relative, Absolute };
  Mode mode = Mode::TailModel;
  double value = 1e3;

  std::string describe() const;
};

struct DecaySeries {
  double ray = 0;
  int leaf = 0;
  std::vector<double> radii;
  std::vector<Real> distances;
  Real tolerance;
  bool non_increasing = false;
  bool pass = false;
};

struct DecayReport {
  std::vector<DecaySeries> series;
  SampleResult samples;
  std::string rule;
  bool pass = false;

  // Worst final distance over the series whose ray is 0 or pi.
  Real max_final_on_real_rays() const;
};

// f and a are in the frame of B (prepared).
DecayReport approach_decay_check(const QBiPoly& f, const InfinityBranch& B, const Asymptote& a,
                                 const SamplePlan& plan = {}, const DecayTolerance& tol = {});

}  // namespace gasymp
