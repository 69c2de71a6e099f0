#pragma once

#include <optional>
#include <vector>

#include "gasymp/branches.hpp"

namespace gasymp {

using KBiPoly = BiPoly<Num>;

// A g-asymptote: param (x(t), y(t)) with x(t) = C t^n (C = 1 in the branch frame),
// or the vertical line x = x0 given by (x0, t).
struct Asymptote {
  Num m;
  int n = 1;
  KPoly px;
  KPoly py;
  KBiPoly implicit;  // scaled to coefficient 1 on the leading-form monomial with the highest y power
  std::vector<RTerm> r_tilde;
  FieldPtr field;
  bool numeric = false;
  bool vertical = false;
  int properness_gcd = 1;  // gcd of n and the reduced exponents

  bool is_rational() const;
  std::optional<QBiPoly> rational_implicit() const;
};

// Nonnegative-exponent part of r.
std::vector<RTerm> truncate_branch(const InfinityBranch& B);

// (t^n, r~(t^n)).
std::pair<KPoly, KPoly> build_parametrization(const std::vector<RTerm>& r_tilde, int n);

// Res_t(x - px(t), y - py(t)), scaled by monic_leading_form.
KBiPoly implicitize(const KPoly& px, const KPoly& py);
QBiPoly implicitize(const QPoly& px, const QPoly& py);

Asymptote build_asymptote(const InfinityBranch& B);

// Asymptote of the unsheared curve f0(x, y) = f(x - lambda*y, y) at the image of B,
// obtained by reverting the branch to the original coordinates.
Asymptote original_frame_asymptote(const InfinityBranch& B, const Rat& lambda);

// Inverse shear of a prepared-frame implicit polynomial.
KBiPoly unshear(const KBiPoly& p, const Rat& lambda);

// Every conjugate leaf, reparametrized by t -> c^b t, gives the same param.
// Empty when the check is inconclusive (numeric data or field bound).
std::optional<bool> leaf_independence_check(const InfinityBranch& B, int max_ext_degree = 48);

// implicit(px(t), py(t)) == 0 identically.
bool param_on_implicit(const Asymptote& a);
// Leading form of the implicit polynomial equals (y - m x)^n.
bool leading_form_ok(const Asymptote& a);

QBiPoly to_qbipoly(const KBiPoly& p);  // throws if a coefficient is not rational

// Product of the Galois conjugates of p over Q (resultant against the minimal
// polynomial), integer-primitive. Empty for numeric coefficients.
std::optional<QBiPoly> norm_down(const KBiPoly& p);

}  // namespace gasymp
