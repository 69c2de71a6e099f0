#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gasymp/asymptote.hpp"

namespace gasymp {

struct PerfectionVerdict {
  enum class Reason { MultipleBranches, DegreeDeficit, Perfect };
  bool perfect = false;
  Reason reason = Reason::MultipleBranches;
  int branch_count = 0;
  int branch_degree = 0;  // n of the unique branch (0 when several)
  int curve_degree = 0;
};

std::string reason_str(PerfectionVerdict::Reason r);

// Perfect iff a single infinity branch whose degree equals the curve degree.
PerfectionVerdict is_perfect(const PreparedCurve& c, const std::vector<InfinityBranch>& branches);
PerfectionVerdict is_perfect(const QBiPoly& f);

// Projective point (x0 : y0 : 0) of f is regular (nonsingular).
bool infinity_point_regular(const KBiPoly& f, const Num& x0, const Num& y0);

// Single infinity point (x0 : y0 : 0) if the leading form is a power of a linear form.
struct SinglePoint {
  Num x0, y0;
};
std::optional<SinglePoint> single_infinity_point(const KBiPoly& f);

bool is_regular_perfect(const KBiPoly& f);
bool is_regular_perfect(const QBiPoly& f);

struct UnsupportedClass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProximityClassDescriptor {
  int d = 0;
  KBiPoly form_d;
  KBiPoly form_d1;
  std::vector<std::pair<int, int>> irrelevant;  // degree descending, x before y
  int dimension = 0;

  std::vector<std::string> parameter_names() const;
  // "form_d + form_d1 + a*x + b*y + c"
  std::string family_str() const;
  // Member with the given free coefficients (one per irrelevant monomial).
  KBiPoly member(const std::vector<Rat>& coeffs) const;
};

// Monomials x^i y^j with i + j <= d - 2, degree descending then x before y.
std::vector<std::pair<int, int>> irrelevant_monomials(int d);

ProximityClassDescriptor proximity_class(const KBiPoly& f);
ProximityClassDescriptor proximity_class(const QBiPoly& f);

bool same_class(const KBiPoly& f, const KBiPoly& g);
bool same_class(const QBiPoly& f, const QBiPoly& g);

// Class of the asymptote at B; requires a regular infinity point.
// The asymptote is taken in the original frame of f0 = unshear(prepared, lambda).
ProximityClassDescriptor asymptote_family(const PreparedCurve& c, const InfinityBranch& B);

// Random members with small rational free coefficients.
std::vector<KBiPoly> sample_members(const ProximityClassDescriptor& d, int k, std::mt19937& rng);

}  // namespace gasymp
