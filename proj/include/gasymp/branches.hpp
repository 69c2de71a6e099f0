#pragma once

#include <optional>
#include <vector>

#include "gasymp/puiseux.hpp"

namespace gasymp {

struct PreparedCurve {
  QBiPoly f;   // prepared: squarefree, integer-primitive, (0:1:0) not at infinity
  QBiPoly f0;  // input after removing repeated factors
  int d = 0;
  Rat lambda = 0;  // f(x, y) = f0(x + lambda*y, y)
  std::vector<QBiPoly> components;  // irreducible factors of f over Q

  bool reducible() const { return components.size() > 1; }
  QBiPoly form(int k) const { return f.homogeneous(k); }
  // g(y, z) = F(1, y, z)
  YZPoly g() const;
};

struct InfinityPoint {
  Num m;
  int multiplicity = 1;
  bool numeric = false;
};

struct RTerm {
  Rat exp;
  Num coeff;
};

// r(z) = z * phi(1/z) for one Puiseux class at an infinity point.
struct InfinityBranch {
  InfinityPoint point;
  std::vector<RTerm> r_terms;  // exponents strictly decreasing
  int N = 1;
  int k = 0;  // terms other than m*z with exponent >= 0
  int b = 1;
  int n = 1;
  std::vector<int> reduced;  // n_1 < ... < n_k
  std::optional<Rat> exact_above;  // terms with exponent > this are all present; empty: r is exact
  FieldPtr field;
  bool numeric = false;
  PuiseuxClass cls;  // the underlying class in phi form

  std::string r_str() const;
};

PreparedCurve prepare_curve(const QBiPoly& f);

// g(y, z) = F(1, y, z) of a polynomial of total degree d.
YZPoly dehomogenize_at_x(const QBiPoly& f);

std::vector<InfinityPoint> infinity_points(const PreparedCurve& c, int max_ext_degree = 16);

std::vector<InfinityBranch> infinity_branches(const PreparedCurve& c, const InfinityPoint& P,
                                              const TruncationPolicy& policy = {});

InfinityBranch make_branch(const InfinityPoint& P, const PuiseuxClass& cls);

struct BranchDegree {
  int n;
  int b;
  std::vector<int> reduced;
};
BranchDegree branch_degree(const InfinityBranch& B);

// (y - m x)^N divides f_d; empty when the check cannot be made exactly.
std::optional<bool> divisibility_holds(const PreparedCurve& c, const InfinityBranch& B);

// Same point and same nonnegative part up to conjugation; empty when undecided.
std::optional<bool> branches_convergent(const InfinityBranch& a, const InfinityBranch& b, int max_ext_degree = 32);

}  // namespace gasymp
