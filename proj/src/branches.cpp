#include "gasymp/branches.hpp"

#include <numeric>
#include <sstream>

#include "gasymp/factor.hpp"

namespace gasymp {

YZPoly dehomogenize_at_x(const QBiPoly& f) {
  const int d = f.total_degree();
  YZPoly g;
  for (const auto& [e, c] : f.terms()) g.add_term(e.second, d - e.first - e.second, c);
  return g;
}

YZPoly PreparedCurve::g() const { return dehomogenize_at_x(f); }

PreparedCurve prepare_curve(const QBiPoly& f) {
  if (f.total_degree() < 1) throw std::invalid_argument("prepare_curve: constant polynomial");
  PreparedCurve c;
  c.f0 = integer_primitive(bivariate_squarefree_part(f));
  c.d = c.f0.total_degree();
  const QBiPoly fd = c.f0.homogeneous(c.d);
  long lambda = 0;
  while (sgn(fd.eval(Rat(lambda), Rat(1))) == 0) ++lambda;
  c.lambda = lambda;
  c.f = lambda == 0 ? c.f0 : integer_primitive(c.f0.shear(Rat(lambda)));
  c.components = factor_bivariate(c.f);
  return c;
}

std::vector<InfinityPoint> infinity_points(const PreparedCurve& c, int max_ext_degree) {
  std::vector<InfinityPoint> out;
  for (auto& r : constant_terms(c.g(), max_ext_degree)) out.push_back({r.value, r.mult, !r.value.is_exact()});
  return out;
}

InfinityBranch make_branch(const InfinityPoint& P, const PuiseuxClass& cls) {
  InfinityBranch B;
  B.point = P;
  B.cls = cls;
  B.N = cls.rep.N;
  B.field = cls.rep.field;
  B.numeric = cls.rep.numeric;
  for (const auto& t : cls.rep.terms) B.r_terms.push_back({Rat(1 - t.exp), t.coeff});
  if (cls.rep.trunc) B.exact_above = Rat(1 - *cls.rep.trunc);
  BranchDegree bd = branch_degree(B);
  B.n = bd.n;
  B.b = bd.b;
  B.reduced = bd.reduced;
  B.k = static_cast<int>(bd.reduced.size());
  return B;
}

std::vector<InfinityBranch> infinity_branches(const PreparedCurve& c, const InfinityPoint& P,
                                              const TruncationPolicy& policy) {
  std::vector<InfinityBranch> out;
  for (const auto& cls : puiseux_at(c.g(), P.m, policy)) out.push_back(make_branch(P, cls));
  return out;
}

BranchDegree branch_degree(const InfinityBranch& B) {
  std::vector<int> Ni;
  for (const auto& t : B.r_terms) {
    if (t.exp < 0 || t.exp >= 1) continue;
    Rat v = (1 - t.exp) * B.N;
    if (v.get_den() != 1) throw std::logic_error("branch exponent outside (1/N)Z");
    Ni.push_back(static_cast<int>(v.get_num().get_si()));
  }
  std::sort(Ni.begin(), Ni.end());
  int b = B.N;
  for (int v : Ni) b = std::gcd(b, v);
  BranchDegree bd{B.N / b, b, {}};
  for (int v : Ni) bd.reduced.push_back(v / b);
  return bd;
}

std::optional<bool> divisibility_holds(const PreparedCurve& c, const InfinityBranch& B) {
  if (!B.point.m.is_exact()) return std::nullopt;
  const QBiPoly fd = c.form(c.d);
  std::vector<Rat> v(c.d + 1, Rat(0));
  for (const auto& [e, coef] : fd.terms()) v[e.second] = coef;
  KPoly p = to_kpoly(QPoly(v));
  const KPoly lin = KPoly::x() - KPoly(B.point.m);
  for (int i = 0; i < B.N; ++i) {
    auto [q, r] = divmod(p, lin);
    if (!is_zero(r)) return false;
    p = q;
  }
  return true;
}

std::optional<bool> branches_convergent(const InfinityBranch& a, const InfinityBranch& b, int max_ext_degree) {
  auto nonneg = [](const InfinityBranch& B) {
    std::vector<RTerm> out;
    for (const auto& t : B.r_terms)
      if (t.exp >= 0) out.push_back(t);
    return out;
  };
  const auto ta = nonneg(a), tb = nonneg(b);
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i)
    if (ta[i].exp != tb[i].exp) return false;
  std::vector<Num> ca;
  for (const auto& t : ta) ca.push_back(t.coeff);

  const int N = b.N;
  std::vector<long> e(tb.size());
  for (std::size_t i = 0; i < tb.size(); ++i) e[i] = Rat((1 - tb[i].exp) * N).get_num().get_si();

  bool undecided = false;
  std::optional<Adjoined> zeta;
  for (int j = 0; j < N; ++j) {
    bool excluded = false;
    {
      PrecisionGuard guard(std::max(256L, current_bits()));
      for (std::size_t i = 0; i < tb.size() && !excluded; ++i) {
        Ball v = tb[i].coeff.to_ball() * Ball(root_of_unity(N, j * e[i]), ulp_scale());
        if (!(ca[i].to_ball() - v).contains_zero()) excluded = true;
      }
    }
    if (excluded) continue;
    std::vector<Num> cb;
    if (j == 0) {
      for (const auto& t : tb) cb.push_back(t.coeff);
    } else {
      try {
        if (!zeta) zeta = adjoin_root_of_unity(b.field, N, max_ext_degree);
      } catch (const DegreeBoundExceeded&) {
        undecided = true;
        continue;
      }
      for (std::size_t i = 0; i < tb.size(); ++i) cb.push_back(embed(tb[i].coeff, *zeta) * zeta->alpha.pow(j * e[i] % N));
    }
    auto eq = lists_equal(ca, cb, max_ext_degree);
    if (eq && *eq) return true;
    if (!eq) undecided = true;
  }
  if (undecided) return std::nullopt;
  return false;
}

std::string InfinityBranch::r_str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : r_terms) {
    std::string c = t.coeff.str();
    if (c.find(' ') != std::string::npos) c = "(" + c + ")";
    if (!first) {
      if (c[0] == '-') {
        os << " - ";
        c = c.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (t.exp == 0) {
      os << c;
      continue;
    }
    if (c == "-1") os << "-";
    else if (c != "1") os << c << "*";
    os << (t.exp == 1 ? std::string("z") : "z^(" + rat_str(t.exp) + ")");
  }
  if (first) os << "0";
  if (exact_above) os << " + O(z^(" << rat_str(*exact_above) << "))";
  return os.str();
}

}  // namespace gasymp
