#include "gasymp/bipoly.hpp"
#include "gasymp/resultant.hpp"

namespace gasymp {

QBiPoly integer_primitive(const QBiPoly& p) {
  if (p.is_zero()) return p;
  Int den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat scale(den, num);
  scale.canonicalize();
  auto lf = p.homogeneous(p.total_degree());
  if (sgn(lf.lead_y().second) < 0) scale = -scale;
  return scale * p;
}

QBiPoly resultant_sylvester(const std::vector<QBiPoly>& p, const std::vector<QBiPoly>& q) {
  return integer_primitive(sylvester_resultant(p, q));
}

}  // namespace gasymp
