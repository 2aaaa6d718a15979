#include "minsum/theorem.hpp"

#include <cmath>
#include <stdexcept>

#include "minsum/detail/numeric.hpp"
#include "minsum/errors.hpp"

namespace minsum {

double theorem_rhs_for_product(double product) {
  // product >= 1/2 for every density, so the denominator is >= 16
  return 1.0 / (24.0 + 8.0 * std::log2(product));
}

double theorem_rhs(const Density& d) {
  return theorem_rhs_for_product(d.median() * d.sup_norm());
}

DyadicBandCheck dyadic_band_lemma(const Density& d, int k) {
  if (k < 1) throw std::invalid_argument("dyadic_band_lemma: k must be >= 1");
  Density dn = d.dilated(d.median());  // median pinned to 1
  double z = 1.0 - std::ldexp(1.0, -k);
  double lo = 1.0 - std::ldexp(1.0, 1 - k);  // k = 1 gives exactly 0
  double band = dn.cdf(z) - dn.cdf(lo);
  return {band, 2.0 * delta_at(dn, z)};
}

EllPartitionCheck ell_partition_check(const Density& d) {
  Density dn = d.dilated(d.median());
  double s = dn.sup_norm();  // equals the invariant product med * sup_norm
  int ell = static_cast<int>(std::floor(3.0 + std::log2(s)));
  double tail_bound = std::ldexp(s, -ell);

  detail::Sum covered;
  for (int k = 1; k <= ell; ++k) {
    double z = 1.0 - std::ldexp(1.0, -k);
    double lo = 1.0 - std::ldexp(1.0, 1 - k);
    covered.add(dn.cdf(z) - dn.cdf(lo));
  }
  covered.add(dn.cdf(1.0) - dn.cdf(1.0 - std::ldexp(1.0, -ell)));
  return {ell, tail_bound, covered.value()};
}

TheoremReport verify_theorem(const Density& d, int grid_points) {
  TheoremReport rep;
  double med = d.median();
  rep.med_supnorm_product = med * d.sup_norm();
  rep.rhs = theorem_rhs_for_product(rep.med_supnorm_product);

  ProfileOptions opt;
  opt.range_end = med;
  opt.grid_points = grid_points;
  rep.lhs = delta_profile(d, opt).sup_value;
  rep.margin = rep.lhs - rep.rhs;

  auto part = ell_partition_check(d);
  rep.ell_star = part.ell;
  Density dn = d.dilated(med);
  rep.dyadic_band_masses.reserve(static_cast<std::size_t>(part.ell));
  for (int k = 1; k <= part.ell; ++k) {
    double z = 1.0 - std::ldexp(1.0, -k);
    double lo = 1.0 - std::ldexp(1.0, 1 - k);
    rep.dyadic_band_masses.push_back(dn.cdf(z) - dn.cdf(lo));
  }
  return rep;
}

}  // namespace minsum
