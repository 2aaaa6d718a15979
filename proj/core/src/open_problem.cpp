#include "minsum/open_problem.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "minsum/errors.hpp"
#include "minsum/functionals.hpp"

namespace minsum {

namespace {

constexpr double kTwoLn2 = 2.0 * M_LN2;

// ratio / z; finite and continuous through z = 0
double ratio_over_z(const Density& d, double z) {
  double med = d.median();
  if (z < 1e-12 * med) {
    // delta(z) ~ z * pdf(0+), survival -> 1: ratio/z -> 2 pdf(0+)
    return 2.0 * d.pdf(z);
  }
  double s = d.survival(z);
  if (!(s > 0.0))
    throw ZeroDenominator("survival(z) = 0 at z = " + std::to_string(z));
  return 2.0 * delta_at(d, z) / (s * s) / z;
}

}  // namespace

WeightedRatio weighted_ratio(const Density& d, double z) {
  if (!(z > 0.0))
    throw NegativeArgument("weighted_ratio needs z > 0, got " +
                           std::to_string(z));
  double roz = ratio_over_z(d, z);
  WeightedRatio w;
  w.ratio = roz * z;
  w.med_normalized = roz * d.median() / kTwoLn2;
  w.mean_normalized = roz * d.mean() / 2.0;
  return w;
}

RatioProfile conjecture_scan(const Density& d, int grid_points) {
  if (grid_points < 2)
    throw InsufficientData("conjecture_scan: grid_points must be >= 2");
  double z_max = d.quantile(0.999);

  RatioProfile prof;
  prof.truncated = d.upper_support_bound().has_value();
  prof.z_grid.reserve(grid_points);
  prof.ratio_values.reserve(grid_points);
  prof.weighted_med.reserve(grid_points);
  prof.weighted_mean.reserve(grid_points);
  prof.defined.reserve(grid_points);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  prof.sup_weighted_med = -std::numeric_limits<double>::infinity();
  prof.sup_weighted_mean = -std::numeric_limits<double>::infinity();
  prof.inf_weighted_med = std::numeric_limits<double>::infinity();
  prof.inf_weighted_mean = std::numeric_limits<double>::infinity();

  for (int i = 1; i <= grid_points; ++i) {
    double z = z_max * i / grid_points;
    prof.z_grid.push_back(z);
    if (!(d.survival(z) > 0.0)) {
      prof.ratio_values.push_back(nan);
      prof.weighted_med.push_back(nan);
      prof.weighted_mean.push_back(nan);
      prof.defined.push_back(false);
      prof.truncated = true;
      continue;
    }
    WeightedRatio w = weighted_ratio(d, z);
    prof.ratio_values.push_back(w.ratio);
    prof.weighted_med.push_back(w.med_normalized);
    prof.weighted_mean.push_back(w.mean_normalized);
    prof.defined.push_back(true);
    if (w.med_normalized > prof.sup_weighted_med) {
      prof.sup_weighted_med = w.med_normalized;
      prof.arg_sup_med = z;
    }
    if (w.mean_normalized > prof.sup_weighted_mean) {
      prof.sup_weighted_mean = w.mean_normalized;
      prof.arg_sup_mean = z;
    }
    prof.inf_weighted_med = std::min(prof.inf_weighted_med, w.med_normalized);
    prof.inf_weighted_mean = std::min(prof.inf_weighted_mean, w.mean_normalized);
  }
  return prof;
}

double exponential_identity_check(double rate,
                                  std::span<const double> z_grid) {
  ExponentialDensity e(rate);
  Density d(e);
  double worst = 0.0;
  for (double z : z_grid) {
    if (!(z > 0.0))
      throw NegativeArgument("identity check needs z > 0, got " +
                             std::to_string(z));
    double dq = delta_at_quadrature(d, z);
    double s = e.survival(z);
    double ratio = 2.0 * dq / (s * s);
    worst = std::max(worst, std::abs(ratio * e.mean() / z - 2.0));
  }
  return worst;
}

}  // namespace minsum
