#pragma once

#include <span>
#include <vector>

#include "minsum/density.hpp"

namespace minsum {

/// The mixed/both-large probability ratio at z together with its two
/// conjecture normalizations.  For exponential inputs both normalized
/// values equal 1 at every z -- the candidate equality case.
struct WeightedRatio {
  double ratio;            // P(sum>=2z, min<=z) / P(sum>=2z, min>=z) = 2 delta / survival^2
  double med_normalized;   // ratio * median / ((2 ln 2) z); >= 1 iff median form holds at z
  double mean_normalized;  // ratio * mean / (2 z);          >= 1 iff mean form holds at z
};

/// Throws ZeroDenominator when survival(z) = 0 (z beyond the support).
/// For z below 1e-12 * median the linear small-z limit is used so the
/// normalized values stay finite.
WeightedRatio weighted_ratio(const Density& d, double z);

/// Scan of the weighted ratio over (0, quantile(0.999)].
struct RatioProfile {
  std::vector<double> z_grid;
  std::vector<double> ratio_values;
  std::vector<double> weighted_med;
  std::vector<double> weighted_mean;
  std::vector<bool> defined;  // false where survival(z) = 0
  double sup_weighted_med = 0.0;
  double arg_sup_med = 0.0;
  double sup_weighted_mean = 0.0;
  double arg_sup_mean = 0.0;
  double inf_weighted_med = 0.0;   // over defined entries
  double inf_weighted_mean = 0.0;  // over defined entries
  bool truncated = false;  // compact support: some z excluded, and the
                           // conjecture's hypothesis does not cover d
};

/// Each normalization's conjecture holds for d iff the corresponding sup
/// is >= 1.  A non-truncated density with sup < 1 would be a would-be
/// counterexample and is only flagged for manual scrutiny.
RatioProfile conjecture_scan(const Density& d, int grid_points = 2048);

/// Max over the grid of |ratio(z) * E[X] / z - 2| for the exponential with
/// the given rate, evaluated through the quadrature path rather than the
/// closed form.  The identity makes this 0 for every rate.
double exponential_identity_check(double rate, std::span<const double> z_grid);

}  // namespace minsum
