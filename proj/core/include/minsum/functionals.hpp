#pragma once

#include <cstdint>
#include <vector>

#include "minsum/density.hpp"

namespace minsum {

/// delta(z) = P(X <= z and X + Y >= 2z) for X, Y i.i.d. with density d.
///
/// Histograms are integrated exactly: [max(lower, 2z - upper), z] is split
/// at every density edge and every reflected edge 2z - e, so on each cell
/// the integrand pdf(x) * survival(2z - x) is affine and the midpoint rule
/// is exact.  Exponentials use the closed form rate * z * exp(-2 rate z).
double delta_at(const Density& d, double z);

/// Independent evaluation of the same integral by composite 16-node
/// Gauss-Legendre panels between integrand breakpoints.  Exists as a
/// second route for cross-checks; never used by delta_at.
double delta_at_quadrature(const Density& d, double z, int panels_per_cell = 4);

struct MinSumDecomposition {
  double p_mixed;       // P(min <= z and X+Y >= 2z) = 2 delta(z)
  double p_both_large;  // P(min >= z) = survival(z)^2
  double p_sum;         // P(X+Y >= 2z) = p_mixed + p_both_large
};
MinSumDecomposition min_sum_decomposition(const Density& d, double z);

/// P(min <= z | X+Y >= 2z); throws UndefinedConditional when P(X+Y >= 2z) = 0.
double conditional_ratio(const Density& d, double z);

/// Sampled curve z -> delta(z) with its refined supremum over [0, range_end].
struct DeltaProfile {
  std::vector<double> z_grid;        // increasing; includes arg_sup
  std::vector<double> delta_values;  // same length as z_grid
  double sup_value = 0.0;            // max(delta_values) after refinement
  double arg_sup = 0.0;              // smallest maximizer found
  double range_end = 0.0;
};

struct ProfileOptions {
  double range_end = 0.0;  // <= 0 means use median_of(d)
  int grid_points = 4096;  // uniform grid resolution, >= 64
};

/// Scans delta on a uniform grid augmented (for histograms) with every
/// point where an edge or a reflected edge pair aligns -- the exact kink
/// set of z -> delta(z) -- then golden-section polishes each local maximum
/// until the bracket is below 1e-10 * range_end.  Ties in the supremum
/// resolve to the smallest z.
DeltaProfile delta_profile(const Density& d, const ProfileOptions& opt = {});

struct MonteCarloEstimate {
  double estimate;
  double std_error;  // binomial standard error sqrt(p(1-p)/n)
};

/// Empirical frequency of {X <= z, X+Y >= 2z} over n_samples i.i.d. pairs
/// drawn by inverse-transform sampling from a fully specified generator;
/// bit-reproducible for a fixed seed on every platform.
MonteCarloEstimate delta_monte_carlo(const Density& d, double z,
                                     std::uint64_t n_samples,
                                     std::uint64_t seed);

}  // namespace minsum
