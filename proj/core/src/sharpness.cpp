#include "minsum/sharpness.hpp"

#include <cmath>
#include <string>

#include "minsum/detail/numeric.hpp"
#include "minsum/errors.hpp"
#include "minsum/functionals.hpp"

namespace minsum {

HistogramDensity sharp_family(const SharpFamilyParams& p) {
  if (p.n < 1)
    throw BadShape("spike count must be >= 1, got " + std::to_string(p.n));
  if (!(0.0 < p.inner && p.inner < p.outer))
    throw BadShape("need 0 < inner < outer");
  if (!(p.outer < 2.0 * p.inner))
    throw BadShape("need outer < 2*inner so spikes stay disjoint");
  if (std::abs(p.amplitude * (p.outer - p.inner) - 1.0) > 1e-12)
    throw NonNormalized("amplitude * (outer - inner) = " +
                        std::to_string(p.amplitude * (p.outer - p.inner)));

  const int n = p.n;
  // edges: [le_1, ri_1, le_2, ri_2, ...]; heights alternate spike, gap
  std::vector<double> edges(2 * static_cast<std::size_t>(n));
  std::vector<double> heights(2 * static_cast<std::size_t>(n) - 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    double scale = std::ldexp(1.0, -k);
    edges[2 * (k - 1)] = 1.0 - p.outer * scale;
    edges[2 * (k - 1) + 1] = 1.0 - p.inner * scale;
    heights[2 * (k - 1)] = std::ldexp(p.amplitude, k) / n;
  }

  // Spike widths are differences of doubles near 1 and quantize at 2^-53,
  // so with the heights pinned to their exact values the mass drifts by up
  // to ~h_n * 2^-53.  Walk the spikes from the tallest down, absorbing the
  // running residual into the left edge; each edge moves ~1 ulp and the
  // final residual is below h_1 ulps, i.e. ~1e-15.
  for (int k = n; k >= 1; --k) {
    double resid = detail::bin_mass(edges, heights) - 1.0;
    if (resid == 0.0) break;
    std::size_t le = 2 * static_cast<std::size_t>(k - 1);
    double moved = edges[le] + resid / heights[le];
    double lo = le == 0 ? 0.0 : edges[le - 1];
    if (moved > lo && moved < edges[le + 1]) edges[le] = moved;
  }

  return HistogramDensity(std::move(edges), std::move(heights));
}

HistogramDensity sharp_family(int n) { return sharp_family(SharpFamilyParams{n}); }

std::vector<SharpnessRow> sharpness_experiment(std::span<const int> n_values,
                                               int grid_points) {
  std::vector<SharpnessRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    if (n < 2)
      throw BadShape("sharpness_experiment: need n >= 2, got " +
                     std::to_string(n));
    Density d(sharp_family(n));
    ProfileOptions opt;
    opt.grid_points = grid_points;
    DeltaProfile prof = delta_profile(d, opt);

    SharpnessRow row;
    row.n = n;
    row.sup_delta = prof.sup_value;
    row.arg_sup = prof.arg_sup;
    row.median = d.median();
    row.sup_norm = d.sup_norm();
    row.log2_product = std::log2(row.median * row.sup_norm);
    row.product_with_log = row.sup_delta * row.log2_product;
    row.n_times_sup_delta = n * row.sup_delta;
    rows.push_back(row);
  }
  return rows;
}

double b_constant_obstruction(std::span<const SharpnessRow> rows) {
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) seen = seen || rows[j].n == rows[i].n;
    if (!seen) ++distinct;
  }
  if (distinct < 2)
    throw InsufficientData("slope fit needs at least two distinct n, got " +
                           std::to_string(distinct));

  // least squares of y = 1/sup_delta against x = log2(med * sup_norm)
  detail::Sum sx, sy, sxx, sxy;
  for (const auto& r : rows) {
    double x = r.log2_product, y = 1.0 / r.sup_delta;
    sx.add(x);
    sy.add(y);
    sxx.add(x * x);
    sxy.add(x * y);
  }
  double m = static_cast<double>(rows.size());
  double denom = m * sxx.value() - sx.value() * sx.value();
  return (m * sxy.value() - sx.value() * sy.value()) / denom;
}

double b_constant_obstruction(std::span<const int> n_values, int grid_points) {
  auto rows = sharpness_experiment(n_values, grid_points);
  return b_constant_obstruction(rows);
}

}  // namespace minsum
