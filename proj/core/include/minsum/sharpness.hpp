#pragma once

#include <span>
#include <vector>

#include "minsum/density.hpp"
#include "minsum/theorem.hpp"

namespace minsum {

/// Parameters of the dyadic spike family: n spikes, spike k carrying mass
/// 1/n at height amplitude * 2^k / n on [1 - outer/2^k, 1 - inner/2^k].
struct SharpFamilyParams {
  int n = 1;
  double amplitude = 50.0;
  double inner = 0.99;
  double outer = 1.01;
};

/// Builds the spike family as a histogram with explicit zero-height gap
/// bins between spikes.  Heights are the exact values amplitude * 2^k / n;
/// left spike edges are nudged by at most a few ulps so the total mass
/// meets the 1e-12 normalization gate (widths near 1 quantize at 2^-53,
/// which otherwise drifts the mass by ~4e-12 already at n = 14).
/// Throws NonNormalized unless amplitude * (outer - inner) = 1 within 1e-12.
HistogramDensity sharp_family(const SharpFamilyParams& params);
HistogramDensity sharp_family(int n);

struct SharpnessRow {
  int n = 0;
  double sup_delta = 0.0;
  double arg_sup = 0.0;
  double median = 0.0;
  double sup_norm = 0.0;
  double log2_product = 0.0;      // log2(median * sup_norm)
  double product_with_log = 0.0;  // sup_delta * log2_product
  double n_times_sup_delta = 0.0;
};

/// One row per n: the measured sup of delta over [0, median] plus the
/// scale diagnostics showing sup_delta ~ 1 / log2(sup_norm).
std::vector<SharpnessRow> sharpness_experiment(std::span<const int> n_values,
                                               int grid_points = 4096);

/// Least-squares slope of 1/sup_delta against log2(median * sup_norm) over
/// the family rows: the growth rate that any valid bound's B-constant must
/// match.  Throws InsufficientData with fewer than two distinct n.
double b_constant_obstruction(std::span<const SharpnessRow> rows);
double b_constant_obstruction(std::span<const int> n_values,
                              int grid_points = 4096);

}  // namespace minsum
