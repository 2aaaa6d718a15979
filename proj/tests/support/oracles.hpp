#pragma once

// Independent oracles used only by tests.  Nothing here may call into the
// delta evaluation paths it is checking.

#include <algorithm>
#include <cmath>

#include "minsum/histogram_density.hpp"

namespace testsupport {

// delta for the uniform density on [0, 1], by direct integration of the
// defining event: z - 1.5 z^2 below 1/2, (1-z)^2/2 up to 1, then 0.
inline double uniform_delta(double z) {
  if (z <= 0.0) return 0.0;
  if (z <= 0.5) return z - 1.5 * z * z;
  if (z >= 1.0) return 0.0;
  return 0.5 * (1.0 - z) * (1.0 - z);
}

// P(X + Y >= t) for X, Y i.i.d. exponential(rate): Erlang-2 tail.
inline double erlang2_tail(double rate, double t) {
  if (t <= 0.0) return 1.0;
  return std::exp(-rate * t) * (1.0 + rate * t);
}

// Area of {(x, y) in [a,b] x [c,d] : x + y >= t}, exact.
inline double rect_halfplane_area(double a, double b, double c, double d,
                                  double t) {
  // complement area: integrate clamp(t - x - c, 0, d - c) over x in [a, b]
  double lo = t - d;  // below lo the full strip is under the line
  double hi = t - c;  // above hi nothing is
  double below = 0.0;
  double full_lo = std::min(b, lo);
  if (full_lo > a) below += (d - c) * (full_lo - a);
  double seg_a = std::max(a, lo), seg_b = std::min(b, hi);
  if (seg_b > seg_a) {
    double ma = t - seg_a - c, mb = t - seg_b - c;  // linear heights
    below += 0.5 * (ma + mb) * (seg_b - seg_a);
  }
  return (b - a) * (d - c) - below;
}

// P(X + Y >= t) for X, Y i.i.d. with a histogram density, by exact 2-D
// integration of the product density over bin rectangles.
inline double histogram_sum_tail(const minsum::HistogramDensity& h, double t) {
  auto e = h.edges();
  auto ht = h.heights();
  double total = 0.0;
  for (std::size_t i = 0; i < ht.size(); ++i) {
    if (ht[i] == 0.0) continue;
    for (std::size_t j = 0; j < ht.size(); ++j) {
      if (ht[j] == 0.0) continue;
      total += ht[i] * ht[j] *
               rect_halfplane_area(e[i], e[i + 1], e[j], e[j + 1], t);
    }
  }
  return total;
}

}  // namespace testsupport
