#pragma once

#include <cmath>
#include <cstdint>

namespace minsum::detail {

/// Neumaier-compensated accumulator; exact enough for a few thousand terms.
struct Sum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

/// Sum of heights[i] * (edges[i+1] - edges[i]) with fma-exact products.
template <class E, class H>
double bin_mass(const E& edges, const H& heights) {
  Sum acc;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    double w = edges[i + 1] - edges[i];
    double p = heights[i] * w;
    acc.add(p);
    acc.add(std::fma(heights[i], w, -p));
  }
  return acc.value();
}

/// Uniform draw in [0, 1) from the top 53 bits of a 64-bit word.
/// Fully specified, unlike std::uniform_real_distribution.
inline double u01(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace minsum::detail
