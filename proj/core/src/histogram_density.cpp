#include "minsum/histogram_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "minsum/detail/numeric.hpp"
#include "minsum/errors.hpp"

namespace minsum {

HistogramDensity::HistogramDensity(std::vector<double> edges,
                                   std::vector<double> heights)
    : edges_(std::move(edges)), heights_(std::move(heights)) {
  if (edges_.size() < 2)
    throw BadShape("need at least two edges, got " +
                   std::to_string(edges_.size()));
  if (heights_.size() + 1 != edges_.size())
    throw BadShape("expected " + std::to_string(edges_.size() - 1) +
                   " heights, got " + std::to_string(heights_.size()));
  if (!(edges_.front() >= 0.0))
    throw BadShape("edges must start at a nonnegative value");
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    if (!(edges_[i] < edges_[i + 1]))
      throw BadShape("edges must be strictly increasing at index " +
                     std::to_string(i));
  }
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (std::isnan(heights_[i]) || heights_[i] < 0.0)
      throw NegativeHeight("height at index " + std::to_string(i));
  }

  const std::size_t m = heights_.size();
  prefix_.resize(m + 1);
  suffix_.resize(m + 1);
  {
    detail::Sum acc;
    prefix_[0] = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      acc.add(heights_[i] * (edges_[i + 1] - edges_[i]));
      prefix_[i + 1] = acc.value();
    }
  }
  {
    detail::Sum acc;
    suffix_[m] = 0.0;
    for (std::size_t i = m; i-- > 0;) {
      acc.add(heights_[i] * (edges_[i + 1] - edges_[i]));
      suffix_[i] = acc.value();
    }
  }

  double mass = prefix_.back();
  if (std::abs(mass - 1.0) > kMassTolerance)
    throw NonNormalized("total mass is " + std::to_string(mass));

  sup_norm_ = *std::max_element(heights_.begin(), heights_.end());

  {
    detail::Sum acc;
    for (std::size_t i = 0; i < m; ++i)
      acc.add(heights_[i] * (edges_[i + 1] - edges_[i]) * 0.5 *
              (edges_[i] + edges_[i + 1]));
    mean_ = acc.value();
  }

  median_ = quantile(0.5);
}

double HistogramDensity::pdf(double x) const {
  if (x < edges_.front() || x >= edges_.back()) return 0.0;
  auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  return heights_[static_cast<std::size_t>(it - edges_.begin()) - 1];
}

double HistogramDensity::cdf(double x) const {
  if (x < 0.0) throw NegativeArgument("cdf at x = " + std::to_string(x));
  if (x <= edges_.front()) return 0.0;
  if (x >= edges_.back()) return prefix_.back();
  auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - edges_.begin()) - 1;
  return prefix_[i] + heights_[i] * (x - edges_[i]);
}

double HistogramDensity::survival(double x) const {
  if (x <= edges_.front()) return suffix_.front();
  if (x >= edges_.back()) return 0.0;
  auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - edges_.begin()) - 1;
  return suffix_[i + 1] + heights_[i] * (edges_[i + 1] - x);
}

double HistogramDensity::quantile(double p) const {
  if (p <= 0.0) return edges_.front();
  if (p >= prefix_.back()) return edges_.back();
  // First index with prefix_[j] >= p - slack; the bin below it has positive
  // height.  The slack keeps quantiles at flat cdf stretches (zero-height
  // gaps) stable when prefix sums carry round-off: without it the median of
  // a density whose cdf hits p exactly at a gap boundary could jump across
  // the whole gap under a perturbation of a few ulps (dilation of a tall
  // spike family shifts bin masses by up to ~1e-11).
  constexpr double kSlack = 1e-10;
  auto it = std::lower_bound(prefix_.begin(), prefix_.end(), p - kSlack);
  std::size_t j = static_cast<std::size_t>(it - prefix_.begin());
  if (j == 0) return edges_.front();
  std::size_t i = j - 1;
  double x = edges_[i] + (p - prefix_[i]) / heights_[i];
  return std::clamp(x, edges_[i], edges_[i + 1]);
}

HistogramDensity HistogramDensity::dilated(double lambda) const {
  if (!(lambda > 0.0))
    throw NonPositiveScale("dilation factor " + std::to_string(lambda));
  std::vector<double> e(edges_.size()), h(heights_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) e[i] = edges_[i] / lambda;

  // Rescaled widths re-quantize on the floating-point grid; with heights
  // taken literally as heights * lambda, narrow tall bins drift their mass
  // by more than the 1e-12 gate and every cdf-derived quantity with it.
  // Deriving each height from the preserved bin mass keeps cdf, survival
  // and quantiles consistent with the original to ~1e-15; the heights
  // differ from heights * lambda only by the width quantization, which is
  // far below any tolerance asserted on sup norms.
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (heights_[i] == 0.0) {
      h[i] = 0.0;
    } else {
      double mass = heights_[i] * (edges_[i + 1] - edges_[i]);
      h[i] = mass / (e[i + 1] - e[i]);
    }
  }

  double resid = detail::bin_mass(e, h) - 1.0;
  if (std::abs(resid) > 1e-13)
    for (auto& height : h) height /= 1.0 + resid;

  return HistogramDensity(std::move(e), std::move(h));
}

HistogramDensity histogram_from_bins(std::vector<double> edges,
                                     std::vector<double> heights) {
  return HistogramDensity(std::move(edges), std::move(heights));
}

HistogramDensity renormalize_bins(std::vector<double> edges,
                                  std::vector<double> heights) {
  if (edges.size() < 2 || heights.size() + 1 != edges.size())
    throw BadShape("inconsistent edges/heights lengths");
  for (std::size_t i = 0; i < heights.size(); ++i)
    if (std::isnan(heights[i]) || heights[i] < 0.0)
      throw NegativeHeight("height at index " + std::to_string(i));
  double mass = detail::bin_mass(edges, heights);
  if (!(mass > 0.0)) throw ZeroMass("total mass is " + std::to_string(mass));
  for (auto& h : heights) h /= mass;
  return HistogramDensity(std::move(edges), std::move(heights));
}

}  // namespace minsum
