#pragma once

#include <span>
#include <vector>

namespace minsum {

/// Piecewise-constant probability density on [0, inf).
///
/// Bin i covers [edges[i], edges[i+1]) with constant height heights[i].
/// Zero-height bins (gaps) are allowed; the total mass must be 1 within
/// an absolute tolerance of 1e-12 and is checked at construction.  The
/// construction never renormalizes silently.  Instances are immutable.
class HistogramDensity {
 public:
  static constexpr double kMassTolerance = 1e-12;

  /// Validating constructor.  Throws BadShape, NegativeHeight or
  /// NonNormalized; see histogram_from_bins / renormalize_bins for the
  /// two construction policies.
  HistogramDensity(std::vector<double> edges, std::vector<double> heights);

  std::span<const double> edges() const { return edges_; }
  std::span<const double> heights() const { return heights_; }
  std::size_t bin_count() const { return heights_.size(); }

  double pdf(double x) const;       // right-continuous bin lookup
  double cdf(double x) const;       // exact piecewise-linear; throws NegativeArgument
  double survival(double x) const;  // 1 - cdf, computed from suffix sums (no cancellation)
  double quantile(double p) const;  // smallest x with cdf(x) >= p
  double median() const { return median_; }
  double sup_norm() const { return sup_norm_; }
  double mean() const { return mean_; }
  double lower_edge() const { return edges_.front(); }
  double upper_edge() const { return edges_.back(); }
  double total_mass() const { return prefix_.back(); }

  /// Distribution of X / lambda: edges shrink by lambda, heights grow by
  /// lambda.  Throws NonPositiveScale.
  HistogramDensity dilated(double lambda) const;

 private:
  std::vector<double> edges_;
  std::vector<double> heights_;
  std::vector<double> prefix_;  // prefix_[i] = mass below edges_[i]
  std::vector<double> suffix_;  // suffix_[i] = mass at or above edges_[i]
  double median_ = 0.0;
  double sup_norm_ = 0.0;
  double mean_ = 0.0;
};

/// Builds a histogram density from raw bins, validating normalization.
/// Does NOT renormalize: |mass - 1| > 1e-12 raises NonNormalized.
HistogramDensity histogram_from_bins(std::vector<double> edges,
                                     std::vector<double> heights);

/// Scales raw heights by 1/mass so the result has mass 1, then validates.
/// Raises ZeroMass when the input carries no mass.
HistogramDensity renormalize_bins(std::vector<double> edges,
                                  std::vector<double> heights);

}  // namespace minsum
