#pragma once

#include <optional>
#include <variant>

#include "minsum/exponential_density.hpp"
#include "minsum/histogram_density.hpp"

namespace minsum {

/// Value-semantic wrapper over the two first-class density families.
///
/// Every query is pure and the object is immutable, so densities are safe
/// to share across threads.  Code that needs the exact evaluation path can
/// recover the concrete family through histogram() / exponential().
class Density {
 public:
  Density(HistogramDensity h) : impl_(std::move(h)) {}
  Density(ExponentialDensity e) : impl_(std::move(e)) {}

  double pdf(double x) const;
  double cdf(double x) const;
  double survival(double x) const;
  double quantile(double p) const;
  double median() const;
  double sup_norm() const;
  double mean() const;

  /// Finite top of the support, or nullopt for unbounded support.
  std::optional<double> upper_support_bound() const;

  /// Distribution of X / lambda.
  Density dilated(double lambda) const;

  const HistogramDensity* histogram() const {
    return std::get_if<HistogramDensity>(&impl_);
  }
  const ExponentialDensity* exponential() const {
    return std::get_if<ExponentialDensity>(&impl_);
  }

 private:
  std::variant<HistogramDensity, ExponentialDensity> impl_;
};

// spec'd operation names, thin aliases over the member queries
double cdf_eval(const Density& d, double x);
double median_of(const Density& d);
Density dilate(const Density& d, double lambda);

namespace builders {

/// Uniform density on [0, 1].
HistogramDensity uniform();

/// Staircase approximation of the symmetric triangle on [0, 2] with peak
/// at 1; exact midpoint discretization, mass 1.
HistogramDensity triangle(int bins = 32);

}  // namespace builders

}  // namespace minsum
