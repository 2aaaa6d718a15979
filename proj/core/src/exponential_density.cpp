#include "minsum/exponential_density.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "minsum/errors.hpp"

namespace minsum {

ExponentialDensity::ExponentialDensity(double rate) : rate_(rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw BadShape("exponential rate must be positive, got " +
                   std::to_string(rate));
}

double ExponentialDensity::pdf(double x) const {
  if (x < 0.0) return 0.0;
  return rate_ * std::exp(-rate_ * x);
}

double ExponentialDensity::cdf(double x) const {
  if (x < 0.0) throw NegativeArgument("cdf at x = " + std::to_string(x));
  return -std::expm1(-rate_ * x);
}

double ExponentialDensity::survival(double x) const {
  if (x <= 0.0) return 1.0;
  return std::exp(-rate_ * x);
}

double ExponentialDensity::quantile(double p) const {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  return -std::log1p(-p) / rate_;
}

double ExponentialDensity::median() const { return M_LN2 / rate_; }

ExponentialDensity ExponentialDensity::dilated(double lambda) const {
  if (!(lambda > 0.0))
    throw NonPositiveScale("dilation factor " + std::to_string(lambda));
  return ExponentialDensity(rate_ * lambda);
}

}  // namespace minsum
