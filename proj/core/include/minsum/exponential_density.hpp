#pragma once

namespace minsum {

/// Exponential distribution with rate lambda on [0, inf).
/// pdf(x) = lambda * exp(-lambda x); all summary functionals are closed form.
class ExponentialDensity {
 public:
  explicit ExponentialDensity(double rate);

  double rate() const { return rate_; }
  double pdf(double x) const;
  double cdf(double x) const;       // throws NegativeArgument
  double survival(double x) const;  // exp(-rate x), no cancellation near 1
  double quantile(double p) const;
  double median() const;            // ln 2 / rate
  double sup_norm() const { return rate_; }
  double mean() const { return 1.0 / rate_; }

  ExponentialDensity dilated(double lambda) const;  // X/lambda: rate * lambda

 private:
  double rate_;
};

}  // namespace minsum
