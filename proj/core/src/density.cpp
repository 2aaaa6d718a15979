#include "minsum/density.hpp"

#include <cmath>

namespace minsum {

double Density::pdf(double x) const {
  return std::visit([x](const auto& d) { return d.pdf(x); }, impl_);
}
double Density::cdf(double x) const {
  return std::visit([x](const auto& d) { return d.cdf(x); }, impl_);
}
double Density::survival(double x) const {
  return std::visit([x](const auto& d) { return d.survival(x); }, impl_);
}
double Density::quantile(double p) const {
  return std::visit([p](const auto& d) { return d.quantile(p); }, impl_);
}
double Density::median() const {
  return std::visit([](const auto& d) { return d.median(); }, impl_);
}
double Density::sup_norm() const {
  return std::visit([](const auto& d) { return d.sup_norm(); }, impl_);
}
double Density::mean() const {
  return std::visit([](const auto& d) { return d.mean(); }, impl_);
}

std::optional<double> Density::upper_support_bound() const {
  if (const auto* h = histogram()) return h->upper_edge();
  return std::nullopt;
}

Density Density::dilated(double lambda) const {
  return std::visit([lambda](const auto& d) { return Density(d.dilated(lambda)); },
                    impl_);
}

double cdf_eval(const Density& d, double x) { return d.cdf(x); }
double median_of(const Density& d) { return d.median(); }
Density dilate(const Density& d, double lambda) { return d.dilated(lambda); }

namespace builders {

HistogramDensity uniform() { return HistogramDensity({0.0, 1.0}, {1.0}); }

HistogramDensity triangle(int bins) {
  if (bins < 2) bins = 2;
  std::vector<double> edges(bins + 1), heights(bins);
  for (int i = 0; i <= bins; ++i) edges[i] = 2.0 * i / bins;
  for (int i = 0; i < bins; ++i) {
    double mid = 0.5 * (edges[i] + edges[i + 1]);
    heights[i] = 1.0 - std::abs(1.0 - mid);
  }
  return renormalize_bins(std::move(edges), std::move(heights));
}

}  // namespace builders

}  // namespace minsum
