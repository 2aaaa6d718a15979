#include "minsum/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "minsum/detail/numeric.hpp"
#include "minsum/errors.hpp"

namespace minsum {

namespace {

// 16-node Gauss-Legendre rule on [-1, 1], positive half.
constexpr double kGlNode[8] = {
    0.09501250983763744018531934, 0.28160355077925891323046050,
    0.45801677765722738634241944, 0.61787624440264374844667176,
    0.75540440835500303389510119, 0.86563120238783174388046790,
    0.94457502307323257607798842, 0.98940093499164993259615417};
constexpr double kGlWeight[8] = {
    0.18945061045506849628539672, 0.18260341504492358886676366,
    0.16915651939500253818931208, 0.14959598881657673208150173,
    0.12462897125553387205247628, 0.09515851168249278480992511,
    0.06225352393864789286284384, 0.02715245941175409485178057};

// Split points of x -> pdf(x) * survival(2z - x) inside (xlo, xhi):
// density edges plus reflected edges 2z - e.  Returns an ascending,
// deduplicated list including both endpoints.
void integrand_cells(const HistogramDensity& h, double z, double xlo,
                     double xhi, std::vector<double>& pts) {
  pts.clear();
  pts.push_back(xlo);
  const auto edges = h.edges();
  // ascending run of in-range edges
  auto lo = std::upper_bound(edges.begin(), edges.end(), xlo);
  auto hi = std::lower_bound(edges.begin(), edges.end(), xhi);
  // reflected edges 2z - e_j descend in j; walk j downward to get them ascending
  auto rlo = std::upper_bound(edges.begin(), edges.end(), 2.0 * z - xhi);
  auto rhi = std::lower_bound(edges.begin(), edges.end(), 2.0 * z - xlo);
  auto a = lo;
  auto rb = rhi;
  auto next_reflected = [&]() { return 2.0 * z - *(rb - 1); };
  while (a != hi || rb != rlo) {
    double v;
    if (a == hi)
      v = next_reflected(), --rb;
    else if (rb == rlo)
      v = *a++;
    else if (*a <= next_reflected())
      v = *a++;
    else
      v = next_reflected(), --rb;
    if (v > pts.back() && v < xhi) pts.push_back(v);
  }
  pts.push_back(xhi);
}

// Exact integral of pdf(x) * survival(2z - x) over [xlo, xhi]: both factors
// are single-piece on each cell, the product is affine in x, and the
// midpoint rule integrates affine functions exactly.
double delta_hist(const HistogramDensity& h, double z) {
  double xlo = std::max(h.lower_edge(), 2.0 * z - h.upper_edge());
  double xhi = std::min(z, h.upper_edge());
  if (!(xhi > xlo)) return 0.0;

  thread_local std::vector<double> pts;
  integrand_cells(h, z, xlo, xhi, pts);

  detail::Sum acc;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i], b = pts[i + 1];
    double xm = 0.5 * (a + b);
    double f = h.pdf(xm);
    if (f == 0.0) continue;
    acc.add(f * h.survival(2.0 * z - xm) * (b - a));
  }
  return acc.value();
}

double delta_exponential(const ExponentialDensity& e, double z) {
  // integrand rate*exp(-rate x)*exp(-rate (2z-x)) is constant in x
  return e.rate() * z * std::exp(-2.0 * e.rate() * z);
}

template <class F>
double gauss_legendre(F f, double a, double b) {
  double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  detail::Sum acc;
  for (int i = 0; i < 8; ++i) {
    acc.add(kGlWeight[i] * f(c + hw * kGlNode[i]));
    acc.add(kGlWeight[i] * f(c - hw * kGlNode[i]));
  }
  return acc.value() * hw;
}

template <class F>
std::pair<double, double> golden_max(F f, double a, double b, double tol) {
  constexpr double invphi = 0.61803398874989484820;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  double bz = x1, bv = f1;
  if (f2 > bv) bv = f2, bz = x2;
  while (b - a > tol) {
    if (f2 > f1) {  // keep the left probe on ties so smaller z wins
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
      if (f2 > bv) bv = f2, bz = x2;
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
      if (f1 > bv || (f1 == bv && x1 < bz)) bv = f1, bz = x1;
    }
  }
  return {bz, bv};
}

}  // namespace

double delta_at(const Density& d, double z) {
  if (z < 0.0) throw NegativeArgument("delta at z = " + std::to_string(z));
  if (z == 0.0) return 0.0;
  if (const auto* h = d.histogram()) return delta_hist(*h, z);
  return delta_exponential(*d.exponential(), z);
}

double delta_at_quadrature(const Density& d, double z, int panels_per_cell) {
  if (z < 0.0) throw NegativeArgument("delta at z = " + std::to_string(z));
  if (z == 0.0) return 0.0;
  panels_per_cell = std::max(1, panels_per_cell);

  auto integrand = [&](double x) { return d.pdf(x) * d.survival(2.0 * z - x); };

  double xlo = 0.0, xhi = z;
  std::vector<double> pts;
  if (const auto* h = d.histogram()) {
    xlo = std::max(h->lower_edge(), 2.0 * z - h->upper_edge());
    xhi = std::min(z, h->upper_edge());
    if (!(xhi > xlo)) return 0.0;
    integrand_cells(*h, z, xlo, xhi, pts);
  } else {
    pts = {xlo, xhi};
  }

  detail::Sum acc;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double w = (pts[i + 1] - pts[i]) / panels_per_cell;
    for (int p = 0; p < panels_per_cell; ++p)
      acc.add(gauss_legendre(integrand, pts[i] + p * w, pts[i] + (p + 1) * w));
  }
  return acc.value();
}

MinSumDecomposition min_sum_decomposition(const Density& d, double z) {
  if (z < 0.0)
    throw NegativeArgument("decomposition at z = " + std::to_string(z));
  double p_mixed = 2.0 * delta_at(d, z);
  double s = d.survival(z);
  double p_both = s * s;
  return {p_mixed, p_both, p_mixed + p_both};
}

double conditional_ratio(const Density& d, double z) {
  auto parts = min_sum_decomposition(d, z);
  if (!(parts.p_sum > 0.0))
    throw UndefinedConditional("P(X+Y >= 2z) = 0 at z = " + std::to_string(z));
  return parts.p_mixed / parts.p_sum;
}

DeltaProfile delta_profile(const Density& d, const ProfileOptions& opt) {
  double range = opt.range_end > 0.0 ? opt.range_end : d.median();
  if (!(range > 0.0))
    throw std::invalid_argument("delta_profile: range_end must be positive");
  if (opt.grid_points < 64)
    throw std::invalid_argument("delta_profile: grid_points must be >= 64");

  std::vector<double> zs;
  zs.reserve(static_cast<std::size_t>(opt.grid_points) + 1);
  for (int i = 0; i <= opt.grid_points; ++i)
    zs.push_back(range * i / opt.grid_points);

  if (const auto* h = d.histogram()) {
    // kinks of z -> delta(z): half-edges and midpoints of edge pairs
    const auto e = h->edges();
    for (std::size_t i = 0; i < e.size(); ++i) {
      double half = 0.5 * e[i];
      if (half > 0.0 && half < range) zs.push_back(half);
      for (std::size_t j = i; j < e.size(); ++j) {
        double mid = 0.5 * (e[i] + e[j]);
        if (mid > 0.0 && mid < range)
          zs.push_back(mid);
        else if (mid >= range)
          break;
      }
    }
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  }

  std::vector<double> vs(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) vs[i] = delta_at(d, zs[i]);

  // best sampled point; ties resolve to the smallest z
  double best_v = vs[0], best_z = zs[0];
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i] > best_v) best_v = vs[i], best_z = zs[i];

  // Collapse exact-value plateaus into runs, then golden-polish each strict
  // local maximum (and the top sampled values as a safety net).
  struct Run {
    std::size_t first, last;  // inclusive index range with one value
    double v;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < vs.size();) {
    std::size_t j = i;
    while (j + 1 < vs.size() && vs[j + 1] == vs[i]) ++j;
    runs.push_back({i, j, vs[i]});
    i = j + 1;
  }
  std::vector<std::size_t> seeds;  // run indices to refine
  for (std::size_t r = 0; r < runs.size(); ++r) {
    bool left_ok = (r == 0) || runs[r - 1].v < runs[r].v;
    bool right_ok = (r + 1 == runs.size()) || runs[r + 1].v < runs[r].v;
    if (left_ok && right_ok) seeds.push_back(r);
  }
  if (seeds.size() > 64) {
    std::partial_sort(seeds.begin(), seeds.begin() + 64, seeds.end(),
                      [&](std::size_t a, std::size_t b) {
                        return runs[a].v > runs[b].v;
                      });
    seeds.resize(64);
    std::sort(seeds.begin(), seeds.end());
  }

  double tol = 1e-10 * range;
  auto f = [&](double z) { return delta_at(d, z); };
  for (std::size_t r : seeds) {
    double a = runs[r].first > 0 ? zs[runs[r].first - 1] : zs[runs[r].first];
    double b = runs[r].last + 1 < zs.size() ? zs[runs[r].last + 1]
                                            : zs[runs[r].last];
    if (!(b > a)) continue;
    auto [pz, pv] = golden_max(f, a, b, tol);
    if (pv > best_v || (pv == best_v && pz < best_z)) best_v = pv, best_z = pz;
  }

  // splice the refined maximizer into the sampled curve
  auto it = std::lower_bound(zs.begin(), zs.end(), best_z);
  if (it == zs.end() || *it != best_z) {
    std::size_t pos = static_cast<std::size_t>(it - zs.begin());
    zs.insert(it, best_z);
    vs.insert(vs.begin() + static_cast<std::ptrdiff_t>(pos), best_v);
  }

  DeltaProfile prof;
  prof.z_grid = std::move(zs);
  prof.delta_values = std::move(vs);
  prof.sup_value = best_v;
  prof.arg_sup = best_z;
  prof.range_end = range;
  return prof;
}

MonteCarloEstimate delta_monte_carlo(const Density& d, double z,
                                     std::uint64_t n_samples,
                                     std::uint64_t seed) {
  if (z < 0.0)
    throw NegativeArgument("monte carlo at z = " + std::to_string(z));
  if (n_samples == 0)
    throw std::invalid_argument("delta_monte_carlo: n_samples must be > 0");

  std::mt19937_64 gen(seed);
  std::uint64_t hits = 0;
  // pairs are drawn in a fixed serial order so results never depend on
  // any parallel chunking of the workload
  auto run = [&](auto&& quantile) {
    for (std::uint64_t i = 0; i < n_samples; ++i) {
      double x = quantile(detail::u01(gen()));
      double y = quantile(detail::u01(gen()));
      if (x <= z && x + y >= 2.0 * z) ++hits;
    }
  };
  if (const auto* h = d.histogram())
    run([&](double u) { return h->quantile(u); });
  else if (const auto* e = d.exponential())
    run([&](double u) { return e->quantile(u); });
  else
    throw SamplerUnavailable("density has no inverse-cdf sampler");

  double est = static_cast<double>(hits) / static_cast<double>(n_samples);
  double se = std::sqrt(est * (1.0 - est) / static_cast<double>(n_samples));
  return {est, se};
}

}  // namespace minsum
