#include <cmath>
#include <vector>

#include <doctest.h>

#include "minsum/density.hpp"
#include "minsum/errors.hpp"
#include "minsum/functionals.hpp"
#include "minsum/open_problem.hpp"
#include "minsum/sharpness.hpp"
#include "support/suite.hpp"

using namespace minsum;

TEST_CASE("exponential inputs make both normalizations identically one") {
  Density e(ExponentialDensity(1.0));
  for (double z : {0.01, 0.2, 1.0, 3.0, 8.0}) {
    auto w = weighted_ratio(e, z);
    CHECK(w.ratio == doctest::Approx(2.0 * z).epsilon(1e-12));
    CHECK(w.mean_normalized == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.med_normalized == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("uniform weighted ratio at z = 1/4") {
  Density u(builders::uniform());
  auto w = weighted_ratio(u, 0.25);
  CHECK(w.ratio == doctest::Approx(0.3125 / 0.5625).epsilon(1e-13));
  CHECK_THROWS_AS(weighted_ratio(u, 1.0), ZeroDenominator);
  CHECK_THROWS_AS(weighted_ratio(u, 0.0), NegativeArgument);
}

TEST_CASE("ratio agrees with the conditional probability transform") {
  auto suite = testsupport::named_suite();
  for (const auto& [name, d] : suite) {
    CAPTURE(name);
    double med = d.median();
    for (double frac : {0.2, 0.5, 0.9}) {
      double z = frac * med;
      double cr = conditional_ratio(d, z);
      if (cr >= 1.0) continue;
      CHECK(std::abs(weighted_ratio(d, z).ratio - cr / (1.0 - cr)) <= 1e-10);
    }
  }
}

TEST_CASE("weighted values are dilation invariant") {
  auto suite = testsupport::named_suite();
  for (const auto& [name, d] : suite) {
    CAPTURE(name);
    double z = 0.6 * d.median();
    auto base = weighted_ratio(d, z);
    for (double lambda : {0.1, 7.3}) {
      auto scaled = weighted_ratio(d.dilated(lambda), z / lambda);
      CHECK(std::abs(scaled.ratio - base.ratio) <= 1e-9);
      CHECK(std::abs(scaled.med_normalized - base.med_normalized) <= 1e-9);
      CHECK(std::abs(scaled.mean_normalized - base.mean_normalized) <= 1e-9);
    }
  }
}

TEST_CASE("conjecture_scan profiles") {
  // exponential: flat profile at exactly 1
  auto pe = conjecture_scan(Density(ExponentialDensity(2.0)), 512);
  CHECK(!pe.truncated);
  CHECK(pe.sup_weighted_mean == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(pe.sup_weighted_mean - pe.inf_weighted_mean <= 1e-9);
  CHECK(pe.sup_weighted_med == doctest::Approx(1.0).epsilon(1e-10));

  // uniform: compact support, scan truncates, and the sup of the
  // mean-normalized curve is 9/16 at z = 1/3
  auto pu = conjecture_scan(Density(builders::uniform()), 4096);
  CHECK(pu.truncated);
  CHECK(pu.sup_weighted_mean == doctest::Approx(0.5625).epsilon(1e-5));
  CHECK(std::abs(pu.arg_sup_mean - 1.0 / 3.0) <= 1e-3);
  CHECK(pu.sup_weighted_med ==
        doctest::Approx(0.5625 / M_LN2).epsilon(1e-5));

  // compactly supported spike family still scans
  auto ps = conjecture_scan(Density(sharp_family(8)), 512);
  CHECK(ps.truncated);
  CHECK(ps.sup_weighted_mean > 0.0);
  CHECK(std::isfinite(ps.sup_weighted_mean));
}

TEST_CASE("exponential identity holds through the quadrature route") {
  std::vector<double> zs;
  for (int k = 1; k <= 200; ++k) zs.push_back(0.05 * k);
  CHECK(exponential_identity_check(1.0, zs) <= 1e-9);
  CHECK(exponential_identity_check(5.0, zs) <= 1e-9);

  // small-z limit: ratio/z -> 2 rate, so ratio * mean / z -> 2
  Density e(ExponentialDensity(3.0));
  for (double z : {1e-4, 1e-6, 1e-8}) {
    auto w = weighted_ratio(e, z);
    CHECK(w.mean_normalized == doctest::Approx(1.0).epsilon(1e-3));
  }
}
