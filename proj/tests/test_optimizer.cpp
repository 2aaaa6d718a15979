#include <cmath>

#include <doctest.h>

#include "minsum/errors.hpp"
#include "minsum/optimizer.hpp"
#include "minsum/sharpness.hpp"
#include "minsum/theorem.hpp"

using namespace minsum;

namespace {

SearchConfig small_config() {
  SearchConfig cfg;
  cfg.n_bins = 16;
  cfg.budget = 300;
  cfg.restarts = 2;
  cfg.seed = 7;
  cfg.grid_points = 256;
  cfg.product_target = M_LN2;
  return cfg;
}

}  // namespace

TEST_CASE("identical config and seed reproduce the state bit for bit") {
  SearchConfig cfg = small_config();
  SearchState a = optimize(cfg);
  SearchState b = optimize(cfg);
  CHECK(a.best_objective == b.best_objective);
  CHECK(a.evaluations == b.evaluations);
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    CHECK(a.history[i].first == b.history[i].first);
    CHECK(a.history[i].second == b.history[i].second);
  }
  auto ea = a.best_density.edges(), eb = b.best_density.edges();
  REQUIRE(ea.size() == eb.size());
  for (std::size_t i = 0; i < ea.size(); ++i) CHECK(ea[i] == eb[i]);
  auto ha = a.best_density.heights(), hb = b.best_density.heights();
  for (std::size_t i = 0; i < ha.size(); ++i) CHECK(ha[i] == hb[i]);
}

TEST_CASE("best-so-far trace is monotone within each restart") {
  SearchState s = optimize(small_config());
  for (const auto& rec : s.restarts) {
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& [idx, obj] : s.history) {
      if (idx < rec.first_eval || idx > rec.last_eval) continue;
      CHECK(obj <= prev);
      prev = obj;
    }
  }
}

TEST_CASE("the proved floor is never beaten") {
  SearchConfig cfg = small_config();
  SearchState s = optimize(cfg);
  Density best(s.best_density);

  // candidate respects the constraint band and sits above its own floor
  double product = best.median() * best.sup_norm();
  CHECK(std::abs(product - cfg.product_target) <=
        cfg.product_band * cfg.product_target + 1e-12);
  CHECK(s.best_objective >= theorem_rhs_for_product(product));
  CHECK(best.median() == doctest::Approx(1.0).epsilon(1e-12));

  TheoremReport cert = certify_candidate(s.best_density);
  CHECK(cert.margin >= 0.0);
}

TEST_CASE("uniform start is already feasible at product one half") {
  SearchConfig cfg = small_config();
  cfg.product_target = 0.5;
  cfg.budget = 200;
  cfg.restarts = 1;
  SearchState s = optimize(cfg);
  // the theorem pins any candidate at product ~0.5 above ~1/16
  CHECK(s.best_objective >=
        theorem_rhs_for_product(0.5 * (1.0 + cfg.product_band)));
}

TEST_CASE("seeding with the spike family keeps the floor intact") {
  auto f8 = sharp_family(8);
  Density d8(f8);
  SearchConfig cfg = small_config();
  cfg.initial = f8;
  cfg.product_target = d8.median() * d8.sup_norm();
  cfg.budget = 150;
  cfg.restarts = 1;
  cfg.grid_points = 512;
  SearchState s = optimize(cfg);
  CHECK(s.best_objective >= theorem_rhs_for_product(
                                cfg.product_target * (1.0 + cfg.product_band)));
  CHECK(certify_candidate(s.best_density).margin >= 0.0);
}

TEST_CASE("dyadic layout refines toward the median region") {
  SearchConfig cfg = small_config();
  cfg.layout = EdgeLayout::dyadic;
  cfg.budget = 150;
  cfg.restarts = 1;
  SearchState s = optimize(cfg);
  auto e = s.best_density.edges();
  REQUIRE(e.size() == static_cast<std::size_t>(cfg.n_bins) + 1);
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] > e[i - 1]);
  // refinement: the last bin is narrower than the first
  CHECK(e[e.size() - 1] - e[e.size() - 2] < e[1] - e[0]);
  CHECK(s.best_objective >=
        theorem_rhs_for_product(cfg.product_target * (1 + cfg.product_band)));
}

TEST_CASE("conjecture objectives run and stay positive") {
  SearchConfig cfg = small_config();
  cfg.objective = Objective::min_conjecture_sup_mean;
  cfg.budget = 120;
  cfg.restarts = 1;
  cfg.grid_points = 128;
  SearchState s = optimize(cfg);
  CHECK(s.best_objective > 0.0);
  CHECK(std::isfinite(s.best_objective));
}

TEST_CASE("configuration validation") {
  SearchConfig cfg = small_config();
  cfg.product_target = 0.4;
  CHECK_THROWS_AS(optimize(cfg), InfeasibleConstraint);

  cfg = small_config();
  cfg.n_bins = 2;
  CHECK_THROWS_AS(optimize(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.budget = 10;
  CHECK_THROWS_AS(optimize(cfg), std::invalid_argument);
}

TEST_CASE("certify_candidate matches verify_theorem on the uniform") {
  auto u = builders::uniform();
  TheoremReport a = certify_candidate(u);
  TheoremReport b = verify_theorem(Density(u), 8192);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
  CHECK(a.margin == b.margin);
}
