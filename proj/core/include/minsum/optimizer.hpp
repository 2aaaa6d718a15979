#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "minsum/sharpness.hpp"
#include "minsum/theorem.hpp"

namespace minsum {

enum class Objective {
  min_sup_delta_at_fixed_product,  // (a) minimize sup_z delta at pinned med*sup
  min_conjecture_sup_med,          // (b) minimize the median-normalized sup
  min_conjecture_sup_mean,         // (c) minimize the mean-normalized sup
};

enum class EdgeLayout {
  uniform,  // equal-width bins on [0, 1]
  dyadic,   // bins refined toward 1, dyadic-band style
};

struct SearchConfig {
  int n_bins = 32;                  // in [4, 512]
  EdgeLayout layout = EdgeLayout::uniform;
  Objective objective = Objective::min_sup_delta_at_fixed_product;
  long budget = 2000;               // total objective evaluations, >= 100
  int restarts = 1;
  std::uint64_t seed = 0;
  double product_target = 0.6931471805599453;  // med*sup pin for objective (a)
  double product_band = 0.02;      // relative tolerance around the pin
  int grid_points = 1024;          // profile resolution during the search
  std::optional<HistogramDensity> initial;  // overrides the restart-0 start
};

struct RestartRecord {
  long first_eval = 0;  // global evaluation indices (inclusive range)
  long last_eval = 0;
  double best_objective = 0.0;
};

struct SearchState {
  HistogramDensity best_density;  // dilated so its median is 1
  double best_objective = 0.0;
  std::vector<std::pair<long, double>> history;  // (eval index, best so far)
  std::vector<RestartRecord> restarts;
  long evaluations = 0;
};

/// Coordinate-wise multiplicative perturbation search over histogram
/// heights on a fixed edge layout.  Proposals are renormalized, the
/// constraint product is checked against the band (objective (a)), and a
/// proposal is accepted only when the objective strictly improves.  The
/// step scale halves after 20 consecutive rejections; a restart ends when
/// it drops below 1e-4.  Deterministic for a fixed config and seed.
SearchState optimize(const SearchConfig& cfg);

/// Re-verifies a candidate with the theorem machinery at doubled grid
/// resolution.  The bound is proved, so a negative margin can only mean an
/// evaluation bug: that case raises EvaluationAlarm.
TheoremReport certify_candidate(const HistogramDensity& d,
                                int grid_points = 8192);

}  // namespace minsum
