#include "minsum/optimizer.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "minsum/detail/numeric.hpp"
#include "minsum/errors.hpp"
#include "minsum/functionals.hpp"
#include "minsum/open_problem.hpp"

namespace minsum {

namespace {

std::vector<double> make_edges(const SearchConfig& cfg) {
  std::vector<double> edges;
  edges.reserve(static_cast<std::size_t>(cfg.n_bins) + 1);
  if (cfg.layout == EdgeLayout::uniform) {
    for (int i = 0; i <= cfg.n_bins; ++i)
      edges.push_back(static_cast<double>(i) / cfg.n_bins);
    return edges;
  }
  // dyadic: split [0,1] into bands [1-2^(1-k), 1-2^-k], equal bins per band
  int bands = std::max(2, static_cast<int>(std::lround(std::log2(cfg.n_bins))));
  int per = cfg.n_bins / bands;
  int extra = cfg.n_bins - per * bands;
  edges.push_back(0.0);
  for (int k = 1; k <= bands; ++k) {
    double lo = 1.0 - std::ldexp(1.0, 1 - k);
    double hi = k == bands ? 1.0 : 1.0 - std::ldexp(1.0, -k);
    int cells = per + (k == bands ? extra : 0);
    for (int c = 1; c <= cells; ++c)
      edges.push_back(lo + (hi - lo) * c / cells);
  }
  return edges;
}

struct Evaluation {
  double objective;
  double product;  // med * sup_norm (dilation invariant)
  bool feasible;
};

class ObjectiveFn {
 public:
  explicit ObjectiveFn(const SearchConfig& cfg) : cfg_(cfg) {}

  Evaluation operator()(const HistogramDensity& h) const {
    Density d(h);
    Evaluation ev;
    ev.product = d.median() * d.sup_norm();
    ev.feasible = true;
    if (cfg_.objective == Objective::min_sup_delta_at_fixed_product) {
      ev.feasible = std::abs(ev.product - cfg_.product_target) <=
                    cfg_.product_band * cfg_.product_target;
      ProfileOptions opt;
      opt.grid_points = cfg_.grid_points;
      ev.objective = delta_profile(d, opt).sup_value;
    } else {
      RatioProfile prof = conjecture_scan(d, cfg_.grid_points);
      ev.objective = cfg_.objective == Objective::min_conjecture_sup_med
                         ? prof.sup_weighted_med
                         : prof.sup_weighted_mean;
    }
    return ev;
  }

 private:
  const SearchConfig& cfg_;
};

}  // namespace

SearchState optimize(const SearchConfig& cfg) {
  if (cfg.n_bins < 4 || cfg.n_bins > 512)
    throw std::invalid_argument("optimize: n_bins must be in [4, 512]");
  if (cfg.budget < 100)
    throw std::invalid_argument("optimize: budget must be >= 100");
  if (cfg.restarts < 1)
    throw std::invalid_argument("optimize: restarts must be >= 1");
  if (cfg.objective == Objective::min_sup_delta_at_fixed_product &&
      cfg.product_target < 0.5)
    throw InfeasibleConstraint(
        "product_target " + std::to_string(cfg.product_target) +
        " is below the universal floor 1/2");

  const std::vector<double> layout_edges = make_edges(cfg);
  ObjectiveFn evaluate(cfg);
  std::mt19937_64 gen(cfg.seed);
  auto draw_u01 = [&]() { return detail::u01(gen()); };

  SearchState state{HistogramDensity({0.0, 1.0}, {1.0}),
                    std::numeric_limits<double>::infinity(),
                    {},
                    {},
                    0};
  bool have_best = false;

  long eval_index = 0;
  for (int restart = 0; restart < cfg.restarts && eval_index < cfg.budget;
       ++restart) {
    // restart 0: uniform heights (or the caller-provided start);
    // later restarts: independent exponential draws, renormalized
    std::vector<double> edges = layout_edges;
    std::vector<double> heights(static_cast<std::size_t>(cfg.n_bins), 1.0);
    if (restart == 0 && cfg.initial.has_value()) {
      edges.assign(cfg.initial->edges().begin(), cfg.initial->edges().end());
      heights.assign(cfg.initial->heights().begin(),
                     cfg.initial->heights().end());
    } else if (restart > 0) {
      for (auto& h : heights) h = -std::log(1.0 - draw_u01());
    }
    HistogramDensity current = renormalize_bins(edges, heights);
    heights.assign(current.heights().begin(), current.heights().end());
    Evaluation cur = evaluate(current);
    ++eval_index;

    RestartRecord record;
    record.first_eval = eval_index;

    double step = 0.4;
    int consecutive_rejects = 0;
    double best_obj = std::numeric_limits<double>::infinity();
    if (cur.feasible) {
      best_obj = cur.objective;
      state.history.emplace_back(eval_index, best_obj);
    }

    const std::size_t nb = heights.size();
    std::size_t coord = 0;
    while (eval_index < cfg.budget && step >= 1e-4) {
      std::vector<double> proposal = heights;
      double u = (2.0 * draw_u01() - 1.0) * step;
      proposal[coord % nb] *= std::exp(u);
      coord++;

      HistogramDensity cand = renormalize_bins(edges, proposal);
      Evaluation ev = evaluate(cand);
      ++eval_index;

      bool accept;
      if (!cur.feasible) {
        // feasibility phase: walk the constraint product toward the band
        accept = ev.feasible ||
                 std::abs(ev.product - cfg.product_target) <
                     std::abs(cur.product - cfg.product_target);
      } else {
        accept = ev.feasible && ev.objective < best_obj;
      }

      if (accept) {
        heights.assign(cand.heights().begin(), cand.heights().end());
        current = std::move(cand);
        cur = ev;
        consecutive_rejects = 0;
        if (cur.feasible) best_obj = std::min(best_obj, cur.objective);
      } else if (++consecutive_rejects >= 20) {
        step *= 0.5;
        consecutive_rejects = 0;
      }
      if (cur.feasible) state.history.emplace_back(eval_index, best_obj);
    }

    record.last_eval = eval_index;
    record.best_objective = best_obj;
    state.restarts.push_back(record);

    // deterministic merge: better objective wins, earlier restart breaks ties
    if (cur.feasible && (!have_best || best_obj < state.best_objective)) {
      state.best_objective = best_obj;
      state.best_density = current.dilated(current.median());
      have_best = true;
    }
  }

  state.evaluations = eval_index;
  if (!have_best)
    throw InfeasibleConstraint(
        "no feasible candidate found within the evaluation budget");
  return state;
}

TheoremReport certify_candidate(const HistogramDensity& d, int grid_points) {
  TheoremReport rep = verify_theorem(Density(d), grid_points);
  if (rep.margin < 0.0)
    throw EvaluationAlarm(
        "candidate margin " + std::to_string(rep.margin) +
        " is negative; the bound is proved, so this is an evaluation bug");
  return rep;
}

}  // namespace minsum
