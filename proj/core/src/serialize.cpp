#include "minsum/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "minsum/errors.hpp"

namespace minsum {

using nlohmann::json;

std::string format_17g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string histogram_to_json(const HistogramDensity& d) {
  json j;
  j["edges"] = std::vector<double>(d.edges().begin(), d.edges().end());
  j["heights"] = std::vector<double>(d.heights().begin(), d.heights().end());
  return j.dump();
}

HistogramDensity histogram_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object() || !j.contains("edges") || !j.contains("heights"))
    throw BadShape("histogram JSON needs \"edges\" and \"heights\" arrays");
  return histogram_from_bins(j["edges"].get<std::vector<double>>(),
                             j["heights"].get<std::vector<double>>());
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadShape("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

HistogramDensity histogram_from_json_file(const std::string& path) {
  return histogram_from_json(slurp(path));
}

HistogramDensity mixture_from_json_file(const std::string& path) {
  json j = json::parse(slurp(path));
  if (!j.is_object() || !j.contains("weights") || !j.contains("components"))
    throw BadShape("mixture JSON needs \"weights\" and \"components\"");
  auto weights = j["weights"].get<std::vector<double>>();
  const auto& comps = j["components"];
  if (!comps.is_array() || comps.size() != weights.size() || comps.empty())
    throw BadShape("mixture needs one weight per component");

  std::vector<HistogramDensity> parts;
  parts.reserve(comps.size());
  std::vector<double> edges;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (weights[i] < 0.0) throw NegativeHeight("mixture weight");
    parts.push_back(histogram_from_bins(
        comps[i].at("edges").get<std::vector<double>>(),
        comps[i].at("heights").get<std::vector<double>>()));
    edges.insert(edges.end(), parts.back().edges().begin(),
                 parts.back().edges().end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<double> heights(edges.size() - 1, 0.0);
  for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
    double mid = 0.5 * (edges[b] + edges[b + 1]);
    for (std::size_t i = 0; i < parts.size(); ++i)
      heights[b] += weights[i] * parts[i].pdf(mid);
  }
  // weights must already sum to 1: same no-silent-renormalize policy as
  // histogram_from_bins, so the constructor's mass check applies
  return HistogramDensity(std::move(edges), std::move(heights));
}

void profile_to_csv(const DeltaProfile& p, std::ostream& out) {
  out << "z,delta\n";
  for (std::size_t i = 0; i < p.z_grid.size(); ++i)
    out << format_17g(p.z_grid[i]) << ',' << format_17g(p.delta_values[i])
        << '\n';
}

std::string profile_to_json(const DeltaProfile& p) {
  json j;
  j["z_grid"] = p.z_grid;
  j["delta_values"] = p.delta_values;
  j["sup_value"] = p.sup_value;
  j["arg_sup"] = p.arg_sup;
  j["range_end"] = p.range_end;
  return j.dump();
}

std::string report_to_json(const TheoremReport& r) {
  json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["med_supnorm_product"] = r.med_supnorm_product;
  j["dyadic_band_masses"] = r.dyadic_band_masses;
  j["ell_star"] = r.ell_star;
  return j.dump();
}

void sharpness_to_csv(std::span<const SharpnessRow> rows, std::ostream& out) {
  out << "n,sup_delta,arg_sup,median,sup_norm,log2_product,n_times_sup_delta\n";
  for (const auto& r : rows)
    out << r.n << ',' << format_17g(r.sup_delta) << ',' << format_17g(r.arg_sup)
        << ',' << format_17g(r.median) << ',' << format_17g(r.sup_norm) << ','
        << format_17g(r.log2_product) << ','
        << format_17g(r.n_times_sup_delta) << '\n';
}

std::string sharpness_to_json(std::span<const SharpnessRow> rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["n"] = r.n;
    j["sup_delta"] = r.sup_delta;
    j["arg_sup"] = r.arg_sup;
    j["median"] = r.median;
    j["sup_norm"] = r.sup_norm;
    j["log2_product"] = r.log2_product;
    j["product_with_log"] = r.product_with_log;
    j["n_times_sup_delta"] = r.n_times_sup_delta;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

void ratio_profile_to_csv(const RatioProfile& p, std::ostream& out) {
  out << "z,ratio,med_normalized,mean_normalized\n";
  for (std::size_t i = 0; i < p.z_grid.size(); ++i) {
    if (!p.defined[i]) continue;  // excluded: survival(z) = 0
    out << format_17g(p.z_grid[i]) << ',' << format_17g(p.ratio_values[i])
        << ',' << format_17g(p.weighted_med[i]) << ','
        << format_17g(p.weighted_mean[i]) << '\n';
  }
}

std::string ratio_profile_to_json(const RatioProfile& p) {
  json j;
  json rows = json::array();
  for (std::size_t i = 0; i < p.z_grid.size(); ++i) {
    if (!p.defined[i]) continue;
    rows.push_back({{"z", p.z_grid[i]},
                    {"ratio", p.ratio_values[i]},
                    {"med_normalized", p.weighted_med[i]},
                    {"mean_normalized", p.weighted_mean[i]}});
  }
  j["rows"] = std::move(rows);
  j["sup_weighted_med"] = p.sup_weighted_med;
  j["arg_sup_med"] = p.arg_sup_med;
  j["sup_weighted_mean"] = p.sup_weighted_mean;
  j["arg_sup_mean"] = p.arg_sup_mean;
  j["inf_weighted_med"] = p.inf_weighted_med;
  j["inf_weighted_mean"] = p.inf_weighted_mean;
  j["truncated"] = p.truncated;
  return j.dump();
}

void history_to_csv(const SearchState& s, std::ostream& out) {
  out << "eval,objective\n";
  for (const auto& [idx, obj] : s.history)
    out << idx << ',' << format_17g(obj) << '\n';
}

std::string search_state_to_json(const SearchState& s) {
  json j;
  j["best_density"] = json::parse(histogram_to_json(s.best_density));
  j["best_objective"] = s.best_objective;
  j["evaluations"] = s.evaluations;
  json restarts = json::array();
  for (const auto& r : s.restarts)
    restarts.push_back({{"first_eval", r.first_eval},
                        {"last_eval", r.last_eval},
                        {"best_objective", r.best_objective}});
  j["restarts"] = std::move(restarts);
  return j.dump();
}

SearchConfig search_config_from_json(const std::string& text) {
  json j = json::parse(text);
  SearchConfig cfg;
  if (j.contains("n_bins")) cfg.n_bins = j["n_bins"].get<int>();
  if (j.contains("layout")) {
    std::string s = j["layout"].get<std::string>();
    if (s == "uniform")
      cfg.layout = EdgeLayout::uniform;
    else if (s == "dyadic")
      cfg.layout = EdgeLayout::dyadic;
    else
      throw BadShape("unknown layout: " + s);
  }
  if (j.contains("objective")) {
    std::string s = j["objective"].get<std::string>();
    if (s == "min_sup_delta_at_fixed_product")
      cfg.objective = Objective::min_sup_delta_at_fixed_product;
    else if (s == "min_conjecture_sup_med")
      cfg.objective = Objective::min_conjecture_sup_med;
    else if (s == "min_conjecture_sup_mean")
      cfg.objective = Objective::min_conjecture_sup_mean;
    else
      throw BadShape("unknown objective: " + s);
  }
  if (j.contains("budget")) cfg.budget = j["budget"].get<long>();
  if (j.contains("restarts")) cfg.restarts = j["restarts"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("product_target"))
    cfg.product_target = j["product_target"].get<double>();
  if (j.contains("product_band"))
    cfg.product_band = j["product_band"].get<double>();
  if (j.contains("grid_points")) cfg.grid_points = j["grid_points"].get<int>();
  return cfg;
}

}  // namespace minsum
