#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "minsum/density.hpp"
#include "minsum/detail/numeric.hpp"
#include "minsum/functionals.hpp"
#include "minsum/optimizer.hpp"
#include "minsum/sharpness.hpp"
#include "minsum/theorem.hpp"

namespace {

minsum::HistogramDensity wide_histogram(int bins) {
  std::mt19937_64 gen(17);
  std::vector<double> edges(bins + 1), heights(bins);
  for (int i = 0; i <= bins; ++i) edges[i] = 4.0 * i / bins;
  for (auto& h : heights) h = 0.05 + minsum::detail::u01(gen());
  return minsum::renormalize_bins(std::move(edges), std::move(heights));
}

void BM_DeltaAtHistogram(benchmark::State& state) {
  minsum::Density d(wide_histogram(static_cast<int>(state.range(0))));
  double med = d.median();
  double z = 0.4 * med;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minsum::delta_at(d, z));
    z = z < med ? z + 1e-6 : 0.4 * med;  // defeat value caching
  }
}
BENCHMARK(BM_DeltaAtHistogram)->Arg(8)->Arg(64)->Arg(512);

void BM_DeltaAtSharpFamily(benchmark::State& state) {
  minsum::Density d(minsum::sharp_family(static_cast<int>(state.range(0))));
  double z = 0.55;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minsum::delta_at(d, z));
    z = z < 0.9 ? z + 1e-6 : 0.55;
  }
}
BENCHMARK(BM_DeltaAtSharpFamily)->Arg(6)->Arg(14)->Arg(24);

void BM_DeltaProfile(benchmark::State& state) {
  minsum::Density d(wide_histogram(32));
  minsum::ProfileOptions opt;
  opt.grid_points = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(minsum::delta_profile(d, opt).sup_value);
}
BENCHMARK(BM_DeltaProfile)->Arg(256)->Arg(1024)->Arg(4096);

void BM_VerifyTheorem(benchmark::State& state) {
  minsum::Density d(minsum::sharp_family(12));
  for (auto _ : state)
    benchmark::DoNotOptimize(minsum::verify_theorem(d).margin);
}
BENCHMARK(BM_VerifyTheorem);

void BM_MonteCarlo(benchmark::State& state) {
  minsum::Density d(minsum::builders::uniform());
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        minsum::delta_monte_carlo(d, 1.0 / 3.0, 100000, seed++).estimate);
}
BENCHMARK(BM_MonteCarlo);

void BM_OptimizerStep(benchmark::State& state) {
  minsum::SearchConfig cfg;
  cfg.n_bins = 16;
  cfg.budget = 100;
  cfg.restarts = 1;
  cfg.grid_points = 256;
  cfg.seed = 3;
  for (auto _ : state)
    benchmark::DoNotOptimize(minsum::optimize(cfg).best_objective);
}
BENCHMARK(BM_OptimizerStep);

}  // namespace

BENCHMARK_MAIN();
