#include <benchmark/benchmark.h>

#include "pwl/grid.hpp"

namespace {

void BM_basin_grid(benchmark::State& state) {
  const pwl::ModelParams p{0.80, 2.50, 0.05};
  pwl::GridSpec2D spec;
  spec.nx = spec.ny = static_cast<int>(state.range(0));
  pwl::ClassifierConfig cfg;
  cfg.t_max = 20000;
  for (auto _ : state) {
    auto grid = pwl::compute_basin_grid(p, spec, cfg, 1);
    benchmark::DoNotOptimize(grid);
  }
}
BENCHMARK(BM_basin_grid)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_bifurcation_grid(benchmark::State& state) {
  pwl::BifurcationSpec spec;
  spec.nb = spec.nc = static_cast<int>(state.range(0));
  pwl::ClassifierConfig cfg;
  cfg.t_max = 20000;
  for (auto _ : state) {
    auto grid = pwl::compute_bifurcation_grid(spec, cfg, 1);
    benchmark::DoNotOptimize(grid);
  }
}
BENCHMARK(BM_bifurcation_grid)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
