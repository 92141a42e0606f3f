#include <benchmark/benchmark.h>

#include "pwl/classify.hpp"

namespace {

const pwl::ModelParams kParams{0.80, 2.50, 0.05};

void BM_classify_fixed_point(benchmark::State& state) {
  pwl::ClassifierConfig cfg;
  for (auto _ : state) {
    auto c = pwl::classify_trajectory({-0.12, -0.16}, kParams, cfg);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_classify_fixed_point);

// full-budget path: the orbit never converges, so cost scales with t_max
void BM_classify_wqa(benchmark::State& state) {
  pwl::ClassifierConfig cfg;
  cfg.t_max = state.range(0);
  cfg.transient = 100;
  for (auto _ : state) {
    auto c = pwl::classify_trajectory({0.13, 0.00}, kParams, cfg);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_classify_wqa)->Arg(10000)->Arg(100000);

}  // namespace
