#include <benchmark/benchmark.h>

#include "pwl/rng.hpp"
#include "pwl/stochastic.hpp"

namespace {

void BM_normal_stream(benchmark::State& state) {
  pwl::NormalStream stream(42);
  for (auto _ : state) benchmark::DoNotOptimize(stream.next());
}
BENCHMARK(BM_normal_stream);

void BM_stochastic_run(benchmark::State& state) {
  const pwl::ModelParams p{0.80, 0.75, 0.05};
  pwl::ShockConfig sc;
  sc.sigma_d = 0.005;
  sc.t_max = state.range(0);
  for (auto _ : state) {
    auto run = pwl::simulate_stochastic(p, sc);
    benchmark::DoNotOptimize(run);
  }
}
BENCHMARK(BM_stochastic_run)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
