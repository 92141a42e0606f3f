#include <benchmark/benchmark.h>

#include "pwl/map.hpp"

namespace {

const pwl::ModelParams kParams{0.80, 2.50, 0.05};

void BM_step(benchmark::State& state) {
  pwl::State s{0.13, 0.00};
  for (auto _ : state) {
    s = pwl::step_m(s, kParams);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_step);

void BM_iterate_1k(benchmark::State& state) {
  for (auto _ : state) {
    auto orbit = pwl::iterate(pwl::MapKind::M, {0.13, 0.00}, 1000, kParams);
    benchmark::DoNotOptimize(orbit);
  }
}
BENCHMARK(BM_iterate_1k);

void BM_closed_form(benchmark::State& state) {
  for (auto _ : state) {
    auto s = pwl::c_closed_form({-0.13, -0.17}, 0.8, 50);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_closed_form);

}  // namespace
