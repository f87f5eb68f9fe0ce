#include <benchmark/benchmark.h>

#include "quandles/enumerate.hpp"

using namespace quandles::enumeration;

static void BM_ConnectedQuandles(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(connected_quandles(n));
}
BENCHMARK(BM_ConnectedQuandles)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);

static void BM_BruteForceOracle5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(5));
}
BENCHMARK(BM_BruteForceOracle5)->Unit(benchmark::kMillisecond);
