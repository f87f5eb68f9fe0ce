#include <benchmark/benchmark.h>

#include "quandles/quandle.hpp"
#include "quandles/quandle_iso.hpp"
#include "quandles/standard_groups.hpp"

using namespace quandles;

static void BM_ValidateOrder10(benchmark::State& state) {
  Quandle q =
      conjugation_class_quandle(symmetric_group(5), perm_from_cycles(5, {{0, 1}})).quandle;
  auto flat = q.flat_table();
  for (auto _ : state) benchmark::DoNotOptimize(validate_flat(q.order(), flat));
}
BENCHMARK(BM_ValidateOrder10);

static void BM_IsSimpleOrder10(benchmark::State& state) {
  Quandle q =
      conjugation_class_quandle(symmetric_group(5), perm_from_cycles(5, {{0, 1}})).quandle;
  for (auto _ : state) benchmark::DoNotOptimize(is_simple(q));
}
BENCHMARK(BM_IsSimpleOrder10);

static void BM_CanonicalFormOrder10(benchmark::State& state) {
  Quandle q =
      conjugation_class_quandle(symmetric_group(5), perm_from_cycles(5, {{0, 1}})).quandle;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(q));
}
BENCHMARK(BM_CanonicalFormOrder10);

static void BM_CanonicalFormOrder12(benchmark::State& state) {
  Quandle q =
      conjugation_class_quandle(alternating_group(5), perm_from_cycles(5, {{0, 1, 2, 3, 4}}))
          .quandle;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(q));
}
BENCHMARK(BM_CanonicalFormOrder12);
