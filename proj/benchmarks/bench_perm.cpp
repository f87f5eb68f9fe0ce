#include <benchmark/benchmark.h>

#include "quandles/casecheck.hpp"
#include "quandles/perm.hpp"
#include "quandles/perm_group.hpp"
#include "quandles/standard_groups.hpp"

using namespace quandles;

static void BM_Compose(benchmark::State& state) {
  Perm a = perm_from_cycles(16, {{0, 1, 2, 3, 4, 5, 6, 7}});
  Perm b = perm_from_cycles(16, {{8, 9, 10, 11}, {0, 12}});
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Compose);

static void BM_SchreierSimsS8(benchmark::State& state) {
  for (auto _ : state) {
    PermGroup g = symmetric_group(8);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsS8);

static void BM_PointStabilizer(benchmark::State& state) {
  PermGroup g = casecheck::psl2_projective_action(13);
  for (auto _ : state) benchmark::DoNotOptimize(g.point_stabilizer(0).order());
}
BENCHMARK(BM_PointStabilizer);

static void BM_ConjugacyClass(benchmark::State& state) {
  PermGroup s7 = symmetric_group(7);
  Perm x = perm_from_cycles(7, {{0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(s7.conjugacy_class(x));
}
BENCHMARK(BM_ConjugacyClass);
