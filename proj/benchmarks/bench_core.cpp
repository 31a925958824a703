#include <benchmark/benchmark.h>

#include "cornered/strands.hpp"

using namespace cornered;

static void BM_nilcoxeter_homology(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nc_homology((int)state.range(0)));
}
BENCHMARK(BM_nilcoxeter_homology)->DenseRange(2, 6);

static void BM_strands_relations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(relation_suite_strands((int)state.range(0)));
}
BENCHMARK(BM_strands_relations)->DenseRange(2, 3);

static void BM_split_merge(benchmark::State& state) {
  auto basis = strands_basis((int)state.range(0));
  for (auto _ : state)
    for (auto& a : basis) benchmark::DoNotOptimize(merge(split(a, state.range(0) / 2)));
}
BENCHMARK(BM_split_merge)->DenseRange(2, 4);

BENCHMARK_MAIN();
