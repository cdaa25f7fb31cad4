#include <benchmark/benchmark.h>

#include <omp.h>

#include "compid/census.hpp"

namespace {

using compid::census_row;
using compid::census_row_reference;

// Args: n, m.
void BM_CensusSerialReference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_row_reference(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  }
}

// Args: n, m, threads.
void BM_CensusParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(2)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_row(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  }
  state.counters["threads"] = static_cast<double>(state.range(2));
}

void BM_ReparamSweep(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(2)));
  const auto row = census_row(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(compid::sweep_reparametrizations(row, 2));
}

void thread_counts(benchmark::internal::Benchmark* b) {
  const int max = omp_get_num_procs();
  for (auto [n, m] : {std::pair{4, 6}, {5, 6}, {5, 7}}) {
    for (int t = 1; t <= max; t *= 2) b->Args({n, m, t});
    if ((max & (max - 1)) != 0) b->Args({n, m, max});
  }
}

}  // namespace

BENCHMARK(BM_CensusSerialReference)->Args({4, 6})->Args({5, 6})->Args({5, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Apply(thread_counts)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ReparamSweep)->Args({4, 6, 1})->Args({5, 7, 1})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
