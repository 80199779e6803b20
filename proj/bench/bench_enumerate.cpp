// Serial vs parallel triple enumeration. Run with:
//   ./bench/bench_enumerate --benchmark_min_time=0.1

#include <benchmark/benchmark.h>

#include "ntdice/oracle.hpp"

static void BM_enumerate_serial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto sets = ntdice::enumerate_balanced_triples_serial(m);
    benchmark::DoNotOptimize(sets);
  }
}
BENCHMARK(BM_enumerate_serial)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_enumerate_parallel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto sets = ntdice::enumerate_balanced_triples(m);
    benchmark::DoNotOptimize(sets);
  }
}
BENCHMARK(BM_enumerate_parallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
