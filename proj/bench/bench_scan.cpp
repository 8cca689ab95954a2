#include <benchmark/benchmark.h>

#include "tamari/scan.hpp"

using namespace tamari;

static void BM_EnumerateSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_intervals(n));
}
BENCHMARK(BM_EnumerateSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_EnumerateParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_intervals_parallel(n));
}
BENCHMARK(BM_EnumerateParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

// The tally classifies every interval and cross-checks each bijection, so it
// dominates the cost of `verify`.
static void BM_TallySerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tally_serial(n));
}
BENCHMARK(BM_TallySerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_TallyParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tally_parallel(n));
}
BENCHMARK(BM_TallyParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
