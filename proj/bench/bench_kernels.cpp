// Serial reference kernels against their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=Trace

#include <benchmark/benchmark.h>

#include <cmath>

#include "haarmoments/haar_mc.hpp"
#include "haarmoments/moments.hpp"
#include "haarmoments/serial.hpp"
#include "haarmoments/tableaux.hpp"

using namespace haarmoments;

namespace {

double corner_trace_fourth(const ComplexMatrix& u) {
  return std::pow(std::norm(u.topLeftCorner(2, 2).trace()), 2);
}

void BM_TraceSerial(benchmark::State& state) {
  const SamplingConfig config{state.range(0), 1, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::estimate_statistic(4, config, corner_trace_fourth));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TraceParallel(benchmark::State& state) {
  const SamplingConfig config{state.range(0), 1, static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_statistic(4, config, corner_trace_fourth));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SecularParallel(benchmark::State& state) {
  const SamplingConfig config{state.range(0), 1, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(estimate_secular_moment(4, 2, 2, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LisSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::count_bounded_lis_permutations(static_cast<int>(state.range(0)), 3));
  }
}

void BM_LisParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_bounded_lis_permutations(static_cast<int>(state.range(0)), 3));
  }
}

void BM_SchurSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_truncation_moment(12, 6, n));
}

void BM_SubgroupRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_truncation_moment_via_subgroups(6, 4, n));
}

}  // namespace

BENCHMARK(BM_TraceSerial)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceParallel)->Args({1 << 16, 1})->Args({1 << 16, 2})->Args({1 << 16, 4})
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SecularParallel)->Args({1 << 14, 1})->Args({1 << 14, 4})
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LisSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LisParallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SchurSum)->Arg(6)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SubgroupRoute)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
