#include <benchmark/benchmark.h>

#include "logcv/kernels.hpp"

using namespace logcv::kernels;

namespace {

IntSeq power_of(long a, int lambda) { return power_serial(IntSeq{1, 1, a}, lambda); }

void BM_convolve_serial(benchmark::State& st) {
  const IntSeq a = power_of(3, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(convolve_serial(a, a));
}

void BM_convolve_parallel(benchmark::State& st) {
  const IntSeq a = power_of(3, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(convolve_parallel(a, a));
}

void BM_power_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(power_serial(IntSeq{1, 1, 6}, static_cast<int>(st.range(0))));
}

void BM_power_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(power_parallel(IntSeq{1, 1, 6}, static_cast<int>(st.range(0))));
}

// L^8 of p^lambda: entries grow to 2^8 times the input size
void BM_depth_serial(benchmark::State& st) {
  const IntSeq a = power_of(6, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(depth_serial(a, 8));
}

void BM_depth_parallel(benchmark::State& st) {
  const IntSeq a = power_of(6, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(depth_parallel(a, 8));
}

}  // namespace

BENCHMARK(BM_convolve_serial)->Arg(50)->Arg(200);
BENCHMARK(BM_convolve_parallel)->Arg(50)->Arg(200);
BENCHMARK(BM_power_serial)->Arg(75)->Arg(300);
BENCHMARK(BM_power_parallel)->Arg(75)->Arg(300);
BENCHMARK(BM_depth_serial)->Arg(75)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_depth_parallel)->Arg(75)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
