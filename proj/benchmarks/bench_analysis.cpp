#include "macc/analysis.hpp"

#include <benchmark/benchmark.h>

using namespace macc;

static void BM_envelope(benchmark::State& state) {
  const auto curve = curve_secrecy_privacy(static_cast<int>(state.range(0)), 3, 100);
  for (auto _ : state) benchmark::DoNotOptimize(curve.envelope());
}
BENCHMARK(BM_envelope)->Arg(8)->Arg(12);

static void BM_lower_bound(benchmark::State& state) {
  const int C = static_cast<int>(state.range(0));
  Rat M(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower_bound(C, 2, 200, M));
    M = M + Rat(1, 3);
    if (M > Rat(300)) M = Rat(1);
  }
}
BENCHMARK(BM_lower_bound)->Arg(6)->Arg(10);

static void BM_gap_certificate(benchmark::State& state) {
  Rat M(13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gap_certificate(4, 2, 20, M));
    M = M + Rat(1, 7);
    if (M > Rat(60)) M = Rat(13);
  }
}
BENCHMARK(BM_gap_certificate);

static void BM_compare_same_access(benchmark::State& state) {
  const std::vector<int> r_list{1, 2, 3, 4};
  for (auto _ : state)
    benchmark::DoNotOptimize(compare_same_access(static_cast<int>(state.range(0)), 100, r_list));
}
BENCHMARK(BM_compare_same_access)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
