#include "macc/gf.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace macc;

namespace {

std::vector<Symbol> random_symbols(const FieldSpec& f, std::size_t count) {
  std::mt19937_64 rng(42);
  std::vector<Symbol> v(count);
  for (auto& s : v) s = static_cast<Symbol>(rng() & f.mask()) | 1u; // keep nonzero
  return v;
}

} // namespace

static void BM_gf_mul(benchmark::State& state) {
  const FieldSpec f = field_with_degree(static_cast<int>(state.range(0)));
  const auto xs = random_symbols(f, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf_mul(f, xs[i & 1023], xs[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_gf_mul)->Arg(3)->Arg(8)->Arg(16);

static void BM_gf_inv(benchmark::State& state) {
  const FieldSpec f = field_with_degree(static_cast<int>(state.range(0)));
  const auto xs = random_symbols(f, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf_inv(f, xs[i & 1023]));
    ++i;
  }
}
BENCHMARK(BM_gf_inv)->Arg(8)->Arg(16);

static void BM_cauchy_matrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FieldSpec f = field_for(static_cast<std::uint64_t>(n));
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_matrix(f, n, n));
}
BENCHMARK(BM_cauchy_matrix)->Arg(16)->Arg(64)->Arg(256);

static void BM_matrix_rank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FieldSpec f = field_for(static_cast<std::uint64_t>(n));
  const FieldMatrix m = cauchy_matrix(f, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(f, m));
}
BENCHMARK(BM_matrix_rank)->Arg(16)->Arg(64);

static void BM_matrix_solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FieldSpec f = field_for(static_cast<std::uint64_t>(n));
  const FieldMatrix A = cauchy_matrix(f, n, n);
  FieldMatrix B(n, 1);
  const auto xs = random_symbols(f, static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) B.at(i, 0) = xs[i];
  for (auto _ : state) benchmark::DoNotOptimize(matrix_solve(f, A, B));
}
BENCHMARK(BM_matrix_solve)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
