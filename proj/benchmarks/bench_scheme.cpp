#include "macc/scheme.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace macc;

namespace {

// (C, r, t) picked per range index: a desk-size and a wider topology
SchemeParams scheme_for(int which) {
  if (which == 0) return make_scheme({6, 2, 8}, 2, Variant::SecrecyPrivacy, 1);
  return make_scheme({8, 2, 8}, 3, Variant::SecrecyPrivacy, 1);
}

std::vector<SymbolVec> seeded_library(const SchemeParams& par, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SymbolVec> lib(par.topo.N);
  for (auto& f : lib) {
    f.resize(par.sharing.file_symbols());
    for (auto& sym : f) sym = static_cast<Symbol>(rng() & par.sharing.field.mask());
  }
  return lib;
}

DemandVector seeded_demands(const SchemeParams& par, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DemandVector dv;
  dv.d.resize(par.user_count());
  for (auto& d : dv.d) d = 1 + static_cast<int>(rng() % par.topo.N);
  return dv;
}

} // namespace

static void BM_draw_randomness(benchmark::State& state) {
  const SchemeParams par = scheme_for(static_cast<int>(state.range(0)));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(draw_randomness(par, seed++));
}
BENCHMARK(BM_draw_randomness)->Arg(0)->Arg(1);

static void BM_place(benchmark::State& state) {
  const SchemeParams par = scheme_for(static_cast<int>(state.range(0)));
  const auto lib = seeded_library(par, 3);
  const Randomness rnd = draw_randomness(par, 3);
  for (auto _ : state) benchmark::DoNotOptimize(place(par, lib, rnd));
}
BENCHMARK(BM_place)->Arg(0)->Arg(1);

static void BM_deliver(benchmark::State& state) {
  const SchemeParams par = scheme_for(static_cast<int>(state.range(0)));
  const auto lib = seeded_library(par, 3);
  const Randomness rnd = draw_randomness(par, 3);
  const Placement pl = place(par, lib, rnd);
  const DemandVector dv = seeded_demands(par, 5);
  for (auto _ : state) benchmark::DoNotOptimize(deliver(par, rnd, pl.shares, dv));
}
BENCHMARK(BM_deliver)->Arg(0)->Arg(1);

static void BM_decode_one_user(benchmark::State& state) {
  const SchemeParams par = scheme_for(static_cast<int>(state.range(0)));
  const auto lib = seeded_library(par, 3);
  const Randomness rnd = draw_randomness(par, 3);
  const Placement pl = place(par, lib, rnd);
  const DemandVector dv = seeded_demands(par, 5);
  const Broadcast bc = deliver(par, rnd, pl.shares, dv);
  const Subset user = enumerate_subsets(par.topo.C, par.topo.r).front();
  std::vector<CacheContents> acc;
  for (int c : user) acc.push_back(pl.caches[c - 1]);
  for (auto _ : state) benchmark::DoNotOptimize(decode(par, user, bc, acc, dv.d[0]));
}
BENCHMARK(BM_decode_one_user)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
