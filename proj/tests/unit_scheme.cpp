#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macc/scheme.hpp"

#include <random>
#include <stdexcept>

using namespace macc;

namespace {

std::vector<SymbolVec> random_library(const SchemeParams& par, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SymbolVec> lib(par.topo.N);
  for (auto& f : lib) {
    f.resize(par.sharing.file_symbols());
    for (auto& sym : f) sym = static_cast<Symbol>(rng() & par.sharing.field.mask());
  }
  return lib;
}

std::vector<CacheContents> accessible_caches(const Placement& pl, const Subset& user) {
  std::vector<CacheContents> acc;
  for (int c : user) acc.push_back(pl.caches[c - 1]);
  return acc;
}

} // namespace

TEST_CASE("make_scheme derives the sharing from the topology") {
  const SchemeParams par = make_scheme({4, 2, 6}, 1, Variant::SecrecyPrivacy, 1);
  CHECK(par.sharing.n == 4);
  CHECK(par.sharing.m == 2);
  CHECK(par.sharing.field.l == 3);
  CHECK_FALSE(par.corner);
  CHECK(par.user_count() == 6);
  CHECK(par.tset_count() == 4);
  CHECK(par.sset_count() == 4);

  // keyed top end under masking, keyless corner without it
  const SchemeParams sp_top = make_scheme({4, 2, 6}, 2, Variant::SecrecyPrivacy, 1);
  CHECK_FALSE(sp_top.corner);
  CHECK(sp_top.sharing.m == 5);
  const SchemeParams so_top = make_scheme({4, 2, 6}, 2, Variant::SecrecyOnly, 1);
  CHECK(so_top.corner);
  CHECK(so_top.sset_count() == 1);

  CHECK_THROWS_AS(make_scheme({4, 5, 2}, 0, Variant::SecrecyOnly, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_scheme({4, 0, 2}, 0, Variant::SecrecyOnly, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_scheme({4, 2, 0}, 0, Variant::SecrecyOnly, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_scheme({4, 2, 2}, -1, Variant::SecrecyOnly, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_scheme({4, 2, 2}, 3, Variant::SecrecyOnly, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_scheme({4, 2, 2}, 1, Variant::SecrecyOnly, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_scheme({4, 2, 2}, 1, Variant::DedicatedRPKP, 1), std::invalid_argument);

  const SchemeParams rpkp = rpkp_scheme(5, 7, 1);
  CHECK(rpkp.topo.C == 5);
  CHECK(rpkp.topo.r == 1);
  CHECK(rpkp.variant == Variant::DedicatedRPKP);
  CHECK_FALSE(rpkp.corner);
  CHECK(rpkp_scheme(5, 7, 4).corner);
}

TEST_CASE("placement stores the advertised share and key counts") {
  const SchemeParams par = make_scheme({4, 2, 6}, 1, Variant::SecrecyPrivacy, 1);
  const auto lib = random_library(par, 7);
  const Randomness rnd = draw_randomness(par, 7);
  const Placement pl = place(par, lib, rnd);

  REQUIRE(pl.caches.size() == 4);
  REQUIRE(pl.shares.size() == 6);
  for (int c = 1; c <= 4; ++c) {
    const auto& cache = pl.caches[c - 1];
    CHECK(cache.cache_id == c);
    CHECK(cache.file_shares.size() == 6); // one t-subset {c} per file
    CHECK(cache.key_shares.size() == 6);  // 3 groups containing c, 2 disjoint t-subsets each
    CHECK(cache.stored_symbols(par.sharing.s) == 12);
    // every stored share is the real share of that file
    for (const auto& [key, value] : cache.file_shares)
      CHECK(value == pl.shares[key.first - 1].shares[key.second]);
  }
}

TEST_CASE("every user decodes its demand across the keyed instance") {
  const SchemeParams par = make_scheme({4, 2, 6}, 1, Variant::SecrecyPrivacy, 1);
  const auto lib = random_library(par, 7);
  const Randomness rnd = draw_randomness(par, 7);
  const Placement pl = place(par, lib, rnd);
  const auto users = enumerate_subsets(4, 2);

  DemandVector dv{{1, 2, 3, 4, 5, 6}};
  Broadcast bc = deliver(par, rnd, pl.shares, dv);
  REQUIRE(bc.payloads.size() == 4);
  for (const auto& p : bc.payloads) CHECK(p.size() == 1);
  REQUIRE(bc.demand_masks.size() == 6);

  for (std::uint64_t u = 0; u < users.size(); ++u)
    CHECK(decode(par, users[u], bc, accessible_caches(pl, users[u]), dv.d[u]) ==
          lib[dv.d[u] - 1]);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    for (auto& d : dv.d) d = 1 + static_cast<int>(rng() % 6);
    bc = deliver(par, rnd, pl.shares, dv);
    for (std::uint64_t u = 0; u < users.size(); ++u)
      CHECK(decode(par, users[u], bc, accessible_caches(pl, users[u]), dv.d[u]) ==
            lib[dv.d[u] - 1]);
  }
}

TEST_CASE("masked demand vectors are the demand flipped by the drawn mask") {
  const SchemeParams par = make_scheme({4, 2, 3}, 1, Variant::SecrecyPrivacy, 2);
  const auto lib = random_library(par, 3);
  const Randomness rnd = draw_randomness(par, 3);
  const Placement pl = place(par, lib, rnd);
  const DemandVector dv{{3, 1, 2, 2, 1, 3}};
  const Broadcast bc = deliver(par, rnd, pl.shares, dv);
  REQUIRE(bc.demand_masks.size() == 6);
  for (std::uint64_t u = 0; u < 6; ++u)
    for (int i = 0; i < 3; ++i) {
      const std::uint8_t unit = i + 1 == dv.d[u] ? 1 : 0;
      CHECK(bc.demand_masks[u][i] == (unit ^ rnd.demand_masks[u][i]));
    }
}

TEST_CASE("keyless corner sends one unkeyed payload") {
  const SchemeParams par = make_scheme({3, 1, 2}, 2, Variant::SecrecyOnly, 1);
  REQUIRE(par.corner);
  const auto lib = random_library(par, 11);
  const Randomness rnd = draw_randomness(par, 11);
  CHECK(rnd.tx_keys.empty());
  const Placement pl = place(par, lib, rnd);
  for (const auto& cache : pl.caches) {
    CHECK(cache.key_shares.empty());
    CHECK(cache.file_shares.size() == 4); // both files, both t-subsets through the cache
  }
  const DemandVector dv{{2, 1, 2}};
  const Broadcast bc = deliver(par, rnd, pl.shares, dv);
  REQUIRE(bc.payloads.size() == 1);
  CHECK(bc.demand_masks.empty());
  const auto users = enumerate_subsets(3, 1);
  for (std::uint64_t u = 0; u < users.size(); ++u)
    CHECK(decode(par, users[u], bc, accessible_caches(pl, users[u]), dv.d[u], dv) ==
          lib[dv.d[u] - 1]);
}

TEST_CASE("decode rejects malformed inputs instead of guessing") {
  const SchemeParams par = make_scheme({4, 2, 4}, 1, Variant::SecrecyOnly, 1);
  const auto lib = random_library(par, 13);
  const Randomness rnd = draw_randomness(par, 13);
  const Placement pl = place(par, lib, rnd);
  const DemandVector dv{{1, 2, 3, 4, 1, 2}};
  const Broadcast bc = deliver(par, rnd, pl.shares, dv);
  const Subset user{1, 2};
  const auto acc = accessible_caches(pl, user);

  // demands travel out of band here, so they must be supplied
  CHECK_THROWS_AS(decode(par, user, bc, acc, 1), std::invalid_argument);
  CHECK(decode(par, user, bc, acc, 1, dv) == lib[0]);

  DemandVector wrong = dv;
  wrong.d[0] = 2;
  CHECK_THROWS_AS(decode(par, user, bc, acc, 1, wrong), std::invalid_argument);

  Broadcast chopped = bc;
  chopped.payloads.pop_back();
  CHECK_THROWS_AS(decode(par, user, chopped, acc, 1, dv), std::invalid_argument);

  Broadcast stretched = bc;
  stretched.payloads[0].push_back(0);
  CHECK_THROWS_AS(decode(par, user, stretched, acc, 1, dv), std::invalid_argument);

  CHECK_THROWS_AS(decode(par, user, bc, {pl.caches[0]}, 1, dv), std::invalid_argument);
  CHECK_THROWS_AS(decode(par, user, bc, accessible_caches(pl, {1, 3}), 1, dv),
                  std::invalid_argument);
  CHECK_THROWS_AS(decode(par, {1, 2, 3}, bc, acc, 1, dv), std::invalid_argument);
  CHECK_THROWS_AS(decode(par, user, bc, acc, 5, dv), std::invalid_argument);
}

TEST_CASE("a flipped payload symbol decodes to a different file") {
  const SchemeParams par = make_scheme({4, 2, 4}, 1, Variant::SecrecyPrivacy, 1);
  const auto lib = random_library(par, 17);
  const Randomness rnd = draw_randomness(par, 17);
  const Placement pl = place(par, lib, rnd);
  const DemandVector dv{{1, 2, 3, 4, 1, 2}};
  Broadcast bc = deliver(par, rnd, pl.shares, dv);
  const Subset user{1, 2};
  // this payload covers user {1,2}; flipping it perturbs the recovered share
  bc.payloads[0][0] ^= 1;
  CHECK(decode(par, user, bc, accessible_caches(pl, user), 1) != lib[0]);
}

TEST_CASE("randomness is a pure function of the seed") {
  const SchemeParams par = make_scheme({4, 2, 3}, 1, Variant::SecrecyPrivacy, 2);
  const Randomness a = draw_randomness(par, 9);
  const Randomness b = draw_randomness(par, 9);
  CHECK(a.file_keys == b.file_keys);
  CHECK(a.tx_keys == b.tx_keys);
  CHECK(a.demand_masks == b.demand_masks);
  CHECK(a.free_splits == b.free_splits);
  const Randomness c = draw_randomness(par, 10);
  CHECK(a.file_keys != c.file_keys);
}

TEST_CASE("variants share one randomness stream per seed") {
  const SchemeParams sp = make_scheme({4, 2, 3}, 1, Variant::SecrecyPrivacy, 2);
  const SchemeParams so = make_scheme({4, 2, 3}, 1, Variant::SecrecyOnly, 2);
  const Randomness a = draw_randomness(sp, 21);
  const Randomness b = draw_randomness(so, 21);
  CHECK(a.file_keys == b.file_keys);
  CHECK(a.tx_keys == b.tx_keys);
  CHECK(a.free_splits == b.free_splits);
  bool sp_mask_set = false;
  for (const auto& mask : a.demand_masks)
    for (auto bit : mask) sp_mask_set |= bit != 0;
  CHECK(sp_mask_set);
  for (const auto& mask : b.demand_masks)
    for (auto bit : mask) CHECK(bit == 0);
}
