#pragma once
// Coded caching over the combinatorial multi-access topology: C caches,
// one user per r-subset of caches, shares of every file indexed by the
// t-subsets. Placement fills each cache with the shares its index touches
// plus one additive key split per user group it belongs to; delivery emits
// one keyed payload per (t+r)-subset; every user peels its payloads down to
// the shares it cannot reach and reconstructs its demanded file.

#include "macc/combinatorics.hpp"
#include "macc/sharing.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace macc {

enum class Variant {
  SecrecyPrivacy, // keyed payloads plus masked demand vectors
  SecrecyOnly,    // keyed payloads, demands conveyed out of band
  DedicatedRPKP,  // dedicated-cache baseline; behaves as SecrecyOnly with r = 1
};

const char* variant_name(Variant v);

struct Topology {
  int C = 0; // caches
  int r = 0; // caches per user
  int N = 0; // files

  std::uint64_t users() const { return binom(C, r); }
};

struct SchemeParams {
  Topology topo;
  int t = 0;            // shares are indexed by t-subsets of the caches
  Variant variant = Variant::SecrecyPrivacy;
  SharingParams sharing;
  bool corner = false;  // keyless single-payload regime at t = C - r

  std::uint64_t user_count() const { return topo.users(); }
  std::uint64_t tset_count() const { return binom(topo.C, t); }
  std::uint64_t sset_count() const { return corner ? 1 : binom(topo.C, t + topo.r); }
};

/// Validates the topology and builds the sharing for (C, r, t).
/// The keyless corner applies to SecrecyOnly/DedicatedRPKP at t = C - r.
SchemeParams make_scheme(Topology topo, int t, Variant variant, int s);

/// Dedicated-cache baseline with K caches, one cache per user.
SchemeParams rpkp_scheme(int K, int N, int t);

/// All server-side random material. Every block is drawn uniformly; the
/// per-user demand masks are drawn and then zeroed outside SecrecyPrivacy so
/// the remaining stream does not shift between variants under one seed.
struct Randomness {
  // encryption keys: per file, m key blocks of s symbols
  std::vector<std::vector<SymbolVec>> file_keys;
  // transmission keys: per (t+r)-subset rank, s symbols (empty in the corner)
  std::vector<SymbolVec> tx_keys;
  // demand masks: per user rank, N bits
  std::vector<std::vector<std::uint8_t>> demand_masks;
  // free key splits: per (user rank, t-subset rank) with disjoint supports,
  // the splits handed to the r - 1 smallest caches of the user group
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<SymbolVec>> free_splits;
};

Randomness draw_randomness(const SchemeParams& par, std::uint64_t seed);

/// What one cache stores. Shares are keyed by (file index 1..N, t-subset
/// rank); key splits by (user rank, t-subset rank). A share held by several
/// caches is the same value in each.
struct CacheContents {
  int cache_id = 0; // 1-based
  std::map<std::pair<int, std::uint64_t>, SymbolVec> file_shares;
  std::map<std::pair<std::uint64_t, std::uint64_t>, SymbolVec> key_shares;

  std::uint64_t stored_symbols(int s) const {
    return (file_shares.size() + key_shares.size()) * static_cast<std::uint64_t>(s);
  }
};

struct Placement {
  std::vector<FileShares> shares;     // per file, all n shares
  std::vector<CacheContents> caches;  // size C
};

/// Demanded file index per user rank, values 1..N.
struct DemandVector {
  std::vector<int> d;
};

struct Broadcast {
  std::vector<SymbolVec> payloads;                    // one per (t+r)-subset rank
  std::vector<std::vector<std::uint8_t>> demand_masks; // masked demands, SecrecyPrivacy only
};

/// Encode every library file and fill all C caches.
/// library holds N files of (n - m) * s symbols each.
Placement place(const SchemeParams& par, const std::vector<SymbolVec>& library,
                const Randomness& rnd);

/// One payload per (t+r)-subset: the subset's transmission key XORed with a
/// masked share of every covered user's demand. The corner sends a single
/// unkeyed payload. Masked demand vectors ride along only under SecrecyPrivacy.
Broadcast deliver(const SchemeParams& par, const Randomness& rnd,
                  const std::vector<FileShares>& shares, const DemandVector& demands);

/// Recover the file demanded by `user` from the broadcast plus the r
/// accessible caches. Outside SecrecyPrivacy the full demand vector must be
/// supplied (it travels out of band there). Malformed broadcasts are
/// rejected, never decoded into a wrong file silently.
SymbolVec decode(const SchemeParams& par, const Subset& user, const Broadcast& bc,
                 const std::vector<CacheContents>& accessible, int demand,
                 const std::optional<DemandVector>& all_demands = std::nullopt);

} // namespace macc
