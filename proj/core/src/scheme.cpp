#include "macc/scheme.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace macc {

namespace {

Subset complement(int C, const Subset& s) {
  Subset out;
  out.reserve(C - s.size());
  auto it = s.begin();
  for (int v = 1; v <= C; ++v) {
    if (it != s.end() && *it == v) {
      ++it;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const Subset& a, const Subset& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return false;
    (*ia < *ib) ? ++ia : ++ib;
  }
  return true;
}

void xor_into(SymbolVec& acc, const SymbolVec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= v[i];
}

// XOR of the shares with index tr of the files selected by a length-N bit mask
SymbolVec masked_share(const SchemeParams& par, const std::vector<FileShares>& shares,
                       const std::vector<std::uint8_t>& mask, std::uint64_t tr) {
  SymbolVec acc(par.sharing.s, 0);
  for (int i = 0; i < par.topo.N; ++i)
    if (mask[i]) xor_into(acc, shares[i].shares[tr]);
  return acc;
}

std::vector<std::uint8_t> unit_mask(int N, int demand) {
  std::vector<std::uint8_t> e(N, 0);
  e[demand - 1] = 1;
  return e;
}

void check_demand(const SchemeParams& par, int demand) {
  if (demand < 1 || demand > par.topo.N)
    throw std::invalid_argument("demand index must be in 1..N");
}

} // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::SecrecyPrivacy: return "secrecy_privacy";
    case Variant::SecrecyOnly: return "secrecy_only";
    case Variant::DedicatedRPKP: return "dedicated_rpkp";
  }
  return "?";
}

SchemeParams make_scheme(Topology topo, int t, Variant variant, int s) {
  if (topo.C < 1) throw std::invalid_argument("make_scheme: need at least one cache");
  if (topo.r < 1 || topo.r > topo.C)
    throw std::invalid_argument("make_scheme: r must be in 1..C");
  if (topo.N < 1) throw std::invalid_argument("make_scheme: need at least one file");
  if (t < 0 || t > topo.C - topo.r)
    throw std::invalid_argument("make_scheme: t must be in 0..C-r");
  if (variant == Variant::DedicatedRPKP && topo.r != 1)
    throw std::invalid_argument("make_scheme: the dedicated baseline has r = 1");

  SchemeParams par;
  par.topo = topo;
  par.t = t;
  par.variant = variant;
  par.corner = variant != Variant::SecrecyPrivacy && t == topo.C - topo.r;

  const std::uint64_t n = binom(topo.C, t);
  const std::uint64_t m = n - binom(topo.C - topo.r, t);
  if (m != effective_shares(topo.C, topo.r, t))
    throw std::logic_error("make_scheme: share accounting mismatch");
  par.sharing = make_sharing(n, m, s);
  return par;
}

SchemeParams rpkp_scheme(int K, int N, int t) {
  return make_scheme(Topology{K, 1, N}, t, Variant::DedicatedRPKP, 1);
}

Randomness draw_randomness(const SchemeParams& par, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Symbol mask = par.sharing.field.mask();
  const int s = par.sharing.s;
  auto sym = [&] { return static_cast<Symbol>(rng() & mask); };
  auto vec = [&] {
    SymbolVec v(s);
    for (auto& x : v) x = sym();
    return v;
  };

  Randomness rnd;
  rnd.file_keys.resize(par.topo.N);
  for (auto& keys : rnd.file_keys) {
    keys.resize(par.sharing.m);
    for (auto& k : keys) k = vec();
  }
  if (!par.corner) {
    rnd.tx_keys.resize(par.sset_count());
    for (auto& k : rnd.tx_keys) k = vec();
  }
  rnd.demand_masks.resize(par.user_count());
  for (auto& p : rnd.demand_masks) {
    p.resize(par.topo.N);
    for (auto& bit : p) bit = static_cast<std::uint8_t>(rng() & 1);
  }
  if (par.variant != Variant::SecrecyPrivacy)
    for (auto& p : rnd.demand_masks) std::fill(p.begin(), p.end(), 0);
  if (!par.corner && par.topo.r > 1) {
    const auto users = enumerate_subsets(par.topo.C, par.topo.r);
    const auto tsets = enumerate_subsets(par.topo.C, par.t);
    for (std::uint64_t gi = 0; gi < users.size(); ++gi)
      for (std::uint64_t ti = 0; ti < tsets.size(); ++ti) {
        if (!disjoint(users[gi], tsets[ti])) continue;
        auto& splits = rnd.free_splits[{gi, ti}];
        splits.resize(par.topo.r - 1);
        for (auto& sp : splits) sp = vec();
      }
  }
  return rnd;
}

Placement place(const SchemeParams& par, const std::vector<SymbolVec>& library,
                const Randomness& rnd) {
  if (library.size() != static_cast<std::size_t>(par.topo.N))
    throw std::invalid_argument("place: library must hold N files");
  if (rnd.file_keys.size() != library.size())
    throw std::invalid_argument("place: randomness does not match the library");

  Placement out;
  out.shares.reserve(library.size());
  for (int i = 0; i < par.topo.N; ++i)
    out.shares.push_back(
        encode_file(par.sharing, split_file(par.sharing, library[i]), rnd.file_keys[i]));

  const auto users = enumerate_subsets(par.topo.C, par.topo.r);
  const auto tsets = enumerate_subsets(par.topo.C, par.t);

  out.caches.resize(par.topo.C);
  for (int c = 1; c <= par.topo.C; ++c) out.caches[c - 1].cache_id = c;

  for (std::uint64_t ti = 0; ti < tsets.size(); ++ti)
    for (int c : tsets[ti])
      for (int i = 1; i <= par.topo.N; ++i)
        out.caches[c - 1].file_shares[{i, ti}] = out.shares[i - 1].shares[ti];

  if (par.corner) return out; // the corner caches no key material

  for (std::uint64_t gi = 0; gi < users.size(); ++gi) {
    const Subset& G = users[gi];
    for (std::uint64_t ti = 0; ti < tsets.size(); ++ti) {
      const Subset& T = tsets[ti];
      if (!disjoint(G, T)) continue;
      // group key for (G, T): demand-mask share XOR the covering transmission key
      SymbolVec group_key = masked_share(par, out.shares, rnd.demand_masks[gi], ti);
      xor_into(group_key, rnd.tx_keys[subset_rank(par.topo.C, set_union(G, T))]);
      // the largest cache of G gets the split completing the XOR to group_key
      SymbolVec last = group_key;
      if (par.topo.r > 1) {
        const auto& free = rnd.free_splits.at({gi, ti});
        for (int k = 0; k + 1 < par.topo.r; ++k) {
          out.caches[G[k] - 1].key_shares[{gi, ti}] = free[k];
          xor_into(last, free[k]);
        }
      }
      out.caches[G.back() - 1].key_shares[{gi, ti}] = std::move(last);
    }
  }
  return out;
}

Broadcast deliver(const SchemeParams& par, const Randomness& rnd,
                  const std::vector<FileShares>& shares, const DemandVector& demands) {
  if (demands.d.size() != par.user_count())
    throw std::invalid_argument("deliver: one demand per user required");
  for (int d : demands.d) check_demand(par, d);

  const auto users = enumerate_subsets(par.topo.C, par.topo.r);
  std::vector<std::vector<std::uint8_t>> masked(users.size());
  for (std::uint64_t gi = 0; gi < users.size(); ++gi) {
    masked[gi] = unit_mask(par.topo.N, demands.d[gi]);
    for (int i = 0; i < par.topo.N; ++i) masked[gi][i] ^= rnd.demand_masks[gi][i];
  }

  Broadcast bc;
  if (par.corner) {
    // single keyless payload: XOR over all users of the one share each misses
    SymbolVec acc(par.sharing.s, 0);
    for (std::uint64_t gi = 0; gi < users.size(); ++gi) {
      const std::uint64_t tr = subset_rank(par.topo.C, complement(par.topo.C, users[gi]));
      xor_into(acc, shares[demands.d[gi] - 1].shares[tr]);
    }
    bc.payloads.push_back(std::move(acc));
  } else {
    const auto ssets = enumerate_subsets(par.topo.C, par.t + par.topo.r);
    bc.payloads.reserve(ssets.size());
    for (std::uint64_t si = 0; si < ssets.size(); ++si) {
      const Subset& S = ssets[si];
      SymbolVec acc = rnd.tx_keys[si];
      for (const Subset& G : enumerate_subsets(static_cast<int>(S.size()), par.topo.r)) {
        Subset groupAbs(G.size());
        for (std::size_t k = 0; k < G.size(); ++k) groupAbs[k] = S[G[k] - 1];
        Subset rest;
        std::set_difference(S.begin(), S.end(), groupAbs.begin(), groupAbs.end(),
                            std::back_inserter(rest));
        const std::uint64_t gi = subset_rank(par.topo.C, groupAbs);
        xor_into(acc, masked_share(par, shares, masked[gi], subset_rank(par.topo.C, rest)));
      }
      bc.payloads.push_back(std::move(acc));
    }
  }
  if (par.variant == Variant::SecrecyPrivacy) bc.demand_masks = std::move(masked);
  return bc;
}

SymbolVec decode(const SchemeParams& par, const Subset& user, const Broadcast& bc,
                 const std::vector<CacheContents>& accessible, int demand,
                 const std::optional<DemandVector>& all_demands) {
  if (!is_valid_subset(par.topo.C, user) || user.size() != static_cast<std::size_t>(par.topo.r))
    throw std::invalid_argument("decode: user must be an r-subset of the caches");
  check_demand(par, demand);
  if (bc.payloads.size() != par.sset_count())
    throw std::invalid_argument("decode: broadcast payload count mismatch");
  for (const auto& pay : bc.payloads)
    if (pay.size() != static_cast<std::size_t>(par.sharing.s))
      throw std::invalid_argument("decode: payload length mismatch");
  if (accessible.size() != user.size())
    throw std::invalid_argument("decode: need exactly the user's caches");

  std::map<int, const CacheContents*> byId;
  for (const auto& cc : accessible) byId[cc.cache_id] = &cc;
  for (int c : user)
    if (!byId.count(c)) throw std::invalid_argument("decode: missing cache " + std::to_string(c));

  const std::uint64_t user_rank = subset_rank(par.topo.C, user);

  // masked demands: from the broadcast under SecrecyPrivacy, otherwise
  // rebuilt from the out-of-band demand vector
  std::vector<std::vector<std::uint8_t>> masks;
  if (par.variant == Variant::SecrecyPrivacy) {
    if (bc.demand_masks.size() != par.user_count())
      throw std::invalid_argument("decode: masked demand vectors missing");
    masks = bc.demand_masks;
  } else {
    if (!all_demands) throw std::invalid_argument("decode: this variant needs the demand vector");
    if (all_demands->d.size() != par.user_count())
      throw std::invalid_argument("decode: demand vector size mismatch");
    if (all_demands->d[user_rank] != demand)
      throw std::invalid_argument("decode: demand vector disagrees with own demand");
    masks.reserve(par.user_count());
    for (int d : all_demands->d) {
      check_demand(par, d);
      masks.push_back(unit_mask(par.topo.N, d));
    }
  }

  const auto tsets = enumerate_subsets(par.topo.C, par.t);
  auto cached_share = [&](int file, std::uint64_t tr) -> const SymbolVec& {
    for (int c : tsets[tr])
      if (auto it = byId.find(c); it != byId.end()) {
        auto hit = it->second->file_shares.find({file, tr});
        if (hit == it->second->file_shares.end())
          throw std::invalid_argument("decode: cache is missing a placed share");
        return hit->second;
      }
    throw std::invalid_argument("decode: share not reachable from this user");
  };
  auto masked_cached = [&](const std::vector<std::uint8_t>& mask, std::uint64_t tr) {
    SymbolVec acc(par.sharing.s, 0);
    for (int i = 1; i <= par.topo.N; ++i)
      if (mask[i - 1]) xor_into(acc, cached_share(i, tr));
    return acc;
  };

  // gather all n shares of the demanded file
  std::vector<SymbolVec> shares(par.tset_count());
  std::vector<bool> have(par.tset_count(), false);

  if (par.corner) {
    const std::uint64_t tr = subset_rank(par.topo.C, complement(par.topo.C, user));
    SymbolVec acc = bc.payloads[0];
    const auto users = enumerate_subsets(par.topo.C, par.topo.r);
    for (std::uint64_t gi = 0; gi < users.size(); ++gi) {
      if (gi == user_rank) continue;
      const std::uint64_t other = subset_rank(par.topo.C, complement(par.topo.C, users[gi]));
      xor_into(acc, masked_cached(masks[gi], other));
    }
    shares[tr] = std::move(acc);
    have[tr] = true;
  } else {
    const auto ssets = enumerate_subsets(par.topo.C, par.t + par.topo.r);
    for (std::uint64_t si = 0; si < ssets.size(); ++si) {
      const Subset& S = ssets[si];
      if (!std::includes(S.begin(), S.end(), user.begin(), user.end())) continue;
      Subset rest;
      std::set_difference(S.begin(), S.end(), user.begin(), user.end(), std::back_inserter(rest));
      const std::uint64_t tr = subset_rank(par.topo.C, rest);

      SymbolVec acc = bc.payloads[si];
      // strip this user's group key, rebuilt from its r additive splits
      for (int c : user) {
        auto hit = byId.at(c)->key_shares.find({user_rank, tr});
        if (hit == byId.at(c)->key_shares.end())
          throw std::invalid_argument("decode: cache is missing a key split");
        xor_into(acc, hit->second);
      }
      // strip every other covered user's masked share
      for (const Subset& G : enumerate_subsets(static_cast<int>(S.size()), par.topo.r)) {
        Subset groupAbs(G.size());
        for (std::size_t k = 0; k < G.size(); ++k) groupAbs[k] = S[G[k] - 1];
        const std::uint64_t gi = subset_rank(par.topo.C, groupAbs);
        if (gi == user_rank) continue;
        Subset gap;
        std::set_difference(S.begin(), S.end(), groupAbs.begin(), groupAbs.end(),
                            std::back_inserter(gap));
        xor_into(acc, masked_cached(masks[gi], subset_rank(par.topo.C, gap)));
      }
      shares[tr] = std::move(acc);
      have[tr] = true;
    }
  }

  for (std::uint64_t ti = 0; ti < par.tset_count(); ++ti) {
    if (have[ti]) continue;
    shares[ti] = cached_share(demand, ti);
    have[ti] = true;
  }

  std::vector<SymbolVec> subfiles = reconstruct(par.sharing, shares);
  SymbolVec file;
  file.reserve(par.sharing.file_symbols());
  for (const auto& sf : subfiles) file.insert(file.end(), sf.begin(), sf.end());
  return file;
}

} // namespace macc
