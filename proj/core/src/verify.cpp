#include "macc/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace macc {

namespace {

std::string describe(const SchemeParams& par) {
  std::ostringstream os;
  os << variant_name(par.variant) << " C=" << par.topo.C << " r=" << par.topo.r
     << " N=" << par.topo.N << " t=" << par.t << " s=" << par.sharing.s;
  if (par.corner) os << " corner";
  return os.str();
}

std::string describe_user(const Subset& user) {
  std::string out = "{";
  for (std::size_t i = 0; i < user.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(user[i]);
  }
  return out + "}";
}

// checked product with a cap sentinel
bool mul_capped(std::uint64_t& acc, std::uint64_t f, std::uint64_t cap) {
  if (f != 0 && acc > cap / f) return false;
  acc *= f;
  return true;
}

struct RandomnessSpace {
  std::uint64_t symbol_slots = 0; // base-q digits
  std::uint64_t bit_slots = 0;    // base-2 digits

  static RandomnessSpace of(const SchemeParams& par) {
    RandomnessSpace sp;
    const auto s = static_cast<std::uint64_t>(par.sharing.s);
    sp.symbol_slots = static_cast<std::uint64_t>(par.topo.N) * par.sharing.m * s;
    if (!par.corner) sp.symbol_slots += par.sset_count() * s;
    if (par.variant == Variant::SecrecyPrivacy)
      sp.bit_slots = par.user_count() * static_cast<std::uint64_t>(par.topo.N);
    if (!par.corner && par.topo.r > 1) {
      std::uint64_t pairs = 0;
      const auto users = enumerate_subsets(par.topo.C, par.topo.r);
      const auto tsets = enumerate_subsets(par.topo.C, par.t);
      for (const auto& G : users)
        for (const auto& T : tsets) {
          Subset inter;
          std::set_intersection(G.begin(), G.end(), T.begin(), T.end(),
                                std::back_inserter(inter));
          if (inter.empty()) ++pairs;
        }
      sp.symbol_slots += pairs * static_cast<std::uint64_t>(par.topo.r - 1) * s;
    }
    return sp;
  }

  // total assignments, or 0 if the count exceeds cap
  std::uint64_t count(std::uint32_t q, std::uint64_t cap) const {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < symbol_slots; ++i)
      if (!mul_capped(acc, q, cap)) return 0;
    for (std::uint64_t i = 0; i < bit_slots; ++i)
      if (!mul_capped(acc, 2, cap)) return 0;
    return acc;
  }
};

// deterministic digit order: file keys, transmission keys, demand masks, splits
Randomness nth_randomness(const SchemeParams& par, std::uint64_t idx) {
  const std::uint32_t q = par.sharing.field.size();
  const int s = par.sharing.s;
  auto sym = [&] {
    const Symbol v = static_cast<Symbol>(idx % q);
    idx /= q;
    return v;
  };
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
  rnd.demand_masks.assign(par.user_count(), std::vector<std::uint8_t>(par.topo.N, 0));
  if (par.variant == Variant::SecrecyPrivacy)
    for (auto& mask : rnd.demand_masks)
      for (auto& bit : mask) {
        bit = static_cast<std::uint8_t>(idx & 1);
        idx >>= 1;
      }
  if (!par.corner && par.topo.r > 1) {
    const auto users = enumerate_subsets(par.topo.C, par.topo.r);
    const auto tsets = enumerate_subsets(par.topo.C, par.t);
    for (std::uint64_t gi = 0; gi < users.size(); ++gi)
      for (std::uint64_t ti = 0; ti < tsets.size(); ++ti) {
        Subset inter;
        std::set_intersection(users[gi].begin(), users[gi].end(), tsets[ti].begin(),
                              tsets[ti].end(), std::back_inserter(inter));
        if (!inter.empty()) continue;
        auto& splits = rnd.free_splits[{gi, ti}];
        splits.resize(par.topo.r - 1);
        for (auto& spl : splits) spl = vec();
      }
  }
  return rnd;
}

SymbolVec nth_file(const SchemeParams& par, std::uint64_t& idx) {
  const std::uint32_t q = par.sharing.field.size();
  SymbolVec f(par.sharing.file_symbols());
  for (auto& x : f) {
    x = static_cast<Symbol>(idx % q);
    idx /= q;
  }
  return f;
}

// serialized view of one user: full broadcast plus the accessible caches
std::string view_of(const Subset& user, const Placement& pl, const Broadcast& bc) {
  std::string out;
  auto put_syms = [&](const SymbolVec& v) {
    for (Symbol x : v) {
      out.push_back(static_cast<char>(x & 0xff));
      out.push_back(static_cast<char>((x >> 8) & 0xff));
    }
  };
  for (const auto& pay : bc.payloads) put_syms(pay);
  for (const auto& mask : bc.demand_masks)
    for (auto bit : mask) out.push_back(static_cast<char>(bit));
  for (int c : user) {
    const CacheContents& cc = pl.caches[c - 1];
    for (const auto& [key, v] : cc.file_shares) put_syms(v);
    for (const auto& [key, v] : cc.key_shares) put_syms(v);
  }
  return out;
}

using Dist = std::map<std::string, std::uint64_t>;

// exact total-variation distance; both maps must have equal totals
Rat tv_distance(const Dist& a, const Dist& b) {
  std::uint64_t total = 0;
  for (const auto& [k, v] : a) total += v;
  long long absdiff = 0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    const long long d = static_cast<long long>(v) - (it == b.end() ? 0 : static_cast<long long>(it->second));
    absdiff += d < 0 ? -d : d;
  }
  for (const auto& [k, v] : b)
    if (!a.count(k)) absdiff += static_cast<long long>(v);
  return Rat(absdiff, 2) / Rat::from_uint(total);
}

std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i)
    if (!mul_capped(acc, base, cap)) return 0;
  return acc;
}

struct ExhaustiveScope {
  std::uint64_t rand_count = 0;
  std::uint64_t states = 0; // 0 means over budget
};

ExhaustiveScope scope_for(const SchemeParams& par, std::uint64_t outer) {
  ExhaustiveScope sc;
  sc.rand_count = RandomnessSpace::of(par).count(par.sharing.field.size(), kExhaustiveBudget);
  if (sc.rand_count == 0 || outer == 0) return sc;
  std::uint64_t states = sc.rand_count;
  if (!mul_capped(states, outer, kExhaustiveBudget)) return sc;
  sc.states = states;
  return sc;
}

VerificationReport skipped(const SchemeParams& par, std::string check, std::string note) {
  VerificationReport rep;
  rep.check = std::move(check);
  rep.instance = describe(par);
  rep.outcome = Outcome::Skipped;
  rep.witness = std::move(note);
  return rep;
}

} // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

const char* fault_name(Fault f) {
  switch (f) {
    case Fault::ZeroTransmissionKeys: return "zero_transmission_keys";
    case Fault::ReuseKeySplit: return "reuse_key_split";
    case Fault::RankDeficientGenerator: return "rank_deficient_generator";
  }
  return "?";
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["instance"] = instance;
  j["size"] = size;
  j["outcome"] = outcome_name(outcome);
  if (has_distance)
    j["distance"] = distance.to_fraction_string();
  else
    j["distance"] = nullptr;
  if (witness.empty())
    j["witness"] = nullptr;
  else
    j["witness"] = witness;
  j["expected_fail"] = expected_fail;
  return j.dump();
}

VerificationReport verify_correctness(const SchemeParams& par, DemandPolicy policy,
                                      int trials, std::uint64_t seed) {
  VerificationReport rep;
  rep.check = "correctness";
  rep.instance = describe(par);
  const std::uint64_t K = par.user_count();
  const auto users = enumerate_subsets(par.topo.C, par.topo.r);

  std::uint64_t demand_space = pow_capped(par.topo.N, K, std::uint64_t{1} << 16);
  if (policy == DemandPolicy::Auto)
    policy = demand_space != 0 ? DemandPolicy::Exhaustive : DemandPolicy::Random;
  if (policy == DemandPolicy::Exhaustive && demand_space == 0)
    throw std::invalid_argument("verify_correctness: demand space too large to exhaust");

  auto random_library = [&](std::mt19937_64& rng) {
    std::vector<SymbolVec> lib(par.topo.N, SymbolVec(par.sharing.file_symbols()));
    for (auto& f : lib)
      for (auto& x : f) x = static_cast<Symbol>(rng() & par.sharing.field.mask());
    return lib;
  };
  auto check_all_users = [&](const std::vector<SymbolVec>& lib, const Randomness& rnd,
                             const Placement& pl, const DemandVector& dv) -> std::string {
    const Broadcast bc = deliver(par, rnd, pl.shares, dv);
    const bool oob = par.variant != Variant::SecrecyPrivacy;
    for (std::uint64_t gi = 0; gi < K; ++gi) {
      std::vector<CacheContents> acc;
      for (int c : users[gi]) acc.push_back(pl.caches[c - 1]);
      const SymbolVec got =
          decode(par, users[gi], bc, acc, dv.d[gi],
                 oob ? std::optional<DemandVector>(dv) : std::nullopt);
      if (got != lib[dv.d[gi] - 1]) {
        std::ostringstream os;
        os << "user " << describe_user(users[gi]) << " demand " << dv.d[gi]
           << " decoded a wrong file";
        return os.str();
      }
    }
    return {};
  };

  if (policy == DemandPolicy::Exhaustive) {
    std::mt19937_64 rng(seed);
    const auto lib = random_library(rng);
    const Randomness rnd = draw_randomness(par, seed);
    const Placement pl = place(par, lib, rnd);
    rep.size = demand_space;
    DemandVector dv;
    dv.d.assign(K, 1);
    for (std::uint64_t i = 0; i < demand_space; ++i) {
      std::uint64_t v = i;
      for (std::uint64_t u = 0; u < K; ++u) {
        dv.d[u] = static_cast<int>(v % par.topo.N) + 1;
        v /= par.topo.N;
      }
      if (auto w = check_all_users(lib, rnd, pl, dv); !w.empty()) {
        rep.outcome = Outcome::Fail;
        rep.witness = w + " (exhaustive demands, seed " + std::to_string(seed) + ")";
        return rep;
      }
    }
  } else {
    if (trials < 1) throw std::invalid_argument("verify_correctness: need at least one trial");
    rep.size = static_cast<std::uint64_t>(trials);
    for (int i = 0; i < trials; ++i) {
      const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(i);
      std::mt19937_64 rng(trial_seed);
      const auto lib = random_library(rng);
      const Randomness rnd = draw_randomness(par, trial_seed);
      const Placement pl = place(par, lib, rnd);
      DemandVector dv;
      dv.d.resize(K);
      for (auto& d : dv.d) d = static_cast<int>(rng() % par.topo.N) + 1;
      if (auto w = check_all_users(lib, rnd, pl, dv); !w.empty()) {
        rep.outcome = Outcome::Fail;
        rep.witness = w + " (trial seed " + std::to_string(trial_seed) + ")";
        return rep;
      }
    }
  }
  rep.outcome = Outcome::Pass;
  return rep;
}

VerificationReport verify_cache_secrecy_rank(const SchemeParams& par) {
  VerificationReport rep;
  rep.check = "cache_secrecy_rank";
  rep.instance = describe(par);
  const auto users = enumerate_subsets(par.topo.C, par.topo.r);
  const auto tsets = enumerate_subsets(par.topo.C, par.t);
  rep.size = users.size();
  for (const auto& G : users) {
    std::vector<std::uint64_t> reachable;
    for (std::uint64_t ti = 0; ti < tsets.size(); ++ti) {
      Subset inter;
      std::set_intersection(G.begin(), G.end(), tsets[ti].begin(), tsets[ti].end(),
                            std::back_inserter(inter));
      if (!inter.empty()) reachable.push_back(ti);
    }
    if (reachable.size() != par.sharing.m) {
      rep.outcome = Outcome::Fail;
      rep.witness = "user " + describe_user(G) + " reaches " +
                    std::to_string(reachable.size()) + " share indices, expected " +
                    std::to_string(par.sharing.m);
      return rep;
    }
    if (!leakage_test(par.sharing, reachable)) {
      rep.outcome = Outcome::Fail;
      rep.witness = "key columns lose rank on the shares of user " + describe_user(G);
      return rep;
    }
  }
  rep.outcome = Outcome::Pass;
  return rep;
}

VerificationReport verify_secrecy_exhaustive(const SchemeParams& par, const Subset& user) {
  const std::uint64_t K = par.user_count();
  const std::uint32_t q = par.sharing.field.size();
  const std::uint64_t fsyms = par.sharing.file_symbols();

  const std::uint64_t demand_space = pow_capped(par.topo.N, K, kExhaustiveBudget);
  const std::uint64_t lib_space = pow_capped(q, fsyms * par.topo.N, kExhaustiveBudget);
  std::uint64_t outer = demand_space;
  if (outer == 0 || lib_space == 0 || !mul_capped(outer, lib_space, kExhaustiveBudget))
    return skipped(par, "secrecy_exhaustive", "joint state space exceeds the enumeration budget");
  const ExhaustiveScope sc = scope_for(par, outer);
  if (sc.states == 0)
    return skipped(par, "secrecy_exhaustive", "joint state space exceeds the enumeration budget");

  VerificationReport rep;
  rep.check = "secrecy_exhaustive";
  rep.instance = describe(par) + " user " + describe_user(user);
  rep.size = sc.states;
  rep.has_distance = true;
  rep.distance = Rat(0);

  const std::uint64_t user_rank = subset_rank(par.topo.C, user);
  const std::uint64_t others_space = pow_capped(q, fsyms * (par.topo.N - 1), kExhaustiveBudget);
  const std::uint64_t own_space = pow_capped(q, fsyms, kExhaustiveBudget);

  DemandVector dv;
  dv.d.assign(K, 1);
  for (std::uint64_t di = 0; di < demand_space; ++di) {
    std::uint64_t v = di;
    for (std::uint64_t u = 0; u < K; ++u) {
      dv.d[u] = static_cast<int>(v % par.topo.N) + 1;
      v /= par.topo.N;
    }
    const int own_file = dv.d[user_rank];

    Dist first;
    bool have_first = false;
    for (std::uint64_t wi = 0; wi < others_space; ++wi) {
      Dist dist;
      for (std::uint64_t oi = 0; oi < own_space; ++oi) {
        std::vector<SymbolVec> lib(par.topo.N);
        std::uint64_t wrest = wi;
        for (int i = 1; i <= par.topo.N; ++i) {
          if (i == own_file) continue;
          lib[i - 1] = nth_file(par, wrest);
        }
        std::uint64_t orest = oi;
        lib[own_file - 1] = nth_file(par, orest);
        for (std::uint64_t ri = 0; ri < sc.rand_count; ++ri) {
          const Randomness rnd = nth_randomness(par, ri);
          const Placement pl = place(par, lib, rnd);
          const Broadcast bc = deliver(par, rnd, pl.shares, dv);
          ++dist[view_of(user, pl, bc)];
        }
      }
      if (!have_first) {
        first = std::move(dist);
        have_first = true;
        continue;
      }
      const Rat d = tv_distance(first, dist);
      if (d > rep.distance) {
        rep.distance = d;
        std::ostringstream os;
        os << "view distribution shifts with undemanded file values (demand vector index "
           << di << ", assignment " << wi << ")";
        rep.witness = os.str();
      }
    }
  }
  rep.outcome = rep.distance == Rat(0) ? Outcome::Pass : Outcome::Fail;
  if (rep.outcome == Outcome::Pass) rep.witness.clear();
  return rep;
}

VerificationReport verify_privacy_exhaustive(const SchemeParams& par, const Subset& user) {
  const std::uint64_t K = par.user_count();
  const std::uint32_t q = par.sharing.field.size();
  const std::uint64_t fsyms = par.sharing.file_symbols();

  const std::uint64_t lib_space = pow_capped(q, fsyms * par.topo.N, kExhaustiveBudget);
  const std::uint64_t rest_space = pow_capped(par.topo.N, K - 1, kExhaustiveBudget);
  std::uint64_t outer = lib_space;
  if (lib_space == 0 || rest_space == 0 ||
      !mul_capped(outer, static_cast<std::uint64_t>(par.topo.N), kExhaustiveBudget) ||
      !mul_capped(outer, rest_space, kExhaustiveBudget))
    return skipped(par, "privacy_exhaustive", "joint state space exceeds the enumeration budget");
  const ExhaustiveScope sc = scope_for(par, outer);
  if (sc.states == 0)
    return skipped(par, "privacy_exhaustive", "joint state space exceeds the enumeration budget");

  VerificationReport rep;
  rep.check = "privacy_exhaustive";
  rep.instance = describe(par) + " user " + describe_user(user);
  rep.size = sc.states;
  rep.has_distance = true;
  rep.distance = Rat(0);
  rep.expected_fail = par.variant != Variant::SecrecyPrivacy;

  const std::uint64_t user_rank = subset_rank(par.topo.C, user);

  for (std::uint64_t li = 0; li < lib_space; ++li) {
    std::vector<SymbolVec> lib(par.topo.N);
    std::uint64_t lrest = li;
    for (int i = 0; i < par.topo.N; ++i) lib[i] = nth_file(par, lrest);
    for (int own = 1; own <= par.topo.N; ++own) {
      Dist first;
      bool have_first = false;
      for (std::uint64_t rest = 0; rest < rest_space; ++rest) {
        DemandVector dv;
        dv.d.assign(K, 0);
        dv.d[user_rank] = own;
        std::uint64_t v = rest;
        for (std::uint64_t u = 0; u < K; ++u) {
          if (u == user_rank) continue;
          dv.d[u] = static_cast<int>(v % par.topo.N) + 1;
          v /= par.topo.N;
        }
        Dist dist;
        for (std::uint64_t ri = 0; ri < sc.rand_count; ++ri) {
          const Randomness rnd = nth_randomness(par, ri);
          const Placement pl = place(par, lib, rnd);
          const Broadcast bc = deliver(par, rnd, pl.shares, dv);
          ++dist[view_of(user, pl, bc)];
        }
        if (!have_first) {
          first = std::move(dist);
          have_first = true;
          continue;
        }
        const Rat d = tv_distance(first, dist);
        if (d > rep.distance) {
          rep.distance = d;
          std::ostringstream os;
          os << "view distribution shifts with the other users' demands (library index " << li
             << ", own demand " << own << ", demand assignment " << rest << ")";
          rep.witness = os.str();
        }
      }
    }
  }
  rep.outcome = rep.distance == Rat(0) ? Outcome::Pass : Outcome::Fail;
  if (rep.outcome == Outcome::Pass) rep.witness.clear();
  return rep;
}

VerificationReport verify_rate_accounting(const SchemeParams& par, std::uint64_t seed) {
  VerificationReport rep;
  rep.check = "rate_accounting";
  rep.instance = describe(par);

  std::mt19937_64 rng(seed);
  std::vector<SymbolVec> lib(par.topo.N, SymbolVec(par.sharing.file_symbols()));
  for (auto& f : lib)
    for (auto& x : f) x = static_cast<Symbol>(rng() & par.sharing.field.mask());
  const Randomness rnd = draw_randomness(par, seed);
  const Placement pl = place(par, lib, rnd);
  DemandVector dv;
  dv.d.resize(par.user_count());
  for (auto& d : dv.d) d = static_cast<int>(rng() % par.topo.N) + 1;
  const Broadcast bc = deliver(par, rnd, pl.shares, dv);
  rep.size = par.user_count();

  const Rat file_units = Rat::from_uint(par.sharing.file_symbols());

  Rat expect_M;
  if (par.corner)
    expect_M = Rat(par.topo.N) * Rat::from_uint(binom(par.topo.C - 1, par.topo.r));
  else
    expect_M = (par.t == 0 ? Rat(0)
                           : Rat(par.topo.N) * Rat::from_uint(binom(par.topo.C - 1, par.t - 1)) /
                                 Rat::from_uint(binom(par.topo.C - par.topo.r, par.t))) +
               Rat::from_uint(binom(par.topo.C - 1, par.topo.r - 1));
  for (const auto& cc : pl.caches) {
    const Rat measured = Rat::from_uint(cc.stored_symbols(par.sharing.s)) / file_units;
    if (measured != expect_M) {
      rep.outcome = Outcome::Fail;
      rep.witness = "cache " + std::to_string(cc.cache_id) + " stores " +
                    measured.to_fraction_string() + " file units, expected " +
                    expect_M.to_fraction_string();
      return rep;
    }
  }

  std::uint64_t payload_syms = 0;
  for (const auto& pay : bc.payloads) payload_syms += pay.size();
  const Rat measured_R = Rat::from_uint(payload_syms) / file_units;
  const Rat expect_R =
      par.corner ? Rat(1)
                 : Rat::from_uint(binom(par.topo.C, par.t + par.topo.r)) /
                       Rat::from_uint(binom(par.topo.C - par.topo.r, par.t));
  if (measured_R != expect_R) {
    rep.outcome = Outcome::Fail;
    rep.witness = "broadcast carries " + measured_R.to_fraction_string() +
                  " file units, expected " + expect_R.to_fraction_string();
    return rep;
  }

  std::uint64_t mask_bits = 0;
  for (const auto& mask : bc.demand_masks) mask_bits += mask.size();
  rep.witness = "demand mask overhead " + std::to_string(mask_bits) + " bits";
  rep.outcome = Outcome::Pass;
  return rep;
}

std::vector<VerificationReport> verify_suite(const SchemeParams& par, std::uint64_t seed,
                                             int trials) {
  std::vector<VerificationReport> out;
  out.push_back(verify_correctness(par, DemandPolicy::Auto, trials, seed));
  out.push_back(verify_cache_secrecy_rank(par));
  out.push_back(verify_rate_accounting(par, seed));
  const Subset probe = enumerate_subsets(par.topo.C, par.topo.r).front();
  out.push_back(verify_secrecy_exhaustive(par, probe));
  out.push_back(verify_privacy_exhaustive(par, probe));
  return out;
}

VerificationReport run_fault_check(Fault f) {
  VerificationReport rep;
  rep.check = std::string("fault_") + fault_name(f);

  switch (f) {
    case Fault::ZeroTransmissionKeys: {
      // without transmission keys the payloads expose share combinations
      SchemeParams par = make_scheme({2, 1, 2}, 0, Variant::SecrecyPrivacy, 1);
      rep.instance = describe(par) + " with zeroed transmission keys";
      const std::uint32_t q = par.sharing.field.size();
      const std::uint64_t fsyms = par.sharing.file_symbols();
      const std::uint64_t rand_count =
          RandomnessSpace::of(par).count(q, kExhaustiveBudget);
      const std::uint64_t own_space = pow_capped(q, fsyms, kExhaustiveBudget);
      const std::uint64_t others_space = pow_capped(q, fsyms, kExhaustiveBudget);
      const Subset user = {1};
      Rat worst(0);
      DemandVector dv;
      dv.d = {1, 2};
      std::uint64_t states = 0;
      Dist first;
      bool have_first = false;
      for (std::uint64_t wi = 0; wi < others_space; ++wi) {
        Dist dist;
        for (std::uint64_t oi = 0; oi < own_space; ++oi) {
          std::vector<SymbolVec> lib(2);
          std::uint64_t a = oi, b = wi;
          lib[0] = nth_file(par, a); // demanded by user {1}
          lib[1] = nth_file(par, b);
          for (std::uint64_t ri = 0; ri < rand_count; ++ri) {
            Randomness rnd = nth_randomness(par, ri);
            for (auto& k : rnd.tx_keys) std::fill(k.begin(), k.end(), 0);
            const Placement pl = place(par, lib, rnd);
            const Broadcast bc = deliver(par, rnd, pl.shares, dv);
            ++dist[view_of(user, pl, bc)];
            ++states;
          }
        }
        if (!have_first) {
          first = std::move(dist);
          have_first = true;
        } else {
          worst = std::max(worst, tv_distance(first, dist));
        }
      }
      rep.size = states;
      rep.has_distance = true;
      rep.distance = worst;
      rep.outcome = worst > Rat(0) ? Outcome::Pass : Outcome::Fail;
      rep.witness = worst > Rat(0)
                        ? "secrecy check detects the zeroed keys (distance " +
                              worst.to_fraction_string() + ")"
                        : "secrecy check missed the zeroed keys";
      return rep;
    }
    case Fault::ReuseKeySplit: {
      // hand one user's key split to another user: its group key no longer
      // telescopes and decoding must come out wrong
      SchemeParams par = make_scheme({3, 2, 2}, 0, Variant::SecrecyPrivacy, 1);
      rep.instance = describe(par) + " with a key split reused across users";
      const auto users = enumerate_subsets(3, 2); // {1,2},{1,3},{2,3}
      bool detected = false;
      int trials = 0;
      for (std::uint64_t seed = 1; seed <= 16 && !detected; ++seed, ++trials) {
        std::mt19937_64 rng(seed);
        std::vector<SymbolVec> lib(2, SymbolVec(par.sharing.file_symbols()));
        for (auto& fdata : lib)
          for (auto& x : fdata) x = static_cast<Symbol>(rng() & par.sharing.field.mask());
        const Randomness rnd = draw_randomness(par, seed);
        Placement pl = place(par, lib, rnd);
        // cache 2 serves users {1,2} and {2,3}; reuse the first split as the second
        const std::uint64_t u12 = subset_rank(3, {1, 2});
        const std::uint64_t u23 = subset_rank(3, {2, 3});
        pl.caches[1].key_shares[{u23, 0}] = pl.caches[1].key_shares[{u12, 0}];
        DemandVector dv;
        dv.d = {1, 2, 1};
        const Broadcast bc = deliver(par, rnd, pl.shares, dv);
        std::vector<CacheContents> acc = {pl.caches[1], pl.caches[2]};
        const SymbolVec got = decode(par, {2, 3}, bc, acc, dv.d[u23]);
        if (got != lib[dv.d[u23] - 1]) detected = true;
      }
      rep.size = static_cast<std::uint64_t>(trials);
      rep.outcome = detected ? Outcome::Pass : Outcome::Fail;
      rep.witness = detected ? "correctness check detects the reused split"
                             : "correctness check missed the reused split";
      return rep;
    }
    case Fault::RankDeficientGenerator: {
      // duplicate generator rows: pooled shares of one user become dependent
      SchemeParams par = make_scheme({4, 2, 2}, 1, Variant::SecrecyPrivacy, 1);
      rep.instance = describe(par) + " with a duplicated generator row";
      for (std::uint64_t j = 0; j < par.sharing.n; ++j)
        par.sharing.generator.at(1, static_cast<int>(j)) =
            par.sharing.generator.at(0, static_cast<int>(j));
      const VerificationReport inner = verify_cache_secrecy_rank(par);
      rep.size = inner.size;
      rep.outcome = inner.outcome == Outcome::Fail ? Outcome::Pass : Outcome::Fail;
      rep.witness = rep.outcome == Outcome::Pass
                        ? "rank check detects the degenerate generator: " + inner.witness
                        : "rank check missed the degenerate generator";
      return rep;
    }
  }
  throw std::logic_error("run_fault_check: unknown fault");
}

} // namespace macc
