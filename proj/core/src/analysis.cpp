#include "macc/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace macc {

namespace {

void check_topology(int C, int r) {
  if (C < 1 || r < 1 || r > C)
    throw std::invalid_argument("analysis: r must be in 1..C with C >= 1");
}

// cross-product comparison: is b on or below the segment a->c?
bool keeps_convex(const RateMemoryPoint& a, const RateMemoryPoint& b, const RateMemoryPoint& c) {
  // slope(a,b) <= slope(a,c)  <=>  (b.R-a.R)(c.M-a.M) <= (c.R-a.R)(b.M-a.M)
  return (b.R - a.R) * (c.M - a.M) <= (c.R - a.R) * (b.M - a.M);
}

} // namespace

Rat memory_keyed(int C, int r, int N, int t) {
  check_topology(C, r);
  if (t < 0 || t > C - r) throw std::invalid_argument("memory_keyed: t out of range");
  const Rat shares = t == 0 ? Rat(0)
                            : Rat::from_uint(binom(C - 1, t - 1)) * Rat(N) /
                                  Rat::from_uint(binom(C - r, t));
  return shares + Rat::from_uint(binom(C - 1, r - 1));
}

Rat rate_keyed(int C, int r, int t) {
  check_topology(C, r);
  if (t < 0 || t > C - r) throw std::invalid_argument("rate_keyed: t out of range");
  return Rat::from_uint(binom(C, t + r)) / Rat::from_uint(binom(C - r, t));
}

Rat memory_corner(int C, int r, int N) {
  check_topology(C, r);
  return Rat(N) * Rat::from_uint(binom(C - 1, r));
}

TradeoffCurve curve_secrecy_privacy(int C, int r, int N) {
  check_topology(C, r);
  TradeoffCurve curve;
  curve.topo = {C, r, N};
  curve.variant = Variant::SecrecyPrivacy;
  for (int t = 0; t <= C - r; ++t)
    curve.points.push_back({t, false, memory_keyed(C, r, N, t), rate_keyed(C, r, t)});
  return curve;
}

TradeoffCurve curve_secrecy_only(int C, int r, int N) {
  check_topology(C, r);
  TradeoffCurve curve;
  curve.topo = {C, r, N};
  curve.variant = Variant::SecrecyOnly;
  for (int t = 0; t < C - r; ++t)
    curve.points.push_back({t, false, memory_keyed(C, r, N, t), rate_keyed(C, r, t)});
  curve.points.push_back({C - r, true, memory_corner(C, r, N), Rat(1)});
  return curve;
}

std::vector<RateMemoryPoint> TradeoffCurve::envelope() const {
  std::vector<RateMemoryPoint> pts = points;
  std::sort(pts.begin(), pts.end(),
            [](const RateMemoryPoint& a, const RateMemoryPoint& b) { return a.M < b.M; });
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].M == pts[i - 1].M)
      throw std::logic_error("envelope: duplicate memory points");
    if (pts[i].R > pts[i - 1].R)
      throw std::logic_error("envelope: rate must not increase with memory");
  }
  std::vector<RateMemoryPoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && keeps_convex(hull[hull.size() - 2], p, hull.back()))
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

Rat memory_share(const std::vector<RateMemoryPoint>& envelope, const Rat& M) {
  if (envelope.empty()) throw std::invalid_argument("memory_share: empty envelope");
  if (M < envelope.front().M)
    throw std::domain_error("memory_share: memory below the smallest achievable point");
  if (M >= envelope.back().M) return envelope.back().R;
  for (std::size_t i = 0; i + 1 < envelope.size(); ++i) {
    const auto& a = envelope[i];
    const auto& b = envelope[i + 1];
    if (M >= a.M && M <= b.M)
      return a.R + (M - a.M) * (b.R - a.R) / (b.M - a.M);
  }
  throw std::logic_error("memory_share: envelope not sorted");
}

Rat lower_bound(int C, int r, int N, const Rat& M) {
  check_topology(C, r);
  if (N < 1) throw std::invalid_argument("lower_bound: need at least one file");
  if (M < Rat(0)) throw std::invalid_argument("lower_bound: negative memory");
  if (r == C) return Rat(1); // single user: one file must always cross the channel
  const std::uint64_t K = binom(C, r);
  Rat best(1);
  const std::uint64_t l_cap = std::min<std::uint64_t>(static_cast<std::uint64_t>(N) / 2, K);
  for (std::uint64_t l = 1; l <= l_cap; ++l) {
    const long long per = N / static_cast<long long>(l); // floor(N/l), at least 2 here
    if (per < 2) continue;
    const int z = std::min<int>(static_cast<int>(l) + r - 1, C);
    const Rat numer = Rat(static_cast<long long>(l) * per - 1) - Rat(z - r) * M;
    best = std::max(best, numer / Rat(per - 1));
  }
  return best;
}

Rat min_feasible_memory(int C, int r) {
  check_topology(C, r);
  if (r == C)
    throw std::invalid_argument("min_feasible_memory: single-user topology has no side floor");
  return Rat::from_uint(binom(C, r) - 1) / Rat(C - r);
}

const char* regime_name(Regime g) {
  switch (g) {
    case Regime::Optimal: return "optimal";
    case Regime::Order5: return "order5";
    case Regime::Uncertified: return "uncertified";
    case Regime::Infeasible: return "infeasible";
  }
  return "?";
}

GapCertificate gap_certificate(int C, int r, int N, const Rat& M) {
  check_topology(C, r);
  const auto env = curve_secrecy_privacy(C, r, N).envelope();
  GapCertificate cert;
  cert.M = M;
  cert.achievable = memory_share(env, M); // throws below the first vertex
  cert.bound = lower_bound(C, r, N, M);
  cert.ratio = cert.achievable / cert.bound;

  const std::uint64_t K = binom(C, r);
  const bool n_large = static_cast<std::uint64_t>(N) >= 2 * K;
  if (r >= C - 1 && n_large) {
    // certified only at the two smallest scheme vertices; between them the
    // cut-set bound drops below the memory-sharing segment
    const bool at_vertex = M == memory_keyed(C, r, N, 0) ||
                           (r < C && M == memory_keyed(C, r, N, 1));
    if (at_vertex) {
      cert.regime = Regime::Optimal;
      if (cert.ratio != Rat(1))
        throw std::logic_error("gap_certificate: optimal regime violated");
      return cert;
    }
  }
  if (r < C - 1 && K <= 5 * static_cast<std::uint64_t>(r + 1) &&
      M >= memory_keyed(C, r, N, 1)) {
    cert.regime = Regime::Order5;
    if (cert.ratio > Rat(5))
      throw std::logic_error("gap_certificate: order-5 regime violated");
    return cert;
  }
  cert.regime = Regime::Uncertified;
  return cert;
}

namespace {

std::vector<ComparisonRow> compare_on_axis(int C, int N, const std::vector<int>& r_list,
                                           bool access_axis) {
  if (r_list.empty()) throw std::invalid_argument("compare: empty r list");
  struct Entry {
    int r;
    Rat scale; // axis units per memory unit
    std::vector<RateMemoryPoint> env;
    Rat users;
  };
  std::vector<Entry> entries;
  std::set<Rat> axis_points;
  for (int r : r_list) {
    check_topology(C, r);
    Entry e;
    e.r = r;
    e.scale = access_axis ? Rat(r) : Rat(1);
    e.env = curve_secrecy_only(C, r, N).envelope();
    e.users = Rat::from_uint(binom(C, r));
    for (const auto& p : e.env) axis_points.insert(p.M * e.scale);
    entries.push_back(std::move(e));
  }
  std::vector<ComparisonRow> rows;
  for (const auto& e : entries) {
    for (const Rat& axis : axis_points) {
      const Rat M = axis / e.scale;
      if (M < e.env.front().M) continue; // scheme cannot run this small
      ComparisonRow row;
      row.r = e.r;
      row.axis = axis;
      row.rpu = memory_share(e.env, M) / e.users;
      row.clamped = M > e.env.back().M;
      rows.push_back(row);
    }
  }
  return rows;
}

} // namespace

std::vector<ComparisonRow> compare_same_cache(int C, int N, const std::vector<int>& r_list) {
  return compare_on_axis(C, N, r_list, false);
}

std::vector<ComparisonRow> compare_same_access(int C, int N, const std::vector<int>& r_list) {
  return compare_on_axis(C, N, r_list, true);
}

} // namespace macc
