#pragma once
// Rate-memory analysis: closed-form tradeoff curves for both scheme variants,
// lower convex envelopes (memory sharing), the cut-set lower bound, and the
// study tables comparing multi-access against the dedicated-cache baseline.
// Everything is exact rational arithmetic; floats appear only when callers
// render output.

#include "macc/rational.hpp"
#include "macc/scheme.hpp"

#include <vector>

namespace macc {

struct RateMemoryPoint {
  int t = 0;           // placement parameter behind the vertex
  bool corner = false; // keyless full-replication end point
  Rat M;               // cache memory in file units
  Rat R;               // delivery rate in file units
};

struct TradeoffCurve {
  Topology topo;
  Variant variant = Variant::SecrecyPrivacy;
  std::vector<RateMemoryPoint> points; // strictly increasing M, non-increasing R

  /// Vertices of the lower convex envelope (memory sharing between schemes).
  std::vector<RateMemoryPoint> envelope() const;
};

/// Cache memory of the keyed scheme at placement parameter t, in file units.
Rat memory_keyed(int C, int r, int N, int t);

/// Delivery rate of the keyed scheme at placement parameter t.
Rat rate_keyed(int C, int r, int t);

/// Memory of the keyless corner (full share replication, rate 1).
Rat memory_corner(int C, int r, int N);

TradeoffCurve curve_secrecy_privacy(int C, int r, int N);
TradeoffCurve curve_secrecy_only(int C, int r, int N);

/// Rate achieved at memory M by sharing between envelope vertices.
/// Below the smallest vertex throws std::domain_error; beyond the largest
/// the final rate is kept.
Rat memory_share(const std::vector<RateMemoryPoint>& envelope, const Rat& M);

/// Cut-set lower bound on the rate at memory M, never below 1.
/// The single-user topology r = C pins the bound to 1.
Rat lower_bound(int C, int r, int N, const Rat& M);

/// Smallest memory any secretive scheme needs, (K - 1)/(C - r).
/// Throws std::invalid_argument for the single-user topology r = C.
Rat min_feasible_memory(int C, int r);

enum class Regime { Optimal, Order5, Uncertified, Infeasible };

const char* regime_name(Regime g);

struct GapCertificate {
  Rat M;
  Rat achievable; // envelope rate of the keyed+masked scheme
  Rat bound;      // cut-set lower bound
  Rat ratio;      // achievable / bound
  Regime regime = Regime::Uncertified;
};

/// Achievable-over-bound ratio with its certification regime. "optimal"
/// applies only at the two smallest scheme vertices when r >= C - 1 and
/// N >= 2K; "order5" whenever K <= 5(r + 1), r < C - 1 and M is at least
/// the t = 1 vertex memory. Certified claims are asserted, in exact
/// arithmetic, before being returned.
GapCertificate gap_certificate(int C, int r, int N, const Rat& M);

struct ComparisonRow {
  int r = 0;   // 1 marks the dedicated-cache baseline
  Rat axis;    // per-cache memory, or total accessed memory per user
  Rat rpu;     // rate normalized by that setup's user count
  bool clamped = false; // axis beyond the curve's last vertex
};

/// Rate per user of each setup on the union of all envelope vertices,
/// aligned on per-cache memory. Rows below a curve's first vertex are
/// omitted; rows beyond its last are clamped to the final rate.
std::vector<ComparisonRow> compare_same_cache(int C, int N, const std::vector<int>& r_list);

/// Same alignment on the total memory a user accesses (r times the
/// per-cache memory); the dedicated baseline keys by its own cache size.
std::vector<ComparisonRow> compare_same_access(int C, int N, const std::vector<int>& r_list);

} // namespace macc
