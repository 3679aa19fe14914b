#pragma once
// Exact subset combinatorics over a ground set {1, ..., C}.
// Subsets are strictly increasing element lists; ranks are 0-based in
// lexicographic order. Counts never wrap: overflow throws.

#include <cstdint>
#include <vector>

namespace macc {

using Subset = std::vector<int>;

/// A subset of cache indices together with its lexicographic rank.
struct SubsetIndex {
  Subset elements;        // strictly increasing, values in [1, ground]
  std::uint64_t rank = 0; // 0-based position among same-size subsets
  int ground = 0;
};

/// Binomial coefficient n choose k. Returns 0 for k < 0 or k > n.
/// Throws std::invalid_argument for n < 0, std::overflow_error if the
/// value does not fit in 64 bits.
std::uint64_t binom(int n, int k);

/// All k-subsets of {1, ..., ground} in lexicographic order.
std::vector<Subset> enumerate_subsets(int ground, int k);

/// Lexicographic rank of a k-subset among all k-subsets of {1, ..., ground}.
/// Throws std::invalid_argument unless the subset is strictly increasing
/// with elements in range.
std::uint64_t subset_rank(int ground, const Subset& s);

/// Inverse of subset_rank. Throws std::out_of_range for rank >= binom(ground, k).
Subset subset_unrank(int ground, int k, std::uint64_t rank);

/// Number of share indices reachable by a user connected to r caches when
/// shares are indexed by t-subsets: the count of t-subsets meeting a fixed
/// r-subset. Computed by inclusion-exclusion and cross-checked against the
/// complement form binom(C, t) - binom(C - r, t).
std::uint64_t effective_shares(int C, int r, int t);

bool is_valid_subset(int ground, const Subset& s);

} // namespace macc
