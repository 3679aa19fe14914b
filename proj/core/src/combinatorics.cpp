#include "macc/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace macc {

std::uint64_t binom(int n, int k) {
  if (n < 0) throw std::invalid_argument("binom: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (int i = 1; i <= k; ++i) {
    // acc * (n - k + i) always divides evenly by i at this point
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    std::uint64_t hi;
    if (__builtin_mul_overflow(acc, num, &hi))
      throw std::overflow_error("binom: value exceeds 64 bits at n=" + std::to_string(n));
    acc = hi / static_cast<std::uint64_t>(i);
  }
  return acc;
}

bool is_valid_subset(int ground, const Subset& s) {
  int prev = 0;
  for (int e : s) {
    if (e <= prev || e > ground) return false;
    prev = e;
  }
  return true;
}

std::vector<Subset> enumerate_subsets(int ground, int k) {
  if (ground < 0) throw std::invalid_argument("enumerate_subsets: negative ground");
  if (k < 0 || k > ground) return {};
  std::vector<Subset> out;
  out.reserve(binom(ground, k));
  Subset cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    // next lexicographic k-subset
    int i = k - 1;
    while (i >= 0 && cur[i] == ground - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::uint64_t subset_rank(int ground, const Subset& s) {
  if (!is_valid_subset(ground, s))
    throw std::invalid_argument("subset_rank: elements must be strictly increasing in [1, ground]");
  const int k = static_cast<int>(s.size());
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[i]; ++v)
      rank += binom(ground - v, k - 1 - i);
    prev = s[i];
  }
  return rank;
}

Subset subset_unrank(int ground, int k, std::uint64_t rank) {
  if (k < 0 || k > ground) throw std::invalid_argument("subset_unrank: k out of range");
  if (rank >= binom(ground, k)) throw std::out_of_range("subset_unrank: rank out of range");
  Subset out;
  out.reserve(k);
  int v = 1;
  for (int i = 0; i < k; ++i) {
    while (true) {
      std::uint64_t block = binom(ground - v, k - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    out.push_back(v);
    ++v;
  }
  return out;
}

std::uint64_t effective_shares(int C, int r, int t) {
  if (C < 0 || r < 0 || r > C || t < 0 || t > C)
    throw std::invalid_argument("effective_shares: parameters out of range");
  // inclusion-exclusion over which user caches the t-subset must hit
  long long signed_acc = 0;
  for (int j = 1; j <= r; ++j) {
    long long term = static_cast<long long>(binom(r, j)) * static_cast<long long>(binom(C - j, t - j));
    signed_acc += (j % 2 == 1) ? term : -term;
  }
  std::uint64_t direct = binom(C, t) - binom(C - r, t);
  if (signed_acc < 0 || static_cast<std::uint64_t>(signed_acc) != direct)
    throw std::logic_error("effective_shares: inclusion-exclusion disagrees with complement count");
  return direct;
}

} // namespace macc
