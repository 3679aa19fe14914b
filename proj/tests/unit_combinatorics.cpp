#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macc/combinatorics.hpp"

#include <stdexcept>

using namespace macc;

TEST_CASE("binom basic values and edge conventions") {
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(5, 5) == 1);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(6, 3) == 20);
  CHECK(binom(10, 4) == 210);
  // out-of-range k counts zero subsets rather than erroring
  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(0, 1) == 0);
  CHECK_THROWS_AS(binom(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(binom(100, 50), std::overflow_error);
}

TEST_CASE("binom satisfies the Pascal recurrence") {
  for (int n = 1; n <= 30; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("enumerate_subsets is lexicographic and complete") {
  const auto subs = enumerate_subsets(5, 2);
  REQUIRE(subs.size() == 10);
  CHECK(subs.front() == Subset{1, 2});
  CHECK(subs[1] == Subset{1, 3});
  CHECK(subs.back() == Subset{4, 5});
  for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1] < subs[i]);

  CHECK(enumerate_subsets(4, 0) == std::vector<Subset>{Subset{}});
  CHECK(enumerate_subsets(3, 4).empty());
}

TEST_CASE("subset_rank and subset_unrank invert each other") {
  for (int ground = 1; ground <= 7; ++ground) {
    for (int k = 0; k <= ground; ++k) {
      const auto subs = enumerate_subsets(ground, k);
      for (std::uint64_t rank = 0; rank < subs.size(); ++rank) {
        CHECK(subset_rank(ground, subs[rank]) == rank);
        CHECK(subset_unrank(ground, k, rank) == subs[rank]);
      }
    }
  }
  CHECK(subset_rank(5, {4, 5}) == 9);
  CHECK_THROWS_AS(subset_rank(5, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(subset_rank(5, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(subset_rank(5, {5, 6}), std::invalid_argument);
  CHECK_THROWS_AS(subset_unrank(5, 2, 10), std::out_of_range);
}

TEST_CASE("is_valid_subset screens shape and range") {
  CHECK(is_valid_subset(5, {1, 3, 5}));
  CHECK(is_valid_subset(5, {}));
  CHECK_FALSE(is_valid_subset(5, {3, 3}));
  CHECK_FALSE(is_valid_subset(5, {3, 2}));
  CHECK_FALSE(is_valid_subset(5, {0}));
  CHECK_FALSE(is_valid_subset(5, {6}));
}

TEST_CASE("effective_shares counts t-subsets meeting an r-subset") {
  CHECK(effective_shares(4, 2, 1) == 2);
  CHECK(effective_shares(4, 2, 0) == 0);
  for (int C = 1; C <= 8; ++C)
    for (int r = 1; r <= C; ++r)
      for (int t = 0; t <= C - r; ++t)
        CHECK(effective_shares(C, r, t) == binom(C, t) - binom(C - r, t));
  // brute-force cross-check at one mid-size point
  int C = 6, r = 2, t = 3;
  std::uint64_t meet = 0;
  for (const auto& T : enumerate_subsets(C, t)) {
    bool hits = false;
    for (int c : T)
      if (c == 1 || c == 4) hits = true;
    if (hits) ++meet;
  }
  CHECK(effective_shares(C, r, t) == meet);
  CHECK_THROWS_AS(effective_shares(3, 4, 0), std::invalid_argument);
}
