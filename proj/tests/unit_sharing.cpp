#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macc/combinatorics.hpp"
#include "macc/sharing.hpp"

#include <map>
#include <random>
#include <stdexcept>

using namespace macc;

namespace {

SymbolVec random_vec(std::mt19937_64& rng, std::size_t len, std::uint32_t mask) {
  SymbolVec v(len);
  for (auto& sym : v) sym = static_cast<Symbol>(rng() & mask);
  return v;
}

std::vector<SymbolVec> random_blocks(std::mt19937_64& rng, std::size_t count, int s,
                                     std::uint32_t mask) {
  std::vector<SymbolVec> blocks;
  for (std::size_t i = 0; i < count; ++i) blocks.push_back(random_vec(rng, s, mask));
  return blocks;
}

} // namespace

TEST_CASE("make_sharing picks the field and the canonical generator") {
  const SharingParams p = make_sharing(4, 2, 1);
  CHECK(p.field.l == 3);
  CHECK(p.subfile_count() == 2);
  CHECK(p.file_symbols() == 2);
  CHECK(p.generator == cauchy_matrix(p.field, 4, 4));
  CHECK(make_sharing(1, 0, 1).field.l == 1);
  CHECK(make_sharing(10, 4, 2).field.l == 5);
  CHECK_THROWS_AS(make_sharing(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_sharing(4, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_sharing(4, 2, 0), std::invalid_argument);
}

TEST_CASE("split_file validates shape and symbols") {
  const SharingParams p = make_sharing(4, 2, 3);
  SymbolVec file(6, 1);
  const auto subfiles = split_file(p, file);
  REQUIRE(subfiles.size() == 2);
  CHECK(subfiles[0] == SymbolVec{1, 1, 1});
  CHECK_THROWS_AS(split_file(p, SymbolVec(5, 0)), std::invalid_argument);
  file[3] = p.field.size(); // one past the top field element
  CHECK_THROWS_AS(split_file(p, file), std::invalid_argument);
}

TEST_CASE("encode then reconstruct is the identity") {
  std::mt19937_64 rng(2024);
  struct Shape { std::uint64_t n, m; int s; };
  for (const Shape sh : {Shape{4, 2, 1}, Shape{4, 2, 3}, Shape{6, 3, 2},
                         Shape{1, 0, 1}, Shape{3, 0, 2}, Shape{7, 6, 1}}) {
    const SharingParams p = make_sharing(sh.n, sh.m, sh.s);
    const SymbolVec file = random_vec(rng, p.file_symbols(), p.field.mask());
    const auto subfiles = split_file(p, file);
    const auto keys = random_blocks(rng, p.m, p.s, p.field.mask());
    const FileShares shares = encode_file(p, subfiles, keys);
    REQUIRE(shares.shares.size() == p.n);
    for (const auto& sh_vec : shares.shares) CHECK(sh_vec.size() == static_cast<std::size_t>(p.s));
    CHECK(reconstruct(p, shares.shares) == subfiles);
  }
}

TEST_CASE("reconstruct insists on the full share set") {
  const SharingParams p = make_sharing(4, 2, 1);
  std::mt19937_64 rng(5);
  const auto subfiles = split_file(p, random_vec(rng, 2, p.field.mask()));
  const auto shares = encode_file(p, subfiles, random_blocks(rng, 2, 1, p.field.mask()));
  auto partial = shares.shares;
  partial.pop_back();
  CHECK_THROWS_AS(reconstruct(p, partial), std::invalid_argument);
}

TEST_CASE("encode_file rejects mismatched blocks") {
  const SharingParams p = make_sharing(4, 2, 2);
  std::mt19937_64 rng(6);
  const auto subfiles = split_file(p, random_vec(rng, 4, p.field.mask()));
  const auto keys = random_blocks(rng, 2, 2, p.field.mask());
  CHECK_THROWS_AS(encode_file(p, {subfiles[0]}, keys), std::invalid_argument);
  CHECK_THROWS_AS(encode_file(p, subfiles, {keys[0]}), std::invalid_argument);
  auto short_keys = keys;
  short_keys[1].pop_back();
  CHECK_THROWS_AS(encode_file(p, subfiles, short_keys), std::invalid_argument);
}

TEST_CASE("leakage_test accepts every m-subset of the canonical generator") {
  for (std::uint64_t n : {4ull, 6ull, 10ull}) {
    const std::uint64_t m = n / 2;
    const SharingParams p = make_sharing(n, m, 1);
    for (const auto& pick : enumerate_subsets(static_cast<int>(n), static_cast<int>(m))) {
      std::vector<std::uint64_t> idx;
      for (int e : pick) idx.push_back(static_cast<std::uint64_t>(e - 1));
      CHECK(leakage_test(p, idx));
    }
  }
  const SharingParams p = make_sharing(4, 2, 1);
  CHECK(leakage_test(p, {}));
  CHECK_THROWS_AS(leakage_test(p, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(leakage_test(p, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(leakage_test(p, {4}), std::invalid_argument);
}

TEST_CASE("leakage_test flags a generator whose key columns collapse") {
  SharingParams p = make_sharing(4, 2, 1);
  // make the key columns of rows 0 and 1 identical: pooling those two shares
  // cancels the keys and exposes a pure subfile combination
  p.generator.at(1, 2) = p.generator.at(0, 2);
  p.generator.at(1, 3) = p.generator.at(0, 3);
  CHECK_FALSE(leakage_test(p, {0, 1}));
}

TEST_CASE("any m pooled shares are jointly independent of the file") {
  // small enough to enumerate the joint (file, keys) space exactly
  const SharingParams p = make_sharing(2, 1, 1); // GF(4), one subfile, one key
  const std::uint32_t q = p.field.size();
  for (std::uint64_t share_idx = 0; share_idx < p.n; ++share_idx) {
    // distribution of the pooled share value for each file value
    std::map<Symbol, std::map<Symbol, int>> hist;
    for (Symbol file = 0; file < q; ++file)
      for (Symbol key = 0; key < q; ++key) {
        const auto shares = encode_file(p, {{file}}, {{key}});
        ++hist[file][shares.shares[share_idx][0]];
      }
    for (Symbol file = 1; file < q; ++file) CHECK(hist[file] == hist[0]);
  }
}
