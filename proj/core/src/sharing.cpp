#include "macc/sharing.hpp"

#include <set>
#include <stdexcept>

namespace macc {

SharingParams make_sharing(std::uint64_t n, std::uint64_t m, int s) {
  if (n == 0 || m >= n) throw std::invalid_argument("make_sharing: need 0 <= m < n");
  if (s < 1) throw std::invalid_argument("make_sharing: share length must be positive");
  SharingParams p;
  p.n = n;
  p.m = m;
  p.s = s;
  p.field = field_for(n);
  p.generator = cauchy_matrix(p.field, static_cast<int>(n), static_cast<int>(n));
  return p;
}

std::vector<SymbolVec> split_file(const SharingParams& p, const SymbolVec& file) {
  if (file.size() != p.file_symbols())
    throw std::invalid_argument("split_file: file length mismatch");
  for (Symbol sym : file)
    if (sym > p.field.mask()) throw std::invalid_argument("split_file: symbol outside field");
  std::vector<SymbolVec> out(p.subfile_count());
  for (std::uint64_t k = 0; k < p.subfile_count(); ++k)
    out[k].assign(file.begin() + static_cast<long>(k) * p.s,
                  file.begin() + static_cast<long>(k + 1) * p.s);
  return out;
}

FileShares encode_file(const SharingParams& p, const std::vector<SymbolVec>& subfiles,
                       const std::vector<SymbolVec>& keys) {
  if (subfiles.size() != p.subfile_count())
    throw std::invalid_argument("encode_file: subfile count mismatch");
  if (keys.size() != p.m) throw std::invalid_argument("encode_file: key count mismatch");
  auto check = [&](const std::vector<SymbolVec>& v) {
    for (const auto& blk : v) {
      if (blk.size() != static_cast<std::size_t>(p.s))
        throw std::invalid_argument("encode_file: block length mismatch");
      for (Symbol sym : blk)
        if (sym > p.field.mask()) throw std::invalid_argument("encode_file: symbol outside field");
    }
  };
  check(subfiles);
  check(keys);

  FileShares out;
  out.shares.assign(p.n, SymbolVec(p.s, 0));
  for (std::uint64_t row = 0; row < p.n; ++row) {
    for (std::uint64_t col = 0; col < p.n; ++col) {
      const SymbolVec& src = col < p.subfile_count() ? subfiles[col] : keys[col - p.subfile_count()];
      const Symbol g = p.generator.at(static_cast<int>(row), static_cast<int>(col));
      if (!g) continue;
      for (int k = 0; k < p.s; ++k)
        out.shares[row][k] ^= gf_mul(p.field, g, src[k]);
    }
  }
  return out;
}

std::vector<SymbolVec> reconstruct(const SharingParams& p, const std::vector<SymbolVec>& shares) {
  if (shares.size() != p.n)
    throw std::invalid_argument("reconstruct: needs all n shares");
  FieldMatrix rhs(static_cast<int>(p.n), p.s);
  for (std::uint64_t i = 0; i < p.n; ++i) {
    if (shares[i].size() != static_cast<std::size_t>(p.s))
      throw std::invalid_argument("reconstruct: share length mismatch");
    for (int k = 0; k < p.s; ++k) rhs.at(static_cast<int>(i), k) = shares[i][k];
  }
  FieldMatrix sources = matrix_solve(p.field, p.generator, rhs);
  std::vector<SymbolVec> out(p.subfile_count(), SymbolVec(p.s));
  for (std::uint64_t k = 0; k < p.subfile_count(); ++k)
    for (int j = 0; j < p.s; ++j) out[k][j] = sources.at(static_cast<int>(k), j);
  return out;
}

bool leakage_test(const SharingParams& p, const std::vector<std::uint64_t>& share_indices) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t idx : share_indices) {
    if (idx >= p.n) throw std::invalid_argument("leakage_test: share index out of range");
    if (!seen.insert(idx).second) throw std::invalid_argument("leakage_test: duplicate share index");
  }
  if (share_indices.size() > p.m)
    throw std::invalid_argument("leakage_test: more indices than the sharing can hide");
  if (share_indices.empty()) return true;
  // key-column block restricted to the pooled rows
  FieldMatrix sub(static_cast<int>(share_indices.size()), static_cast<int>(p.m));
  int row = 0;
  for (std::uint64_t idx : share_indices) {
    for (std::uint64_t j = 0; j < p.m; ++j)
      sub.at(row, static_cast<int>(j)) =
          p.generator.at(static_cast<int>(idx), static_cast<int>(p.subfile_count() + j));
    ++row;
  }
  return matrix_rank(p.field, sub) == static_cast<int>(share_indices.size());
}

} // namespace macc
