#pragma once
// Non-perfect (m, n) secret sharing of a file through a fixed n x n Cauchy
// generator: the n outputs are field-linear combinations of n - m file
// subfiles and m uniform key blocks. Any m shares are independent of the
// file; all n reconstruct it.

#include "macc/gf.hpp"

#include <cstdint>
#include <vector>

namespace macc {

using SymbolVec = std::vector<Symbol>;

struct SharingParams {
  std::uint64_t n = 0;  // total shares
  std::uint64_t m = 0;  // shares any adversary may pool without learning the file
  int s = 1;            // symbols per share (and per subfile)
  FieldSpec field;
  FieldMatrix generator; // n x n; first n - m columns act on subfiles, last m on keys

  std::uint64_t subfile_count() const { return n - m; }
  std::uint64_t file_symbols() const { return subfile_count() * static_cast<std::uint64_t>(s); }
};

/// All shares of one file, indexed 0..n-1, each of length s.
struct FileShares {
  std::vector<SymbolVec> shares;
};

/// Parameters with the canonical Cauchy generator. Requires 0 <= m < n, s >= 1.
SharingParams make_sharing(std::uint64_t n, std::uint64_t m, int s);

/// Cut a file of (n - m) * s symbols into its n - m subfiles.
/// Throws std::invalid_argument for a wrong length or out-of-field symbols.
std::vector<SymbolVec> split_file(const SharingParams& p, const SymbolVec& file);

/// Apply the generator to [subfiles, keys]. keys must hold m vectors of s symbols.
FileShares encode_file(const SharingParams& p, const std::vector<SymbolVec>& subfiles,
                       const std::vector<SymbolVec>& keys);

/// Recover the n - m subfiles from all n shares (given in index order).
/// Fewer shares are rejected; the sharing is non-perfect but reconstruction
/// is only defined from the full set.
std::vector<SymbolVec> reconstruct(const SharingParams& p, const std::vector<SymbolVec>& shares);

/// True when pooling the given share indices reveals nothing about the file:
/// the key-column block restricted to those rows has full row rank, so every
/// linear functional of the pooled shares that touches a subfile also mixes
/// in a key. Requires distinct valid indices, at most m of them.
bool leakage_test(const SharingParams& p, const std::vector<std::uint64_t>& share_indices);

} // namespace macc
