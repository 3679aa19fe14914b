#pragma once
// Binary extension field arithmetic GF(2^l) for 1 <= l <= 16, plus the dense
// matrix operations the sharing layer needs. The modulus for each degree is
// the numerically smallest irreducible polynomial, fixed in one table so that
// encodings are stable across builds.

#include <cstdint>
#include <vector>

namespace macc {

using Symbol = std::uint32_t; // value < 2^l

struct FieldSpec {
  int l = 0;                  // extension degree, 1..16
  std::uint32_t modulus = 0;  // bit pattern including the x^l term

  std::uint32_t size() const { return 1u << l; }
  std::uint32_t mask() const { return (1u << l) - 1; }
};

/// Field of fixed degree l from the modulus table. Throws for l outside 1..16.
FieldSpec field_with_degree(int l);

/// Smallest field able to host an n x n Cauchy matrix: 2^l >= 2n.
/// Throws std::invalid_argument if that needs l > 16.
FieldSpec field_for(std::uint64_t n);

/// The (l, modulus) table rows, l = 1..16.
std::vector<FieldSpec> modulus_table();

/// Exhaustive trial-division irreducibility test over GF(2), degree <= 16.
bool is_irreducible(std::uint32_t poly);

inline Symbol gf_add(Symbol a, Symbol b) { return a ^ b; }

/// Carry-less multiply followed by reduction with the field modulus.
Symbol gf_mul(const FieldSpec& f, Symbol a, Symbol b);

/// Multiplicative inverse via a^(2^l - 2). Throws std::domain_error for a = 0.
Symbol gf_inv(const FieldSpec& f, Symbol a);

/// Row-major dense matrix of field symbols.
struct FieldMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Symbol> a;

  FieldMatrix() = default;
  FieldMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  Symbol& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Symbol at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const FieldMatrix&) const = default;
};

/// u x v Cauchy matrix with evaluation points x_i = i - 1, y_j = u + j - 1,
/// entries inv(x_i + y_j). Requires u + v <= 2^l so all points are distinct.
FieldMatrix cauchy_matrix(const FieldSpec& f, int u, int v);

/// Rank by Gaussian elimination.
int matrix_rank(const FieldSpec& f, FieldMatrix m);

/// Solve A * X = B for square A; B holds one column per right-hand side.
/// Throws std::invalid_argument on shape mismatch, std::domain_error if A
/// is singular.
FieldMatrix matrix_solve(const FieldSpec& f, FieldMatrix A, FieldMatrix B);

} // namespace macc
