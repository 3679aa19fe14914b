#include "macc/gf.hpp"

#include <stdexcept>
#include <string>

namespace macc {

namespace {

// numerically smallest irreducible polynomial per degree 1..16
constexpr std::uint32_t kModulus[17] = {
    0,      0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,  0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b};

int poly_degree(std::uint32_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = poly_degree(b);
  int da = poly_degree(a);
  while (a && da >= db) {
    a ^= b << (da - db);
    da = poly_degree(a);
  }
  return a;
}

} // namespace

bool is_irreducible(std::uint32_t poly) {
  const int l = poly_degree(poly);
  if (l < 1 || l > 16) return false;
  for (std::uint32_t d = 2; poly_degree(d) <= l / 2; ++d)
    if (poly_mod(poly, d) == 0) return false;
  return true;
}

FieldSpec field_with_degree(int l) {
  if (l < 1 || l > 16)
    throw std::invalid_argument("field_with_degree: degree must be in 1..16, got " + std::to_string(l));
  FieldSpec f{l, kModulus[l]};
  if (!is_irreducible(f.modulus))
    throw std::logic_error("field_with_degree: modulus table entry is reducible");
  return f;
}

FieldSpec field_for(std::uint64_t n) {
  for (int l = 1; l <= 16; ++l)
    if ((std::uint64_t{1} << l) >= 2 * n) return field_with_degree(l);
  throw std::invalid_argument("field_for: 2*" + std::to_string(n) + " symbols exceed the 2^16 field cap");
}

std::vector<FieldSpec> modulus_table() {
  std::vector<FieldSpec> out;
  for (int l = 1; l <= 16; ++l) out.push_back(field_with_degree(l));
  return out;
}

Symbol gf_mul(const FieldSpec& f, Symbol a, Symbol b) {
  Symbol r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    if (a >> f.l) a ^= f.modulus;
    b >>= 1;
  }
  return r;
}

Symbol gf_inv(const FieldSpec& f, Symbol a) {
  if (a == 0) throw std::domain_error("gf_inv: zero has no inverse");
  // a^(2^l - 2) by square and multiply
  Symbol result = 1;
  Symbol base = a;
  std::uint32_t e = f.size() - 2;
  while (e) {
    if (e & 1) result = gf_mul(f, result, base);
    base = gf_mul(f, base, base);
    e >>= 1;
  }
  return result;
}

FieldMatrix cauchy_matrix(const FieldSpec& f, int u, int v) {
  if (u < 1 || v < 1) throw std::invalid_argument("cauchy_matrix: dimensions must be positive");
  if (static_cast<std::uint32_t>(u + v) > f.size())
    throw std::invalid_argument("cauchy_matrix: needs u + v distinct points, field too small");
  FieldMatrix m(u, v);
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < v; ++j)
      m.at(i, j) = gf_inv(f, static_cast<Symbol>(i) ^ static_cast<Symbol>(u + j));
  return m;
}

int matrix_rank(const FieldSpec& f, FieldMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, col)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    const Symbol inv = gf_inv(f, m.at(rank, col));
    for (int j = 0; j < m.cols; ++j) m.at(rank, j) = gf_mul(f, inv, m.at(rank, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || !m.at(i, col)) continue;
      const Symbol factor = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) ^= gf_mul(f, factor, m.at(rank, j));
    }
    ++rank;
  }
  return rank;
}

FieldMatrix matrix_solve(const FieldSpec& f, FieldMatrix A, FieldMatrix B) {
  if (A.rows != A.cols) throw std::invalid_argument("matrix_solve: matrix must be square");
  if (B.rows != A.rows) throw std::invalid_argument("matrix_solve: right-hand side row count mismatch");
  const int n = A.rows;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (A.at(i, col)) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::domain_error("matrix_solve: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(A.at(col, j), A.at(pivot, j));
      for (int j = 0; j < B.cols; ++j) std::swap(B.at(col, j), B.at(pivot, j));
    }
    const Symbol inv = gf_inv(f, A.at(col, col));
    for (int j = 0; j < n; ++j) A.at(col, j) = gf_mul(f, inv, A.at(col, j));
    for (int j = 0; j < B.cols; ++j) B.at(col, j) = gf_mul(f, inv, B.at(col, j));
    for (int i = 0; i < n; ++i) {
      if (i == col || !A.at(i, col)) continue;
      const Symbol factor = A.at(i, col);
      for (int j = 0; j < n; ++j) A.at(i, j) ^= gf_mul(f, factor, A.at(col, j));
      for (int j = 0; j < B.cols; ++j) B.at(i, j) ^= gf_mul(f, factor, B.at(col, j));
    }
  }
  return B;
}

} // namespace macc
