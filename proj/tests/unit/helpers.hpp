#pragma once

// Small builders and brute-force oracles shared by the unit tests. The
// oracles deliberately avoid the library's linear algebra.

#include "modbrick/hom.hpp"
#include "modbrick/module.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace testing_util {

using namespace modbrick;

/// Row-major matrix from field element codes.
inline Matrix mat(const FieldSpec& f, Index rows, Index cols, std::initializer_list<std::uint32_t> codes) {
  Matrix m = zeros(f, rows, cols);
  auto it = codes.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = f.from_code(*it++);
  return m;
}

/// Multiplication in GF(4) = GF(2)[x]/(x^2+x+1) on 2-bit codes (bit i = coefficient of x^i).
inline std::uint32_t gf4_mul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = 0;
  for (int i = 0; i < 2; ++i)
    if (b >> i & 1) r ^= a << i;
  if (r & 4) r ^= 0b111;
  return r;
}

/// dim Hom(M, N) by enumerating every matrix; needs q^(dim M * dim N) small.
inline Index brute_hom_dim(const Module& m, const Module& n) {
  const FieldSpec f = m.field();
  const Index cells = m.dim() * n.dim();
  const auto elems = f.elements();
  std::uint64_t total = 1;
  for (Index i = 0; i < cells; ++i) total *= f.order();
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix x = zeros(f, n.dim(), m.dim());
    std::uint64_t c = code;
    for (Index k = 0; k < cells; ++k, c /= f.order()) x(k / m.dim(), k % m.dim()) = elems[c % f.order()];
    bool ok = true;
    for (std::size_t s = 0; ok && s < m.group().num_generators(); ++s) {
      const Matrix lhs = x * m.generator_matrix(s);
      const Matrix rhs = n.generator_matrix(s) * x;
      for (Index i = 0; ok && i < lhs.rows(); ++i)
        for (Index j = 0; ok && j < lhs.cols(); ++j) ok = lhs(i, j) == rhs(i, j);
    }
    count += ok;
  }
  Index h = 0;
  while (count > 1) count /= f.order(), ++h;
  return h;
}

/// Number of partitions of n into parts of size at most k.
inline int partitions(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partitions(n - k, k) + partitions(n, k - 1);
}

/// Determinant by cofactor expansion.
inline long laplace_det(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * a[0][c] * laplace_det(minor);
  }
  return det;
}

}  // namespace testing_util
