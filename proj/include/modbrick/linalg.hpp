#pragma once

// Exact dense linear algebra over any field-like Eigen scalar.
//
// Scalars need +, -, *, unary -, is_zero(s) and inverse(s) (found by ADL).
// Subspaces are passed around as matrices whose columns form a basis.

#include "modbrick/error.hpp"
#include "modbrick/field.hpp"

#include <Eigen/Core>

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace modbrick {

using Eigen::Index;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

template <class Scalar>
inline void row_axpy(Scalar* dst, const Scalar* src, const Scalar& factor, Index begin, Index end) {
  for (Index k = begin; k < end; ++k) dst[k] -= factor * src[k];
}

// Raw-code elimination; this is the hot loop of every Hom computation.
inline void row_axpy(FieldElem* dst, const FieldElem* src, const FieldElem& factor, Index begin,
                     Index end) {
  const FieldData* f = factor.field_data();
  for (Index k = begin; !f && k < end; ++k) f = src[k].field_data();
  if (!f) {
    for (Index k = begin; k < end; ++k) dst[k] -= factor * src[k];
    return;
  }
  const std::uint32_t c = factor.code();
  if (f->p == 2) {
    for (Index k = begin; k < end; ++k) {
      const std::uint32_t s = src[k].code();
      if (s) dst[k] = FieldElem(f, dst[k].code() ^ f->mul(c, s));
    }
  } else {
    for (Index k = begin; k < end; ++k) {
      const std::uint32_t s = src[k].code();
      if (s) dst[k] = FieldElem(f, f->sub(dst[k].code(), f->mul(c, s)));
    }
  }
}

template <class Scalar>
inline Scalar unit_like(const Scalar* data, Index n) {
  if constexpr (std::is_same_v<Scalar, FieldElem>) {
    for (Index i = 0; i < n; ++i)
      if (data[i].field_data()) return FieldElem(data[i].field_data(), 1);
    return FieldElem(1);
  } else {
    (void)data;
    (void)n;
    return Scalar(1);
  }
}

template <class Scalar>
inline Scalar zero_like(const Scalar& unit) {
  return unit - unit;
}

}  // namespace detail

template <class Scalar>
struct RrefResult {
  DenseMatrix<Scalar> reduced;
  Index rank = 0;
  std::vector<Index> pivots;      // pivot column of row i, i < rank
  DenseMatrix<Scalar> kernel;     // columns form a basis of {v : A v = 0}
};

/// Reduced row echelon form, rank, pivot columns and a kernel basis.
template <class Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& a, bool with_kernel = true) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out;
  DenseMatrix<Scalar>& r = out.reduced;
  r = a;
  const Index rows = r.rows();
  const Index cols = r.cols();
  const Scalar one = detail::unit_like(r.data(), r.size());

  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index piv = -1;
    for (Index i = rank; i < rows; ++i) {
      if (!is_zero(r(i, col))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) r.row(piv).swap(r.row(rank));
    const Scalar inv = inverse(r(rank, col));
    Scalar* prow = r.row(rank).data();
    for (Index k = col; k < cols; ++k) prow[k] = prow[k] * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const Scalar factor = r(i, col);
      if (is_zero(factor)) continue;
      detail::row_axpy(r.row(i).data(), prow, factor, col, cols);
    }
    out.pivots.push_back(col);
    ++rank;
  }
  out.rank = rank;

  if (with_kernel) {
    const Scalar zero = detail::zero_like(one);
    std::vector<bool> is_pivot(cols, false);
    for (Index c : out.pivots) is_pivot[c] = true;
    out.kernel = DenseMatrix<Scalar>::Constant(cols, cols - rank, zero);
    Index k = 0;
    for (Index free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      out.kernel(free, k) = one;
      for (Index i = 0; i < rank; ++i) out.kernel(out.pivots[i], k) = -r(i, free);
      ++k;
    }
  }
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  return rref(a, false).rank;
}

template <class Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  return rref(a, true).kernel;
}

/// Some x with A x = b (free variables zero), or nullopt when inconsistent.
template <class DerivedA, class DerivedB>
std::optional<DenseVector<typename DerivedA::Scalar>> solve_linear(const Eigen::MatrixBase<DerivedA>& a,
                                                                   const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (b.cols() != 1 || b.rows() != a.rows())
    raise(ErrorKind::DimensionMismatch, "solve_linear: right-hand side has the wrong shape");
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto red = rref(aug, false);
  const Scalar one = detail::unit_like(aug.data(), aug.size());
  DenseVector<Scalar> x = DenseVector<Scalar>::Constant(a.cols(), detail::zero_like(one));
  for (Index i = 0; i < red.rank; ++i) {
    if (red.pivots[i] == a.cols()) return std::nullopt;
    x(red.pivots[i]) = red.reduced(i, a.cols());
  }
  return x;
}

/// Solves A X = B column by column; nullopt if any column is inconsistent.
template <class DerivedA, class DerivedB>
std::optional<DenseMatrix<typename DerivedA::Scalar>> solve_matrix(const Eigen::MatrixBase<DerivedA>& a,
                                                                   const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (b.rows() != a.rows()) raise(ErrorKind::DimensionMismatch, "solve_matrix: row mismatch");
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  const auto red = rref(aug, false);
  const Scalar one = detail::unit_like(aug.data(), aug.size());
  DenseMatrix<Scalar> x = DenseMatrix<Scalar>::Constant(a.cols(), b.cols(), detail::zero_like(one));
  for (Index i = 0; i < red.rank; ++i) {
    if (red.pivots[i] >= a.cols()) return std::nullopt;
    x.row(red.pivots[i]) = red.reduced.row(i).tail(b.cols());
  }
  return x;
}

template <class Derived>
std::optional<DenseMatrix<typename Derived::Scalar>> inverse_matrix(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) return std::nullopt;
  const Index n = a.rows();
  const Scalar one = detail::unit_like(a.derived().eval().data(), a.size());
  DenseMatrix<Scalar> aug = DenseMatrix<Scalar>::Constant(n, 2 * n, detail::zero_like(one));
  aug.leftCols(n) = a;
  for (Index i = 0; i < n; ++i) aug(i, n + i) = one;
  const auto red = rref(aug, false);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  return DenseMatrix<Scalar>(red.reduced.rightCols(n));
}

template <class Derived>
bool is_invertible(const Eigen::MatrixBase<Derived>& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

/// Canonical basis of the column space: columns are the nonzero rows of rref(A^T).
/// Two matrices span the same space iff their column_space results are equal.
template <class Derived>
DenseMatrix<typename Derived::Scalar> column_space(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto red = rref(DenseMatrix<Scalar>(a.transpose()), false);
  return red.reduced.topRows(red.rank).transpose();
}

template <class DerivedA, class DerivedB>
DenseMatrix<typename DerivedA::Scalar> span_sum(const Eigen::MatrixBase<DerivedA>& a,
                                                const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  DenseMatrix<Scalar> both(a.rows(), a.cols() + b.cols());
  both.leftCols(a.cols()) = a;
  both.rightCols(b.cols()) = b;
  return column_space(both);
}

/// Basis of span(A) ∩ span(B); A and B must have independent columns.
template <class DerivedA, class DerivedB>
DenseMatrix<typename DerivedA::Scalar> span_intersection(const Eigen::MatrixBase<DerivedA>& a,
                                                         const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  DenseMatrix<Scalar> both(a.rows(), a.cols() + b.cols());
  both.leftCols(a.cols()) = a;
  both.rightCols(b.cols()) = -b;
  const auto ker = kernel_basis(both);
  return column_space(DenseMatrix<Scalar>(a * ker.topRows(a.cols())));
}

/// Row indices P such that the rows P of a full-column-rank B are invertible.
template <class Derived>
std::vector<Index> independent_rows(const Eigen::MatrixBase<Derived>& b) {
  using Scalar = typename Derived::Scalar;
  const auto red = rref(DenseMatrix<Scalar>(b.transpose()), false);
  return red.pivots;
}

/// L with L * B = I for a basis matrix B (independent columns).
template <class Derived>
DenseMatrix<typename Derived::Scalar> left_inverse(const Eigen::MatrixBase<Derived>& b) {
  using Scalar = typename Derived::Scalar;
  const auto rows = independent_rows(b);
  const Index k = b.cols();
  if (static_cast<Index>(rows.size()) != k)
    raise(ErrorKind::DimensionMismatch, "left_inverse: columns are dependent");
  DenseMatrix<Scalar> sub(k, k);
  for (Index i = 0; i < k; ++i) sub.row(i) = b.row(rows[i]);
  const auto inv = inverse_matrix(sub);
  const Scalar one = detail::unit_like(sub.data(), sub.size());
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Constant(k, b.rows(), detail::zero_like(one));
  for (Index i = 0; i < k; ++i) out.col(rows[i]) = inv->col(i);
  return out;
}

/// Standard basis vectors completing span(B) to the whole space, in index order.
template <class Derived>
DenseMatrix<typename Derived::Scalar> complement_basis(const Eigen::MatrixBase<Derived>& b,
                                                       typename Derived::Scalar unit) {
  using Scalar = typename Derived::Scalar;
  const Index d = b.rows();
  const Scalar zero = detail::zero_like(unit);
  DenseMatrix<Scalar> aug = DenseMatrix<Scalar>::Constant(d, b.cols() + d, zero);
  aug.leftCols(b.cols()) = b;
  for (Index i = 0; i < d; ++i) aug(i, b.cols() + i) = unit;
  const auto red = rref(aug, false);
  std::vector<Index> picked;
  for (Index c : red.pivots)
    if (c >= b.cols()) picked.push_back(c - b.cols());
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Constant(d, static_cast<Index>(picked.size()), zero);
  for (std::size_t k = 0; k < picked.size(); ++k) out(picked[k], static_cast<Index>(k)) = unit;
  return out;
}

/// Incrementally grown subspace kept in reduced row form (vectors are rows).
template <class Scalar>
class EchelonBasis {
 public:
  explicit EchelonBasis(Index dim) : dim_(dim) {}

  Index dim() const { return dim_; }
  Index size() const { return static_cast<Index>(rows_.size()); }

  /// Reduces v against the basis in place; returns true if v becomes zero.
  bool reduce(DenseVector<Scalar>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = v(pivots_[i]);
      if (!is_zero(c)) detail::row_axpy(v.data(), rows_[i].data(), c, 0, dim_);
    }
    return is_zero_matrix(v);
  }

  bool contains(DenseVector<Scalar> v) const { return reduce(v); }

  /// Adds v if it is new; returns whether the span grew.
  bool insert(DenseVector<Scalar> v) {
    if (reduce(v)) return false;
    Index piv = 0;
    while (is_zero(v(piv))) ++piv;
    v *= inverse(v(piv));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = rows_[i](piv);
      if (!is_zero(c)) detail::row_axpy(rows_[i].data(), v.data(), c, 0, dim_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  /// Basis vectors as columns, in insertion order.
  DenseMatrix<Scalar> matrix() const {
    DenseMatrix<Scalar> m(dim_, size());
    for (Index i = 0; i < size(); ++i) m.col(i) = rows_[i];
    return m;
  }

 private:
  Index dim_;
  std::vector<DenseVector<Scalar>> rows_;
  std::vector<Index> pivots_;
};

/// Kronecker product A ⊗ B (block (i, j) is A(i, j) * B).
template <class DerivedA, class DerivedB>
DenseMatrix<typename DerivedA::Scalar> kronecker(const Eigen::MatrixBase<DerivedA>& a,
                                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  DenseMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace modbrick
