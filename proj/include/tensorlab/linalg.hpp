#ifndef TENSORLAB_LINALG_HPP
#define TENSORLAB_LINALG_HPP

#include <span>
#include <vector>

#include <Eigen/Core>

#include "tensorlab/field.hpp"

namespace tensorlab {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Reduced row echelon form together with its pivot columns.
template <class S>
struct RowEchelon {
  Matrix<S> reduced;
  std::vector<Index> pivot_cols;

  Index rank() const noexcept { return static_cast<Index>(pivot_cols.size()); }
};

/// Gauss-Jordan elimination. The pivot of each column is the first nonzero
/// entry at or below the current row, so the result is deterministic.
template <class Derived>
RowEchelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RowEchelon<S> out{m, {}};
  Matrix<S>& a = out.reduced;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Index k = col; k < a.cols(); ++k) a(row, k) = a(row, k) * inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const S f = a(r, col);
      for (Index k = col; k < a.cols(); ++k) a(r, k) = a(r, k) - f * a(row, k);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

/// Exact rank by forward elimination.
template <class Derived>
Index matrix_rank(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Matrix<S> a = m;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Index r = row + 1; r < a.rows(); ++r) {
      if (a(r, col).is_zero()) continue;
      const S f = a(r, col) * inv;
      for (Index k = col; k < a.cols(); ++k) a(r, k) = a(r, k) - f * a(row, k);
    }
    ++row;
  }
  return row;
}

/// Basis of the right null space, one vector per free column of the RREF.
/// Free column f yields v with v[f] = 1 and v[pivot_i] = -R(i, f).
template <class Derived>
std::vector<Vector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector<S>> basis;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector<S> v = Vector<S>::Zero(m.cols());
    v(f) = S(1);
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
      v(ech.pivot_cols[i]) = -ech.reduced(static_cast<Index>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Matrix whose columns are the given vectors (all of one length).
template <class S>
Matrix<S> columns_matrix(std::span<const Vector<S>> vectors) {
  if (vectors.empty()) return Matrix<S>(0, 0);
  Matrix<S> out(vectors.front().size(), static_cast<Index>(vectors.size()));
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    if (vectors[a].size() != out.rows())
      throw Error(Errc::SignatureMismatch, "vectors of different lengths");
    out.col(static_cast<Index>(a)) = vectors[a];
  }
  return out;
}

template <class S>
Index span_dimension(std::span<const Vector<S>> vectors) {
  return vectors.empty() ? 0 : matrix_rank(columns_matrix<S>(vectors));
}

/// Operator Π with ker(Π) = span(vectors) and rank(Π) = d - dim span.
/// The rows of Π are the kernel basis of the matrix having `vectors` as rows.
template <class S>
Matrix<S> annihilator(std::span<const Vector<S>> vectors) {
  if (vectors.empty()) throw Error(Errc::InvalidArgument, "annihilator of an empty list");
  const Matrix<S> rows = columns_matrix<S>(vectors).transpose();
  auto basis = kernel_basis(rows);
  if (basis.empty())
    throw Error(Errc::SpanIsFullSpace, "vectors span the whole space; no nonzero annihilator exists");
  Matrix<S> pi(static_cast<Index>(basis.size()), rows.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) pi.row(static_cast<Index>(i)) = basis[i].transpose();
  return pi;
}

template <class S>
Matrix<S> annihilator(const std::vector<Vector<S>>& vectors) {
  return annihilator(std::span<const Vector<S>>(vectors));
}

/// Index of the first nonzero coordinate, or -1 for the zero vector.
template <class Derived>
Index leading_index(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return i;
  return -1;
}

}  // namespace tensorlab

#endif  // TENSORLAB_LINALG_HPP
