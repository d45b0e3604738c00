#pragma once

// Exact dense linear algebra over an ordered field. Eigen's decompositions
// pivot on magnitude thresholds, which is meaningless for exact scalars, so the
// handful of routines we need are written out here.

#include "tk/rational.hpp"

#include <vector>

namespace tk {

/// Reduced row echelon form in place; returns pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> reduce_row_echelon(Mat<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != Scalar(0)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> work = m;
  return static_cast<Eigen::Index>(reduce_row_echelon(work).size());
}

/// Determinant by fraction-carrying Gaussian elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (a(r, col) != Scalar(0)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) return Scalar(0);
    if (sel != col) {
      a.row(sel).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == Scalar(0)) continue;
      const Scalar f = a(r, col) / a(col, col);
      a.row(r) -= f * a.row(col);
    }
  }
  return det;
}

/// Basis of {x : m x = 0}, one basis vector per column of the result.
template <typename Derived>
Mat<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> r = m;
  const auto pivots = reduce_row_echelon(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Mat<Scalar> basis(m.cols(), m.cols() - static_cast<Eigen::Index>(pivots.size()));
  basis.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis(pivots[i], k) = -r(static_cast<Eigen::Index>(i), free);
    }
    ++k;
  }
  return basis;
}

/// Row space basis (rows of the result).
template <typename Derived>
Mat<typename Derived::Scalar> row_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> r = m;
  const auto pivots = reduce_row_echelon(r);
  return r.topRows(static_cast<Eigen::Index>(pivots.size()));
}

/// All k-element index subsets of {0, ..., n-1}, lexicographic.
inline std::vector<std::vector<Eigen::Index>> index_subsets(Eigen::Index n, Eigen::Index k) {
  std::vector<std::vector<Eigen::Index>> out;
  if (k < 0 || k > n) return out;
  std::vector<Eigen::Index> cur(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    Eigen::Index i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < k; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

/// Maximal (k x k, k = min(rows, cols)) minors in lexicographic order of
/// (row subset, column subset).
template <typename Derived>
std::vector<typename Derived::Scalar> maximal_minors(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index k = std::min(m.rows(), m.cols());
  std::vector<Scalar> out;
  for (const auto& rows : index_subsets(m.rows(), k)) {
    for (const auto& cols : index_subsets(m.cols(), k)) {
      Mat<Scalar> sub(k, k);
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
          sub(i, j) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
      out.push_back(determinant(sub));
    }
  }
  return out;
}

}  // namespace tk
