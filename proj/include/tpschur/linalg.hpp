#pragma once

// Dense types and determinant kernels. Rational matrices go through
// fraction-free (Bareiss) elimination, float matrices through partially
// pivoted elimination; naive expansion of the bialternant ratio is
// catastrophically cancellative in floating point.

#include <Eigen/Dense>

#include <vector>

#include "tpschur/errors.hpp"
#include "tpschur/scalar.hpp"

namespace tpschur {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using NodeSequence = std::vector<Scalar>;

namespace detail {

template <typename Scalar>
Scalar det_bareiss(Matrix<Scalar>& m) {
  const auto n = m.rows();
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (m(r, k) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return sign > 0 ? det : Scalar(-det);
}

template <typename Scalar>
Scalar det_partial_pivot(Matrix<Scalar>& m) {
  const auto n = m.rows();
  int sign = 1;
  Scalar det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    Scalar best = abs(m(k, k));
    for (Eigen::Index r = k + 1; r < n; ++r) {
      Scalar candidate = abs(m(r, k));
      if (candidate > best) {
        best = candidate;
        pivot = r;
      }
    }
    if (best == 0) return Scalar(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    det *= m(k, k);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      Scalar factor = m(r, k) / m(k, k);
      for (Eigen::Index c = k + 1; c < n; ++c) m(r, c) -= factor * m(k, c);
      m(r, k) = Scalar(0);
    }
  }
  return sign > 0 ? det : Scalar(-det);
}

}  // namespace detail

/// Determinant of a square matrix; exact for Rational entries.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix must be square");
  if (m.rows() == 0) return Scalar(1);
  if (m.rows() == 1) return m(0, 0);
  if constexpr (is_exact_v<Scalar>) {
    return detail::det_bareiss(m);
  } else {
    return detail::det_partial_pivot(m);
  }
}

/// Determinant of the submatrix picked by 1-based row and column index sets.
template <typename Scalar>
Scalar minor_det(const Matrix<Scalar>& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw DomainError("minor_det: index sets differ in size");
  const auto k = static_cast<Eigen::Index>(rows.size());
  Matrix<Scalar> sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      if (rows[r] < 1 || rows[r] > m.rows() || cols[c] < 1 || cols[c] > m.cols())
        throw DomainError("minor_det: index out of range");
      sub(r, c) = m(rows[r] - 1, cols[c] - 1);
    }
  }
  return determinant(std::move(sub));
}

/// det M[i-j+1..i | 1..j] (1-based, consecutive rows, leading columns);
/// the empty minor (j = 0) is 1.
template <typename Scalar>
Scalar initial_minor_det(const Matrix<Scalar>& m, int i, int j) {
  if (j == 0) return Scalar(1);
  if (j < 0 || j > i || i > m.rows() || j > m.cols())
    throw DomainError("initial minor indices must satisfy 0 < j <= i <= n");
  return determinant(Matrix<Scalar>(m.block(i - j, 0, j, j)));
}

}  // namespace tpschur
