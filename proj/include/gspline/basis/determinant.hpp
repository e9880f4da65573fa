#pragma once

#include <gspline/error.hpp>
#include <gspline/ring/ring.hpp>

#include <Eigen/Core>

namespace gspline {

/// Exact determinant over an integral domain by fraction-free (Bareiss)
/// elimination with row pivoting. Every division is exact, so no field of
/// fractions is needed. The sign is not normalised.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using R = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw precondition_error("determinant of a non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return R(1);
  Matrix<R> m = input;
  R previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return R(0);
      m.row(k).swap(m.row(swap_row));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      m(i, k) = R(0);
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace gspline
