#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>

namespace charnum {

template <class Scalar>
struct ExactSolution {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
  int rank = 0;
  bool consistent = true;
};

/// Solves A x = b by fraction-exact Gauss-Jordan elimination.  A may have more
/// rows than columns; extra rows are checked for consistency.  Throws
/// std::domain_error when the columns of A are dependent.
template <class Scalar>
ExactSolution<Scalar> solve_exact(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a,
                                  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (b.rows() != rows) throw std::invalid_argument("solve_exact: size mismatch");
  ExactSolution<Scalar> out;
  Eigen::Index pivot_row = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    Eigen::Index p = pivot_row;
    while (p < rows && a(p, c) == Scalar(0)) ++p;
    if (p == rows) throw std::domain_error("solve_exact: singular system");
    if (p != pivot_row) {
      a.row(p).swap(a.row(pivot_row));
      std::swap(b(p), b(pivot_row));
    }
    const Scalar inv = Scalar(1) / a(pivot_row, c);
    for (Eigen::Index j = c; j < cols; ++j) a(pivot_row, j) *= inv;
    b(pivot_row) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == pivot_row || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(pivot_row, j);
      b(i) -= f * b(pivot_row);
    }
    ++pivot_row;
  }
  out.rank = static_cast<int>(pivot_row);
  for (Eigen::Index i = pivot_row; i < rows; ++i)
    if (b(i) != Scalar(0)) out.consistent = false;
  out.x = b.head(cols);
  return out;
}

}  // namespace charnum
