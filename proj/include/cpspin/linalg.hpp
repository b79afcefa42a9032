#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "cpspin/scalar.hpp"

namespace cpspin {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Reduced row echelon form over Q. Returns pivot columns.
inline std::vector<int> rref_in_place(MatQ& A) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
    int p = -1;
    for (int r = row; r < A.rows(); ++r)
      if (A(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row) A.row(p).swap(A.row(row));
    Rational inv = Rational(1) / A(row, col);
    for (int c = col; c < A.cols(); ++c) A(row, c) *= inv;
    for (int r = 0; r < A.rows(); ++r) {
      if (r == row || A(r, col) == 0) continue;
      Rational f = A(r, col);
      for (int c = col; c < A.cols(); ++c) A(r, c) -= f * A(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int exact_rank(MatQ A) { return static_cast<int>(rref_in_place(A).size()); }

struct ExactSolve {
  bool consistent = false;
  bool unique = false;
  VecQ x;
};

// Solves A x = b exactly. x is filled when the system is consistent and has full column rank.
inline ExactSolve exact_solve(const MatQ& A, const VecQ& b) {
  MatQ aug(A.rows(), A.cols() + 1);
  aug.leftCols(A.cols()) = A;
  aug.col(A.cols()) = b;
  std::vector<int> piv = rref_in_place(aug);
  ExactSolve out;
  out.consistent = piv.empty() || piv.back() != A.cols();
  if (!out.consistent) return out;
  out.unique = static_cast<int>(piv.size()) == A.cols();
  if (out.unique) {
    out.x = VecQ(A.cols());
    for (int i = 0; i < A.cols(); ++i) out.x(i) = aug(i, A.cols());
  }
  return out;
}

inline std::optional<MatQ> exact_inverse(const MatQ& A) {
  const int n = static_cast<int>(A.rows());
  MatQ aug(n, 2 * n);
  aug.leftCols(n) = A;
  aug.rightCols(n) = MatQ::Identity(n, n);
  std::vector<int> piv = rref_in_place(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  return MatQ(aug.rightCols(n));
}

}  // namespace cpspin
