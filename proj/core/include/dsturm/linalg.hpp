#pragma once

#include <vector>

namespace dsturm {

/// Dense row-major matrix used at the library boundary.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

/// Determinant by partially pivoted LU.
[[nodiscard]] double determinant(const Matrix& m);

/// Solves m x = b by partially pivoted LU; throws NumericalError when the
/// factorization hits an exactly zero pivot.
[[nodiscard]] std::vector<double> solve(const Matrix& m, const std::vector<double>& b);

/// Rank from a fully pivoted LU with threshold rel_tol relative to the
/// largest pivot.
[[nodiscard]] int numerical_rank(const Matrix& m, double rel_tol);

/// Smaller of the two Hadamard bounds: the product of row norms and the
/// product of column norms of a square matrix.
[[nodiscard]] double hadamard_bound(const Matrix& m);

}  // namespace dsturm
