#pragma once

#include <span>
#include <vector>

namespace dsturm {

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
/// that are strictly less than x, from the signs of the LDL^T pivots.
[[nodiscard]] int sturm_count(std::span<const double> diag,
                              std::span<const double> off, double x);

/// All eigenvalues of a symmetric tridiagonal matrix in descending order.
/// off[i] couples rows i and i+1, so off.size() == diag.size() - 1.
/// Each eigenvalue is isolated by bisection on sturm_count, starting from
/// the Gershgorin interval.
[[nodiscard]] std::vector<double> tridiagonal_eigenvalues(
    std::span<const double> diag, std::span<const double> off);

}  // namespace dsturm
