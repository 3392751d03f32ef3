#pragma once

#include <string>
#include <vector>

#include "dsturm/recurrence.hpp"

namespace dsturm {

/// Eigenvalues and eigenfunctions of the eta-perturbed discrete problem.
struct Spectrum {
  int q = 0;
  std::vector<double> lambdas;           ///< lambda_1 > ... > lambda_{q+1}
  std::vector<std::vector<double>> psi;  ///< psi[k][nu] = P_nu(lambda_{k+1}), nu = 0..q
  std::vector<double> boundary;          ///< P_{q+1}(lambda_k) per eigenvalue
  std::vector<double> residuals;         ///< |Ptilde_{q+1}(lambda_k)|
  std::vector<double> row_scale;         ///< max_nu |psi_k(nu)| over nu = 0..q+1
  double ptilde_norm = 0.0;              ///< sampled max |Ptilde| over the eigenvalue range
};

/// Zeros of Ptilde_{q+1} as eigenvalues of the symmetrized Jacobi matrix,
/// with the eigenfunction table filled by forward recurrence. Throws
/// NumericalError if any residual exceeds 1e-8 of the larger of ptilde_norm
/// and the row scale, or if the eigenvalues are not strictly descending.
[[nodiscard]] Spectrum compute_spectrum(const RecurrenceSystem& sys);

/// Zeros of P_l in descending order, 1 <= l <= q + 1.
[[nodiscard]] std::vector<double> polynomial_zeros(const RecurrenceSystem& sys,
                                                   int l);

struct InterlacingReport {
  bool pass = true;
  std::string violation;  ///< first failed inequality, empty on success
};

/// Checks that zeros of P_{l-1} strictly interlace those of P_l for
/// l = 2..q, and that zeros of P_q strictly interlace those of Ptilde_{q+1}.
[[nodiscard]] InterlacingReport interlacing_check(const RecurrenceSystem& sys);

/// max_{k != s} |sum_nu d_nu psi_k psi_s| / (norm_k norm_s).
[[nodiscard]] double discrete_orthogonality_check(const RecurrenceSystem& sys,
                                                  const Spectrum& spec);

}  // namespace dsturm
