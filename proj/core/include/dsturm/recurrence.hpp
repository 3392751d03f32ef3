#pragma once

#include <vector>

namespace dsturm {

/// Coefficient tables of the three-term recurrence
///   gamma_{l-1} P_{l-1} + alpha_l P_l + beta_l P_{l+1} = lambda rho_l P_l,
/// P_{-1} = 0, P_0 = 1, for l = 0..q, with boundary parameter eta.
struct RecurrenceSystem {
  int q = 0;
  std::vector<double> alpha;  ///< alpha_0..alpha_q
  std::vector<double> beta;   ///< beta_0..beta_q, positive
  std::vector<double> gamma;  ///< gamma_0..gamma_{q-1}, positive
  std::vector<double> rho;    ///< rho_0..rho_q, positive
  double eta = 0.0;
};

/// Throws InputError unless lengths match q and beta, gamma, rho are
/// strictly positive and everything is finite.
void validate(const RecurrenceSystem& sys);

/// Weights derived from a recurrence.
struct DerivedWeights {
  std::vector<double> d;  ///< orthonormalization weights d_0..d_q
  std::vector<double> w;  ///< self-adjoint weights w_0..w_q
  std::vector<double> c;  ///< potential c_0..c_q (gamma_{-1} taken as 0)
  std::vector<double> k;  ///< leading coefficients k_0..k_{q+1}
  std::vector<double> A;  ///< monic recurrence shifts A_0..A_q
  std::vector<double> B;  ///< monic recurrence couplings B_0..B_q, B_0 = 1/rho_0
};

[[nodiscard]] DerivedWeights derive_weights(const RecurrenceSystem& sys);

/// P_0(lambda)..P_{l_max}(lambda) by forward recurrence, 0 <= l_max <= q+1.
[[nodiscard]] std::vector<double> eval_polys(const RecurrenceSystem& sys,
                                             int l_max, double lambda);

/// P_{q+1}(lambda) - eta P_q(lambda).
[[nodiscard]] double eval_ptilde(const RecurrenceSystem& sys, double lambda);

/// sum_{s<=l} d_s P_s(x) P_s(y). Uses the direct sum when
/// |x - y| < 1e-8 (1 + |x|) and the Christoffel-Darboux closed form otherwise.
[[nodiscard]] double cd_kernel(const RecurrenceSystem& sys, int l, double x,
                               double y);

/// Direct-sum branch of cd_kernel, exposed for cross-checking.
[[nodiscard]] double cd_kernel_sum(const RecurrenceSystem& sys, int l, double x,
                                   double y);

/// Closed-form branch of cd_kernel, requires x != y.
[[nodiscard]] double cd_kernel_closed(const RecurrenceSystem& sys, int l,
                                      double x, double y);

/// Gauss rule for the orthogonality measure, normalized to total mass 1/rho_0.
struct Quadrature {
  std::vector<double> nodes;    ///< strictly increasing
  std::vector<double> weights;  ///< positive
  int degree_exact = 0;         ///< 2 * nodes.size() - 1
};

/// Gauss rule with n_nodes nodes (the zeros of P_{n_nodes}); needs
/// 1 <= n_nodes <= q + 1.
[[nodiscard]] Quadrature gauss_quadrature(const RecurrenceSystem& sys,
                                          int n_nodes);

/// max over l, m < n_nodes of |d_l sum_j w_j P_l(x_j) P_m(x_j) - delta_lm|.
[[nodiscard]] double quadrature_orthonormality_residual(
    const RecurrenceSystem& sys, const Quadrature& quad);

/// Symmetrized Jacobi matrix of the eta-perturbed problem: diagonal
/// alpha_l / rho_l (last entry (alpha_q + eta beta_q) / rho_q) and
/// off-diagonal sqrt(gamma_l beta_l / (rho_l rho_{l+1})). With
/// perturbed == false the last diagonal entry is alpha_q / rho_q.
/// size selects the leading size x size block (size <= q + 1).
struct JacobiMatrix {
  std::vector<double> diag;
  std::vector<double> off;
};
[[nodiscard]] JacobiMatrix jacobi_matrix(const RecurrenceSystem& sys, int size,
                                         bool perturbed);

/// The system with alpha, beta, gamma, rho truncated to grid size q_new <= q.
[[nodiscard]] RecurrenceSystem truncate(const RecurrenceSystem& sys, int q_new,
                                        double eta);

/// Monic recurrence p_{l+1} = (x - A_l) p_l - B_l p_{l-1} written as a
/// RecurrenceSystem (rho = beta = 1, gamma_{l-1} = B_l). A has q+1
/// entries, B has q+1 entries and B[0] is ignored.
[[nodiscard]] RecurrenceSystem from_monic(const std::vector<double>& A,
                                          const std::vector<double>& B,
                                          double eta);

/// Rescales a system so that P_l(point) = 1 for l = 0..q+1. Requires
/// P_l(point) > 0, which holds whenever point lies right of every zero.
[[nodiscard]] RecurrenceSystem normalize_at(const RecurrenceSystem& sys,
                                            double point);

}  // namespace dsturm
