#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dsturm/linalg.hpp"
#include "dsturm/spectrum.hpp"

namespace dsturm {

/// n discrete functions on the grid 0..q, one per row.
class SystemTable {
 public:
  explicit SystemTable(std::vector<std::vector<double>> rows, double sign_tol = 1e-9);

  [[nodiscard]] int n() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int q() const { return static_cast<int>(rows_.front().size()) - 1; }
  [[nodiscard]] double sign_tol() const { return sign_tol_; }
  /// phi_{k+1}(nu); k is 0-based.
  [[nodiscard]] double operator()(int k, int nu) const { return rows_[k][nu]; }
  [[nodiscard]] const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<double>> rows_;
  double sign_tol_;
};

/// 1, nu, ..., nu^{n-1} on 0..q.
[[nodiscard]] SystemTable monomial_system(int n, int q);

/// The q functions phi_k = [nu = k-1] + [nu = q] (k < q) and
/// phi_q = [nu = q-1] - [nu = q]; a T0 system that is not T_Z. q >= 2.
[[nodiscard]] SystemTable t0_counterexample_system(int q);

/// Rows psi_1..psi_n of a spectrum.
[[nodiscard]] SystemTable psi_system(const Spectrum& spec, int n);

/// Matrix with entry (i, j) = phi_{j+1}(points[i]).
[[nodiscard]] Matrix point_matrix(const SystemTable& s, std::span<const int> points);

/// det(phi_j(nu_i)) for strictly increasing points, one per function.
[[nodiscard]] double gram_det(const SystemTable& s, std::span<const int> nu);

enum class TKind { T_Z, T0_only, neither };
[[nodiscard]] const char* to_string(TKind k);

struct TSystemCertificate {
  TKind kind = TKind::neither;
  int common_sign = 0;         ///< +1 or -1 for T_Z, 0 otherwise
  std::vector<int> witness;    ///< offending point set for non-T_Z kinds
  double witness_det = 0.0;
  double min_abs_det = 0.0;    ///< smallest |det| met during the sweep
  std::uint64_t subsets_checked = 0;
};

struct CertifyOptions {
  std::uint64_t budget = 2'000'000;  ///< maximum number of n-point subsets
  double det_rel_tol = 1e-10;        ///< relative to the Hadamard bound
};

/// Full colexicographic sweep of all n-point subsets. A determinant with
/// |det| <= det_rel_tol * hadamard_bound counts as zero and ends the sweep.
[[nodiscard]] TSystemCertificate certify(const SystemTable& s,
                                         const CertifyOptions& opt = {});

struct SampledCheck {
  bool refuted = false;
  TKind kind = TKind::T_Z;  ///< T0_only or neither when refuted
  std::vector<int> witness;
  double witness_det = 0.0;
  double min_abs_det = 0.0;
  std::uint64_t samples = 0;
};

/// Random subsets only; it can refute the T_Z property but never certify it.
[[nodiscard]] SampledCheck certify_sampled(const SystemTable& s,
                                           std::uint64_t samples,
                                           std::uint64_t seed,
                                           double det_rel_tol = 1e-10);

/// Signed cofactors (-1)^i Delta_{nu_i} for n + 1 points, scaled to
/// max |lambda_i| = 1. The functional sum lambda_i p(nu_i) annihilates
/// every row of s.
[[nodiscard]] std::vector<double> dual_functional(const SystemTable& s,
                                                  std::span<const int> nu);

/// D_{m+1}(nu, nu_1..nu_m) with rows ordered (nu_m, ..., nu_1, nu);
/// s must hold m + 1 functions and nus is strictly increasing in 1..q.
[[nodiscard]] double bordered_det(const SystemTable& s, int nu,
                                  std::span<const int> nus);

struct BorderedSignReport {
  bool pass = true;
  int trials = 0;
  int reference_sign = 0;  ///< sign of D(0, q-m+1, ..., q)
  int witness_nu = -1;
  std::vector<int> witness_nus;
  double witness_det = 0.0;
};

/// Random admissible tuples checked against
/// sign D(nu) = sign D(0, q-m+1..q) * sign prod_j (nu_j - nu).
[[nodiscard]] BorderedSignReport bordered_sign_check(const SystemTable& s, int trials,
                                          std::uint64_t seed);

/// Advances c to the next k-subset of 0..n-1 in colexicographic order.
bool next_combination_colex(std::vector<int>& c, int n);

/// C(n, k) saturated at UINT64_MAX.
[[nodiscard]] std::uint64_t binomial(int n, int k);

}  // namespace dsturm
