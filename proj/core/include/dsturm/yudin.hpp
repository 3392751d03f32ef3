#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dsturm/families.hpp"
#include "dsturm/gapfourier.hpp"
#include "dsturm/poly.hpp"

namespace dsturm {

/// Orthogonal family on [-1, 1] with U_l(1) = 1 and unit total mass.
struct NormalizedFamily {
  std::string name;
  /// Recurrence for U_0..U_{q+1} with eta = 0.
  std::function<RecurrenceSystem(int q)> make;
  bool kernel = false;
};

[[nodiscard]] NormalizedFamily normalized(const Family& f);

/// Kernel polynomials U_l^{(1)} for (1 + t) dmu, obtained by a Christoffel
/// transform of the monic recurrence at t = -1 and renormalized at t = 1.
/// The modified measure is rescaled to unit mass.
[[nodiscard]] NormalizedFamily kernel_family(const NormalizedFamily& f);

/// Monic recurrence of the kernel polynomials for (x + 1) dmu, of grid size
/// base.q - 1.
[[nodiscard]] RecurrenceSystem christoffel_at_minus_one(const RecurrenceSystem& base);

/// (U_l(t) + U_{l+1}(t)) / (1 + t), valid for even measures and t != -1.
[[nodiscard]] double kernel_eval_even(const NormalizedFamily& f, int l, double t);

/// K_l(t, -1) / K_l(1, -1) with K_l the Christoffel-Darboux kernel of f.
[[nodiscard]] double kernel_eval_cd(const NormalizedFamily& f, int l, double t);

/// max over l, s <= l_max of the normalized (1 + t)-weighted inner product
/// defect of the kernel family of f.
[[nodiscard]] double kernel_orthogonality_residual(const NormalizedFamily& f, int l_max);

/// True when every recurrence shift alpha_l of f.make(q) is within 1e-12 of 0.
[[nodiscard]] bool is_even(const NormalizedFamily& f, int q);

struct KreinReport {
  bool pass = false;
  int L = 0;
  double min_coeff = 0.0;
  double max_coeff = 0.0;
  int witness_m = -1;  ///< indices of the most negative coefficient
  int witness_n = -1;
  int witness_k = -1;
};

/// Linearization coefficients c_{m,n,k} = d_k int U_m U_n U_k dmu for
/// m, n <= L by Gauss quadrature; passes iff min c >= -1e-10 max c.
[[nodiscard]] KreinReport krein_check(const NormalizedFamily& f, int L);

/// a_l = int p U_l dmu for l = 0..l_max, with a Gauss rule exact for
/// degree deg p + l_max.
[[nodiscard]] std::vector<double> fourier_coeffs(const std::function<double(double)>& p,
                                                 int degree, const NormalizedFamily& f,
                                                 int l_max);
[[nodiscard]] std::vector<double> fourier_coeffs(const Poly& p, const NormalizedFamily& f,
                                                 int l_max);

/// delta_nu = sum_{l >= nu} b_l (-1)^{l + nu}.
[[nodiscard]] std::vector<double> alternating_tail_sums(const std::vector<double>& b);

struct YudinOptions {
  /// Proceed even when the Krein check fails; the result records it.
  bool assume_krein = false;
  /// Degree up to which Krein is checked; 0 selects 2q + 4.
  int krein_degree = 0;
  int sign_grid = 10000;
};

struct YudinResult {
  int variant = 1;
  int q = 0;
  int m = 0;
  int n = 0;
  double B = 0.0;
  std::vector<double> zeros;           ///< t_k (or t_k^{(1)}), descending
  std::vector<double> quotient_coeffs; ///< gap expansion of U_{q+1} / omega_{m+1}
  MonotonicityReport quotient_check;
  std::vector<double> p_coeffs;  ///< a_0(p*)..a_n(p*)
  std::vector<double> moments;   ///< mu_0(p*)..mu_m(p*)
  double norm = 0.0;             ///< max |p*| on the sign grid
  double sign_check = 0.0;       ///< min (-1)^{m-1} p*(t) over the grid of [-1, B]
  double sign_change_value = 0.0;///< (-1)^{m-1} p* just right of B
  std::optional<std::vector<double>> deltas;  ///< even-measure variant 2 only
  KreinReport krein;
  std::optional<KreinReport> kernel_krein;
  bool even = false;
  bool coeffs_nonnegative = false;
  bool gap_vanishes = false;
  bool sign_ok = false;
  bool pass = false;
  std::vector<std::string> failures;
};

/// Extremal polynomial of the spectral-gap problem.
/// Variant 1: n = 2q - m + 1, p* = U_{q+1}^2 / prod_{j<=m+1} (t - t_j).
/// Variant 2: n = 2q - m + 2, p* = (1 + t) (U_{q+1}^{(1)})^2 / prod (t - t_j^{(1)}).
/// Throws PreconditionFailed when the Krein hypothesis fails and is not assumed.
[[nodiscard]] YudinResult yudin_extremal(const NormalizedFamily& f, int q, int m, int variant,
                                         const YudinOptions& opt = {});

}  // namespace dsturm
