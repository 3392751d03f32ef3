#pragma once

#include <string>
#include <vector>

#include "dsturm/recurrence.hpp"
#include "dsturm/spectrum.hpp"

namespace dsturm {

/// Expansion of Ptilde_{q+1}(x) / prod_{j<=m+1} (x - lambda_j) as
/// sum_{l=0}^{q-m} d_l a_l P_l(x).
struct GapExpansion {
  int m = 0;
  std::vector<double> removed;       ///< lambda_1..lambda_{m+1}
  std::vector<double> a;             ///< partial-fraction route
  std::vector<double> a_quadrature;  ///< quadrature of the explicit quotient
  double route_discrepancy = 0.0;    ///< max |a - a_quadrature| / max |a|
  double reconstruction_residual = 0.0;
};

/// P_{q+1}(b) / P_q(b). b must lie strictly right of every zero of P_q.
[[nodiscard]] double eta_b(const RecurrenceSystem& sys, double b);

/// a_nu = (1/w_q) sum_i P_nu(lambda_i) / (omega'(lambda_i) P_q(lambda_i))
/// for nu = 0..q-m, with the lambda_i taken from spec.
[[nodiscard]] std::vector<double> partial_fraction_coeffs(const RecurrenceSystem& sys,
                                                          const Spectrum& spec, int m);

/// Both routes plus a reconstruction check at q + 2 Chebyshev points.
/// Throws NumericalError when the routes disagree beyond 1e-8 relative or
/// the reconstruction misses by more than 1e-8 relative.
[[nodiscard]] GapExpansion gap_expand(const RecurrenceSystem& sys, const Spectrum& spec,
                                      int m);

enum class EtaCase { a, b, c };
enum class Verdict { strictly_decreasing, all_equal, strictly_increasing, single, mixed };
[[nodiscard]] const char* to_string(EtaCase c);
[[nodiscard]] const char* to_string(Verdict v);

struct EtaClassification {
  double eta_b = 0.0;
  EtaCase eta_case = EtaCase::a;
};

/// Case a: m >= 1, or m = 0 with eta < eta_b. Case b: m = 0 and eta equal to
/// eta_b within 1e-10 (1 + |eta_b|). Case c: m = 0 and eta > eta_b.
[[nodiscard]] EtaClassification classify(int m, double eta, double eta_b_value);

struct MonotonicityReport {
  EtaClassification classification;
  double b = 1.0;
  std::vector<double> ratios;  ///< a_l / P_l(b)
  Verdict verdict = Verdict::mixed;
  Verdict expected = Verdict::strictly_decreasing;
  double spread = 0.0;      ///< (max - min) / max |ratio|
  double margin = 0.0;      ///< smallest signed consecutive gap in the expected direction
  bool all_positive = false;
  bool pass = false;
};

/// Classifies eta against eta_b and checks the predicted ordering of the
/// ratios a_l / P_l(b): equality within 1e-8 relative spread, strictness
/// with gaps above 1e-10 of the largest ratio.
[[nodiscard]] MonotonicityReport classify_and_verify(const GapExpansion& expansion,
                                                     const RecurrenceSystem& sys, double b);

struct DeterminantCrosscheck {
  bool pass = false;
  std::vector<double> a;
  std::vector<double> determinants;  ///< D_{m+1}(nu, q-m+1, ..., q)
  std::vector<double> ratios;        ///< a_nu / D
  double spread = 0.0;
  bool positive = false;
  std::string reason;
};

/// a_nu against the bordered determinant of psi_1..psi_{m+1} at rows
/// P_q, ..., P_{q-m+1}, P_nu. Requires 1 <= m <= q.
[[nodiscard]] DeterminantCrosscheck determinant_crosscheck(const RecurrenceSystem& sys,
                                                           const Spectrum& spec, int m);

}  // namespace dsturm
