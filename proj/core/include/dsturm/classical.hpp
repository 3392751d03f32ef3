#pragma once

#include <span>
#include <string>
#include <vector>

#include "dsturm/families.hpp"

namespace dsturm {

/// Jacobi families P^{(-1/2+alpha, -1/2+beta)} normalized at 1:
/// i = (0,0), ii = (0,1), iii = (1,1), iv = (1,0).
enum class JacobiCase { i, ii, iii, iv };

/// Accepts "i".."iv" with or without a "jacobi-" prefix.
[[nodiscard]] JacobiCase parse_case(const std::string& s);
[[nodiscard]] const char* to_string(JacobiCase c);
[[nodiscard]] Family jacobi_case_family(JacobiCase c);

/// Trigonometric zeros t_1 > ... > t_{q+1} of U_{q+1}.
[[nodiscard]] std::vector<double> jacobi_case_zeros(JacobiCase c, int q);

/// Closed-form product for D_{m+1}(nu, nu_1, ..., nu_m). The bordering
/// points nus are strictly increasing in 1..q (the same convention as
/// bordered_det); internally the rows run from the largest point down to
/// nu, which is the order the product formulas are written in.
[[nodiscard]] double jacobi_case_det_closed_form(JacobiCase c, int q, int nu,
                                            std::span<const int> nus);

/// The same determinant from the eigenfunction table of the case's
/// recurrence with eta = 0.
[[nodiscard]] double jacobi_case_det_numeric(JacobiCase c, int q, int nu,
                                        std::span<const int> nus);

struct TrigCoefficients {
  std::vector<double> values;
  bool strictly_decreasing_positive = false;
};

/// a_{0,m}..a_{q-m,m} in
///   cos((q+1)x) / prod_{j=0}^{m} (cos x - cos(pi(2j+1)/(2q+2)))
///     = a_{0,m}/2 + sum_nu a_{nu,m} cos(nu x).
[[nodiscard]] TrigCoefficients trig_cos_coeffs(int q, int m);

/// b_{1,m}..b_{q-m+1,m} in
///   sin((q+1)x) / prod_{j=1}^{m} (cos x - cos(pi j/(q+1)))
///     = sum_nu nu b_{nu,m} sin(nu x),   1 <= m <= q.
[[nodiscard]] TrigCoefficients trig_sin_coeffs(int q, int m);

}  // namespace dsturm
