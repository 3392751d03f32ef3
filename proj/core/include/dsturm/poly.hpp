#pragma once

#include <span>
#include <vector>

#include "dsturm/recurrence.hpp"

namespace dsturm {

/// Polynomials in the monomial basis, coefficient of x^i at index i.
using Poly = std::vector<double>;

[[nodiscard]] double poly_eval(std::span<const double> p, double x);
[[nodiscard]] Poly poly_mul(std::span<const double> a, std::span<const double> b);

/// Quotient of p by (x - root); the remainder p(root) is written to
/// *remainder when it is non-null.
[[nodiscard]] Poly poly_divide_linear(std::span<const double> p, double root,
                                      double* remainder = nullptr);

/// Monomial coefficients of P_0..P_{l_max}, l_max <= q + 1.
[[nodiscard]] std::vector<Poly> monomial_polys(const RecurrenceSystem& sys, int l_max);

}  // namespace dsturm
