#pragma once

#include <functional>
#include <string>

#include "dsturm/recurrence.hpp"

namespace dsturm {

/// An orthogonal polynomial family with an analytic recurrence generator,
/// so systems of any grid size can be produced.
class Family {
 public:
  using Generator = std::function<RecurrenceSystem(int q, double eta)>;

  Family(std::string name, Generator generator);

  [[nodiscard]] const std::string& name() const { return name_; }

  /// Recurrence tables for grid size q with boundary parameter eta.
  [[nodiscard]] RecurrenceSystem system(int q, double eta = 0.0) const;

  /// Gauss rule with n_nodes nodes, built from system(n_nodes - 1).
  [[nodiscard]] Quadrature quadrature(int n_nodes) const;

 private:
  std::string name_;
  Generator generator_;
};

/// T_l: alpha = 0, beta_0 = 1, beta_l = 1/2, gamma = 1/2, rho = 1.
[[nodiscard]] Family chebyshev_t();

/// Classical second kind, U_l(1) = l + 1: alpha = 0, beta = gamma = 1/2.
[[nodiscard]] Family chebyshev_u();

/// Legendre P_l, P_l(1) = 1: beta_l = (l+1)/(2l+1), gamma_l = (l+1)/(2l+3).
[[nodiscard]] Family legendre();

/// Jacobi polynomials for the weight (1-t)^a (1+t)^b, normalized so that
/// P_l(1) = 1. Requires a, b > -1.
[[nodiscard]] Family jacobi(double a, double b);

/// Looks up a builtin family by name: "chebyshev-t", "chebyshev-u",
/// "legendre", "jacobi" (with a, b), "jacobi-i" .. "jacobi-iv".
[[nodiscard]] Family family_by_name(const std::string& name, double a = 0.0,
                                    double b = 0.0);

}  // namespace dsturm
