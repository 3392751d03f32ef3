#include "dsturm/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dsturm/error.hpp"
#include "dsturm/tridiag.hpp"

namespace dsturm {
namespace {

void require_positive_finite(const std::vector<double>& v, const char* name) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]) || !(v[i] > 0.0)) {
      throw InputError(std::string(name) + "[" + std::to_string(i) +
                       "] must be positive and finite");
    }
  }
}

void require_length(const std::vector<double>& v, std::size_t n,
                    const char* name) {
  if (v.size() != n) {
    throw InputError(std::string(name) + " has length " +
                     std::to_string(v.size()) + ", expected " +
                     std::to_string(n));
  }
}

void check_finite(double v, const char* what, int l) {
  if (!std::isfinite(v)) {
    throw NumericalError(std::string(what) + " overflowed at l = " +
                         std::to_string(l));
  }
}

}  // namespace

void validate(const RecurrenceSystem& sys) {
  if (sys.q < 0) throw InputError("q must be non-negative");
  const auto n = static_cast<std::size_t>(sys.q) + 1;
  require_length(sys.alpha, n, "alpha");
  require_length(sys.beta, n, "beta");
  require_length(sys.gamma, n - 1, "gamma");
  require_length(sys.rho, n, "rho");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(sys.alpha[i])) {
      throw InputError("alpha[" + std::to_string(i) + "] must be finite");
    }
  }
  require_positive_finite(sys.beta, "beta");
  require_positive_finite(sys.gamma, "gamma");
  require_positive_finite(sys.rho, "rho");
  if (!std::isfinite(sys.eta)) throw InputError("eta must be finite");
}

DerivedWeights derive_weights(const RecurrenceSystem& sys) {
  validate(sys);
  const int q = sys.q;
  DerivedWeights out;
  out.d.resize(q + 1);
  out.w.resize(q + 1);
  out.c.resize(q + 1);
  out.k.resize(q + 2);
  out.A.resize(q + 1);
  out.B.resize(q + 1);

  double ratio = 1.0;  // running product of beta_i / gamma_i
  out.d[0] = sys.rho[0];
  for (int l = 1; l <= q; ++l) {
    ratio *= sys.beta[l - 1] / sys.gamma[l - 1];
    out.d[l] = sys.rho[l] * ratio;
    check_finite(out.d[l], "d", l);
    if (!(out.d[l] > 0.0)) {
      throw NumericalError("d underflowed at l = " + std::to_string(l));
    }
  }
  for (int l = 0; l <= q; ++l) {
    out.w[l] = sys.beta[l] * out.d[l] / sys.rho[l];
    const double g_prev = l > 0 ? sys.gamma[l - 1] : 0.0;
    out.c[l] = (sys.alpha[l] + sys.beta[l] + g_prev) * out.d[l] / sys.rho[l];
    check_finite(out.w[l], "w", l);
  }
  out.k[0] = 1.0;
  for (int l = 1; l <= q + 1; ++l) {
    out.k[l] = out.k[l - 1] * sys.rho[l - 1] / sys.beta[l - 1];
    check_finite(out.k[l], "k", l);
  }
  for (int l = 0; l <= q; ++l) out.A[l] = sys.alpha[l] / sys.rho[l];
  out.B[0] = 1.0 / sys.rho[0];
  for (int l = 1; l <= q; ++l) {
    out.B[l] = sys.gamma[l - 1] * sys.beta[l - 1] /
               (sys.rho[l - 1] * sys.rho[l]);
  }
  return out;
}

std::vector<double> eval_polys(const RecurrenceSystem& sys, int l_max,
                               double lambda) {
  if (l_max < 0 || l_max > sys.q + 1) {
    throw InputError("l_max = " + std::to_string(l_max) +
                     " outside [0, q+1] for q = " + std::to_string(sys.q));
  }
  std::vector<double> p(l_max + 1);
  p[0] = 1.0;
  double prev = 0.0;
  for (int l = 0; l < l_max; ++l) {
    const double g = l > 0 ? sys.gamma[l - 1] : 0.0;
    p[l + 1] = ((lambda * sys.rho[l] - sys.alpha[l]) * p[l] - g * prev) /
               sys.beta[l];
    prev = p[l];
  }
  return p;
}

double eval_ptilde(const RecurrenceSystem& sys, double lambda) {
  const auto p = eval_polys(sys, sys.q + 1, lambda);
  return p[sys.q + 1] - sys.eta * p[sys.q];
}

double cd_kernel_sum(const RecurrenceSystem& sys, int l, double x, double y) {
  if (l < 0 || l > sys.q) throw InputError("kernel index out of range");
  const auto w = derive_weights(sys);
  const auto px = eval_polys(sys, l, x);
  const auto py = eval_polys(sys, l, y);
  double s = 0.0;
  for (int i = 0; i <= l; ++i) s += w.d[i] * px[i] * py[i];
  return s;
}

double cd_kernel_closed(const RecurrenceSystem& sys, int l, double x,
                        double y) {
  if (l < 0 || l > sys.q) throw InputError("kernel index out of range");
  if (x == y) throw InputError("closed-form kernel needs x != y");
  const auto w = derive_weights(sys);
  const auto px = eval_polys(sys, l + 1, x);
  const auto py = eval_polys(sys, l + 1, y);
  return w.w[l] * (px[l + 1] * py[l] - px[l] * py[l + 1]) / (x - y);
}

double cd_kernel(const RecurrenceSystem& sys, int l, double x, double y) {
  if (std::abs(x - y) < 1e-8 * (1.0 + std::abs(x))) {
    return cd_kernel_sum(sys, l, x, y);
  }
  return cd_kernel_closed(sys, l, x, y);
}

JacobiMatrix jacobi_matrix(const RecurrenceSystem& sys, int size,
                           bool perturbed) {
  validate(sys);
  if (size < 1 || size > sys.q + 1) {
    throw InputError("Jacobi block size out of range");
  }
  JacobiMatrix j;
  j.diag.resize(size);
  j.off.resize(size - 1);
  for (int l = 0; l < size; ++l) j.diag[l] = sys.alpha[l] / sys.rho[l];
  if (perturbed && size == sys.q + 1) {
    const int q = sys.q;
    j.diag[q] = (sys.alpha[q] + sys.eta * sys.beta[q]) / sys.rho[q];
  }
  for (int l = 0; l + 1 < size; ++l) {
    j.off[l] = std::sqrt(sys.gamma[l] * sys.beta[l] /
                         (sys.rho[l] * sys.rho[l + 1]));
  }
  return j;
}

Quadrature gauss_quadrature(const RecurrenceSystem& sys, int n_nodes) {
  if (n_nodes < 1) throw InputError("n_nodes must be at least 1");
  if (n_nodes > sys.q + 1) {
    throw InputError("n_nodes = " + std::to_string(n_nodes) +
                     " exceeds the available recurrence data (q + 1 = " +
                     std::to_string(sys.q + 1) + ")");
  }
  const auto jm = jacobi_matrix(sys, n_nodes, false);
  auto nodes = tridiagonal_eigenvalues(jm.diag, jm.off);
  std::reverse(nodes.begin(), nodes.end());
  const auto dw = derive_weights(sys);

  Quadrature quad;
  quad.nodes = nodes;
  quad.weights.resize(n_nodes);
  quad.degree_exact = 2 * n_nodes - 1;
  for (int j = 0; j < n_nodes; ++j) {
    const auto p = eval_polys(sys, n_nodes - 1, nodes[j]);
    double s = 0.0;
    for (int l = 0; l < n_nodes; ++l) s += dw.d[l] * p[l] * p[l];
    quad.weights[j] = 1.0 / s;
  }
  for (int j = 0; j + 1 < n_nodes; ++j) {
    if (!(quad.nodes[j] < quad.nodes[j + 1])) {
      throw NumericalError("quadrature nodes are not strictly increasing");
    }
  }
  return quad;
}

double quadrature_orthonormality_residual(const RecurrenceSystem& sys,
                                          const Quadrature& quad) {
  const int n = static_cast<int>(quad.nodes.size());
  const auto dw = derive_weights(sys);
  std::vector<std::vector<double>> p(n);
  for (int j = 0; j < n; ++j) p[j] = eval_polys(sys, n - 1, quad.nodes[j]);
  double worst = 0.0;
  for (int l = 0; l < n; ++l) {
    for (int m = l; m < n; ++m) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += quad.weights[j] * p[j][l] * p[j][m];
      const double target = l == m ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dw.d[l] * s - target));
    }
  }
  return worst;
}

RecurrenceSystem truncate(const RecurrenceSystem& sys, int q_new, double eta) {
  if (q_new < 0 || q_new > sys.q) throw InputError("truncation out of range");
  RecurrenceSystem out;
  out.q = q_new;
  out.alpha.assign(sys.alpha.begin(), sys.alpha.begin() + q_new + 1);
  out.beta.assign(sys.beta.begin(), sys.beta.begin() + q_new + 1);
  out.gamma.assign(sys.gamma.begin(), sys.gamma.begin() + q_new);
  out.rho.assign(sys.rho.begin(), sys.rho.begin() + q_new + 1);
  out.eta = eta;
  return out;
}

RecurrenceSystem from_monic(const std::vector<double>& A,
                            const std::vector<double>& B, double eta) {
  if (A.empty() || B.size() < A.size()) {
    throw InputError("monic coefficient tables have inconsistent lengths");
  }
  RecurrenceSystem sys;
  sys.q = static_cast<int>(A.size()) - 1;
  sys.alpha = A;
  sys.beta.assign(A.size(), 1.0);
  sys.rho.assign(A.size(), 1.0);
  sys.gamma.assign(B.begin() + 1, B.begin() + A.size());
  sys.eta = eta;
  validate(sys);
  return sys;
}

RecurrenceSystem normalize_at(const RecurrenceSystem& sys, double point) {
  const auto dw = derive_weights(sys);
  const int q = sys.q;
  // r_l = p_{l+1}(point) / p_l(point) for the monic family.
  std::vector<double> r(q + 1);
  for (int l = 0; l <= q; ++l) {
    r[l] = point - dw.A[l] - (l > 0 ? dw.B[l] / r[l - 1] : 0.0);
    if (!(r[l] > 0.0) || !std::isfinite(r[l])) {
      throw InputError("cannot normalize: P_" + std::to_string(l + 1) +
                       " is not positive at the normalization point");
    }
  }
  RecurrenceSystem out;
  out.q = q;
  out.alpha = dw.A;
  out.beta = r;
  out.rho.assign(q + 1, 1.0);
  out.gamma.resize(q);
  for (int l = 1; l <= q; ++l) out.gamma[l - 1] = dw.B[l] / r[l - 1];
  // Keep the zeros of the perturbed polynomial unchanged.
  out.eta = sys.eta * (sys.beta[q] / sys.rho[q]) / r[q];
  return out;
}

}  // namespace dsturm
