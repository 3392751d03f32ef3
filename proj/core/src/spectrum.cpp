#include "dsturm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dsturm/error.hpp"
#include "dsturm/tridiag.hpp"

namespace dsturm {
namespace {

constexpr double kResidualTol = 1e-8;

std::string describe(const char* chain, int l, int j, double lo, double mid,
                     double hi) {
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%s chain, degree %d, index %d: expected %.17g < %.17g < %.17g",
                chain, l, j, lo, mid, hi);
  return buf;
}

// Checks x_{j+1} < y_j < x_j for descending x (size n) and y (size n - 1).
bool interlaced(const std::vector<double>& x, const std::vector<double>& y,
                int& bad) {
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (!(x[j + 1] < y[j] && y[j] < x[j])) {
      bad = static_cast<int>(j);
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<double> polynomial_zeros(const RecurrenceSystem& sys, int l) {
  if (l < 1 || l > sys.q + 1) throw InputError("degree out of range");
  const auto jm = jacobi_matrix(sys, l, false);
  return tridiagonal_eigenvalues(jm.diag, jm.off);
}

Spectrum compute_spectrum(const RecurrenceSystem& sys) {
  const auto jm = jacobi_matrix(sys, sys.q + 1, true);
  const int q = sys.q;
  Spectrum spec;
  spec.q = q;
  spec.lambdas = tridiagonal_eigenvalues(jm.diag, jm.off);
  for (int k = 0; k < q; ++k) {
    if (!(spec.lambdas[k] > spec.lambdas[k + 1])) {
      throw NumericalError("eigenvalues are not strictly descending at index " +
                           std::to_string(k + 1));
    }
  }

  // Sample |Ptilde| at the eigenvalues' midpoints and slightly beyond the ends.
  const double lo = spec.lambdas.back();
  const double hi = spec.lambdas.front();
  const double pad = q > 0 ? (hi - lo) / q : 1.0;
  std::vector<double> samples{lo - pad, hi + pad, lo, hi};
  for (int k = 0; k < q; ++k) {
    samples.push_back(0.5 * (spec.lambdas[k] + spec.lambdas[k + 1]));
  }
  for (double x : samples) {
    spec.ptilde_norm = std::max(spec.ptilde_norm, std::abs(eval_ptilde(sys, x)));
  }

  spec.psi.resize(q + 1);
  spec.boundary.resize(q + 1);
  spec.residuals.resize(q + 1);
  spec.row_scale.resize(q + 1);
  for (int k = 0; k <= q; ++k) {
    auto p = eval_polys(sys, q + 1, spec.lambdas[k]);
    spec.boundary[k] = p[q + 1];
    spec.residuals[k] = std::abs(p[q + 1] - sys.eta * p[q]);
    double scale = 0.0;
    for (double v : p) scale = std::max(scale, std::abs(v));
    spec.row_scale[k] = scale;
    p.pop_back();
    spec.psi[k] = std::move(p);
    const double ref = std::max(spec.ptilde_norm, scale);
    if (!(spec.residuals[k] <= kResidualTol * ref)) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "eigenvalue %d residual %.3e exceeds tolerance (scale %.3e)",
                    k + 1, spec.residuals[k], ref);
      throw NumericalError(buf);
    }
  }
  return spec;
}

InterlacingReport interlacing_check(const RecurrenceSystem& sys) {
  InterlacingReport rep;
  const int q = sys.q;
  if (q == 0) return rep;
  std::vector<double> prev = polynomial_zeros(sys, 1);
  for (int l = 2; l <= q; ++l) {
    auto cur = polynomial_zeros(sys, l);
    int bad = 0;
    if (!interlaced(cur, prev, bad)) {
      rep.pass = false;
      rep.violation = describe("orthogonal", l, bad + 1, cur[bad + 1],
                               prev[bad], cur[bad]);
      return rep;
    }
    prev = std::move(cur);
  }
  const auto spec_zeros = compute_spectrum(sys).lambdas;
  int bad = 0;
  if (!interlaced(spec_zeros, prev, bad)) {
    rep.pass = false;
    rep.violation = describe("perturbed", q + 1, bad + 1, spec_zeros[bad + 1],
                             prev[bad], spec_zeros[bad]);
  }
  return rep;
}

double discrete_orthogonality_check(const RecurrenceSystem& sys,
                                    const Spectrum& spec) {
  const auto dw = derive_weights(sys);
  const int n = static_cast<int>(spec.psi.size());
  std::vector<double> norm(n);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int nu = 0; nu < n; ++nu) s += dw.d[nu] * spec.psi[k][nu] * spec.psi[k][nu];
    norm[k] = std::sqrt(s);
  }
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int s = k + 1; s < n; ++s) {
      double acc = 0.0;
      for (int nu = 0; nu < n; ++nu) acc += dw.d[nu] * spec.psi[k][nu] * spec.psi[s][nu];
      worst = std::max(worst, std::abs(acc) / (norm[k] * norm[s]));
    }
  }
  return worst;
}

}  // namespace dsturm
