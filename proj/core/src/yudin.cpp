#include "dsturm/yudin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dsturm/error.hpp"
#include "dsturm/spectrum.hpp"

namespace dsturm {
namespace {

// Gauss rule of f exact for polynomials of the given degree.
Quadrature rule_for_degree(const NormalizedFamily& f, int degree, int min_q) {
  const int nodes = std::max(degree / 2 + 1, 1);
  const auto sys = f.make(std::max(nodes - 1, min_q));
  return gauss_quadrature(sys, nodes);
}

}  // namespace

NormalizedFamily normalized(const Family& f) {
  NormalizedFamily out;
  out.name = f.name();
  out.make = [f](int q) { return normalize_at(f.system(q, 0.0), 1.0); };
  return out;
}

RecurrenceSystem christoffel_at_minus_one(const RecurrenceSystem& base) {
  if (base.q < 1) throw InputError("the Christoffel transform needs q >= 1");
  const auto dw = derive_weights(base);
  const int q = base.q;
  constexpr double c = -1.0;
  // u_n = p_{n+1}(c) / p_n(c) for the monic family.
  std::vector<double> u(q + 1);
  for (int n = 0; n <= q; ++n) {
    u[n] = c - dw.A[n] - (n > 0 ? dw.B[n] / u[n - 1] : 0.0);
    if (u[n] == 0.0 || !std::isfinite(u[n])) {
      throw NumericalError("monic polynomial vanishes at -1, the kernel family is undefined");
    }
  }
  std::vector<double> A(q);
  std::vector<double> B(q, 1.0);
  for (int n = 0; n < q; ++n) A[n] = dw.A[n + 1] + u[n + 1] - u[n];
  for (int n = 1; n < q; ++n) B[n] = dw.B[n] * u[n] / u[n - 1];
  return from_monic(A, B, 0.0);
}

NormalizedFamily kernel_family(const NormalizedFamily& f) {
  if (f.kernel) throw InputError("kernel_family expects a plain family");
  NormalizedFamily out;
  out.name = f.name + "^(1)";
  out.kernel = true;
  out.make = [base = f.make](int q) {
    return normalize_at(christoffel_at_minus_one(base(q + 1)), 1.0);
  };
  return out;
}

double kernel_eval_even(const NormalizedFamily& f, int l, double t) {
  if (t == -1.0) throw InputError("the even-measure form is singular at t = -1");
  const auto p = eval_polys(f.make(l), l + 1, t);
  return (p[l] + p[l + 1]) / (1.0 + t);
}

double kernel_eval_cd(const NormalizedFamily& f, int l, double t) {
  const auto sys = f.make(l);
  return cd_kernel(sys, l, t, -1.0) / cd_kernel(sys, l, 1.0, -1.0);
}

double kernel_orthogonality_residual(const NormalizedFamily& f, int l_max) {
  const auto kernel = kernel_family(f);
  const auto ksys = kernel.make(l_max);
  const auto quad = rule_for_degree(f, 2 * l_max + 1, 0);
  const int n = static_cast<int>(quad.nodes.size());
  std::vector<std::vector<double>> g(l_max + 1, std::vector<double>(l_max + 1, 0.0));
  for (int j = 0; j < n; ++j) {
    const double x = quad.nodes[j];
    const auto p = eval_polys(ksys, l_max, x);
    const double w = quad.weights[j] * (1.0 + x);
    for (int l = 0; l <= l_max; ++l) {
      for (int s = 0; s <= l_max; ++s) g[l][s] += w * p[l] * p[s];
    }
  }
  double worst = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    for (int s = 0; s < l; ++s) {
      worst = std::max(worst, std::abs(g[l][s]) / std::sqrt(g[l][l] * g[s][s]));
    }
  }
  return worst;
}

bool is_even(const NormalizedFamily& f, int q) {
  const auto sys = f.make(q);
  return std::all_of(sys.alpha.begin(), sys.alpha.end(),
                     [](double a) { return std::abs(a) <= 1e-12; });
}

KreinReport krein_check(const NormalizedFamily& f, int L) {
  if (L < 0) throw InputError("Krein degree must be non-negative");
  KreinReport r;
  r.L = L;
  const auto sys = f.make(2 * L);
  const auto dw = derive_weights(sys);
  const auto quad = gauss_quadrature(sys, 2 * L + 1);
  std::vector<std::vector<double>> p;
  p.reserve(quad.nodes.size());
  for (double x : quad.nodes) p.push_back(eval_polys(sys, 2 * L, x));

  r.min_coeff = INFINITY;
  r.max_coeff = -INFINITY;
  for (int m = 0; m <= L; ++m) {
    for (int n = m; n <= L; ++n) {
      for (int k = 0; k <= m + n; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j < p.size(); ++j) s += quad.weights[j] * p[j][m] * p[j][n] * p[j][k];
        const double c = dw.d[k] * s;
        if (c < r.min_coeff) {
          r.min_coeff = c;
          r.witness_m = m;
          r.witness_n = n;
          r.witness_k = k;
        }
        r.max_coeff = std::max(r.max_coeff, c);
      }
    }
  }
  r.pass = r.min_coeff >= -1e-10 * r.max_coeff;
  return r;
}

std::vector<double> fourier_coeffs(const std::function<double(double)>& p, int degree,
                                   const NormalizedFamily& f, int l_max) {
  if (degree < 0 || l_max < 0) throw InputError("degree and l_max must be non-negative");
  const auto quad = rule_for_degree(f, degree + l_max, l_max);
  const auto sys = f.make(std::max(l_max, static_cast<int>(quad.nodes.size()) - 1));
  std::vector<double> a(l_max + 1, 0.0);
  for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
    const double x = quad.nodes[j];
    const double px = p(x);
    const auto u = eval_polys(sys, l_max, x);
    for (int l = 0; l <= l_max; ++l) a[l] += quad.weights[j] * px * u[l];
  }
  return a;
}

std::vector<double> fourier_coeffs(const Poly& p, const NormalizedFamily& f, int l_max) {
  const int degree = std::max(static_cast<int>(p.size()) - 1, 0);
  return fourier_coeffs([&p](double x) { return poly_eval(p, x); }, degree, f, l_max);
}

std::vector<double> alternating_tail_sums(const std::vector<double>& b) {
  std::vector<double> delta(b.size(), 0.0);
  double acc = 0.0;
  for (std::size_t i = b.size(); i-- > 0;) {
    acc = b[i] - acc;
    delta[i] = acc;
  }
  return delta;
}

YudinResult yudin_extremal(const NormalizedFamily& f, int q, int m, int variant,
                           const YudinOptions& opt) {
  if (f.kernel) throw InputError("yudin_extremal expects a plain family");
  if (q < 0 || m < 0 || m > q) throw InputError("need 0 <= m <= q");
  if (variant != 1 && variant != 2) throw InputError("variant must be 1 or 2");
  if (opt.sign_grid < 2) throw InputError("sign grid needs at least two points");

  YudinResult r;
  r.variant = variant;
  r.q = q;
  r.m = m;
  r.n = variant == 1 ? 2 * q - m + 1 : 2 * q - m + 2;
  const int L = opt.krein_degree > 0 ? opt.krein_degree : 2 * q + 4;

  r.krein = krein_check(f, L);
  r.even = is_even(f, std::max(L, r.n));
  const NormalizedFamily kernel = variant == 2 ? kernel_family(f) : NormalizedFamily{};
  bool hypothesis = r.krein.pass;
  std::string why = r.krein.pass ? "" : "the family fails the Krein check up to degree " +
                                            std::to_string(L);
  if (variant == 2 && !r.even) {
    r.kernel_krein = krein_check(kernel, L);
    if (!r.kernel_krein->pass) {
      hypothesis = false;
      if (!why.empty()) why += "; ";
      why += "the measure is not even and the kernel family fails the Krein check";
    }
  }
  if (!hypothesis && !opt.assume_krein) throw PreconditionFailed(why);

  const NormalizedFamily& g = variant == 1 ? f : kernel;
  const auto sys = g.make(q);
  const auto spec = compute_spectrum(sys);
  r.zeros = spec.lambdas;
  r.B = r.zeros[m];
  const auto gx = gap_expand(sys, spec, m);
  r.quotient_coeffs = gx.a;
  r.quotient_check = classify_and_verify(gx, sys, 1.0);
  const auto dw = derive_weights(sys);

  const auto pstar = [&](double t) {
    const auto u = eval_polys(sys, q + 1, t);
    double quotient = 0.0;
    for (int l = 0; l <= q - m; ++l) quotient += dw.d[l] * gx.a[l] * u[l];
    const double val = u[q + 1] * quotient;
    return variant == 2 ? (1.0 + t) * val : val;
  };

  r.p_coeffs = fourier_coeffs(pstar, r.n, f, r.n);
  {
    const auto quad = rule_for_degree(f, r.n + m, 0);
    r.moments.assign(m + 1, 0.0);
    for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
      const double x = quad.nodes[j];
      double xi = 1.0;
      const double px = pstar(x);
      for (int i = 0; i <= m; ++i) {
        r.moments[i] += quad.weights[j] * xi * px;
        xi *= x;
      }
    }
  }

  const int grid = opt.sign_grid;
  const double sgn = m % 2 == 1 ? 1.0 : -1.0;  // (-1)^{m-1}
  for (int i = 0; i < grid; ++i) {
    r.norm = std::max(r.norm, std::abs(pstar(-1.0 + 2.0 * i / (grid - 1))));
  }
  r.sign_check = INFINITY;
  for (int i = 0; i < grid; ++i) {
    const double t = -1.0 + (r.B + 1.0) * i / (grid - 1);
    r.sign_check = std::min(r.sign_check, sgn * pstar(t));
  }
  const double right = m >= 1 ? r.zeros[m - 1] : 1.0;
  r.sign_change_value = sgn * pstar(0.5 * (r.B + right));

  const double amax = *std::max_element(r.p_coeffs.begin(), r.p_coeffs.end());
  const double amin = *std::min_element(r.p_coeffs.begin(), r.p_coeffs.end());
  r.coeffs_nonnegative = amax > 0.0 && amin >= -1e-10 * amax;
  r.gap_vanishes = true;
  for (int i = 0; i <= m; ++i) {
    r.gap_vanishes = r.gap_vanishes && std::abs(r.p_coeffs[i]) <= 1e-9 * amax &&
                     std::abs(r.moments[i]) <= 1e-9 * r.norm;
  }
  r.sign_ok = r.sign_check >= -1e-9 * r.norm && r.sign_change_value < 0.0;

  if (!r.coeffs_nonnegative) r.failures.emplace_back("negative Fourier coefficient");
  if (!r.gap_vanishes) r.failures.emplace_back("gap coefficients or moments do not vanish");
  if (!r.sign_ok) r.failures.emplace_back("sign condition violated");
  if (!r.quotient_check.pass) r.failures.emplace_back("quotient coefficients are not monotone");
  if (variant == 2 && r.even) {
    r.deltas = alternating_tail_sums(gx.a);
    const double bmax = *std::max_element(gx.a.begin(), gx.a.end());
    if (std::any_of(r.deltas->begin(), r.deltas->end(),
                    [bmax](double d) { return d < -1e-10 * bmax; })) {
      r.failures.emplace_back("alternating tail sum is negative");
    }
  }
  r.pass = r.failures.empty();
  return r;
}

}  // namespace dsturm
