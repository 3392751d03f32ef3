#include "dsturm/gapfourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "dsturm/chebsys.hpp"
#include "dsturm/error.hpp"
#include "dsturm/poly.hpp"

namespace dsturm {
namespace {

constexpr double kRouteTol = 1e-8;
constexpr double kEqualSpread = 1e-8;
constexpr double kStrictGap = 1e-10;

void check_inputs(const RecurrenceSystem& sys, const Spectrum& spec, int m) {
  validate(sys);
  if (spec.q != sys.q || spec.lambdas.size() != static_cast<std::size_t>(sys.q) + 1) {
    throw InputError("spectrum does not belong to this system");
  }
  if (m < 0 || m > sys.q) {
    throw InputError("m = " + std::to_string(m) + " outside [0, q]");
  }
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double max_abs(const std::vector<double>& v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

}  // namespace

double eta_b(const RecurrenceSystem& sys, double b) {
  validate(sys);
  if (sys.q >= 1) {
    const auto zeros = polynomial_zeros(sys, sys.q);
    if (!(b > zeros.front())) {
      throw InputError("b = " + std::to_string(b) + " does not lie right of the zero " +
                       std::to_string(zeros.front()) + " of P_q");
    }
  }
  const auto p = eval_polys(sys, sys.q + 1, b);
  return p[sys.q + 1] / p[sys.q];
}

std::vector<double> partial_fraction_coeffs(const RecurrenceSystem& sys,
                                            const Spectrum& spec, int m) {
  check_inputs(sys, spec, m);
  const int q = sys.q;
  const auto dw = derive_weights(sys);
  std::vector<double> a(q - m + 1, 0.0);
  for (int i = 0; i <= m; ++i) {
    const double li = spec.lambdas[i];
    double omega_prime = 1.0;
    for (int j = 0; j <= m; ++j) {
      if (j != i) omega_prime *= li - spec.lambdas[j];
    }
    const auto p = eval_polys(sys, q, li);
    const double denom = dw.w[q] * omega_prime * p[q];
    if (denom == 0.0 || !std::isfinite(denom)) {
      throw NumericalError("partial fraction denominator vanished at lambda_" +
                           std::to_string(i + 1));
    }
    for (int nu = 0; nu <= q - m; ++nu) a[nu] += p[nu] / denom;
  }
  return a;
}

GapExpansion gap_expand(const RecurrenceSystem& sys, const Spectrum& spec, int m) {
  check_inputs(sys, spec, m);
  const int q = sys.q;
  GapExpansion g;
  g.m = m;
  g.removed.assign(spec.lambdas.begin(), spec.lambdas.begin() + m + 1);
  g.a = partial_fraction_coeffs(sys, spec, m);

  // Second route: explicit quotient in the monomial basis, then projection
  // by the (q+1)-point Gauss rule, exact up to degree 2q + 1.
  const auto mono = monomial_polys(sys, q + 1);
  Poly quotient = mono[q + 1];
  for (int l = 0; l <= q; ++l) quotient[l] -= sys.eta * mono[q][l];
  for (double root : g.removed) quotient = poly_divide_linear(quotient, root);

  const auto dw = derive_weights(sys);
  const auto quad = gauss_quadrature(sys, q + 1);
  g.a_quadrature.assign(q - m + 1, 0.0);
  for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
    const double x = quad.nodes[j];
    const double qx = poly_eval(quotient, x);
    const auto p = eval_polys(sys, q - m, x);
    for (int nu = 0; nu <= q - m; ++nu) g.a_quadrature[nu] += quad.weights[j] * qx * p[nu];
  }

  const double scale = max_abs(g.a);
  for (int nu = 0; nu <= q - m; ++nu) {
    g.route_discrepancy = std::max(g.route_discrepancy, std::abs(g.a[nu] - g.a_quadrature[nu]));
  }
  g.route_discrepancy /= scale > 0.0 ? scale : 1.0;

  const double lo = spec.lambdas.back();
  const double hi = spec.lambdas.front();
  const double pad = 0.1 * std::max(hi - lo, 1.0);
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo) + pad;
  double worst = 0.0;
  double ref = 0.0;
  for (int i = 0; i < q + 2; ++i) {
    const double x = centre + half * std::cos(std::numbers::pi * (2 * i + 1) / (2.0 * (q + 2)));
    const auto p = eval_polys(sys, q + 1, x);
    double series = 0.0;
    double magnitude = 0.0;
    for (int l = 0; l <= q - m; ++l) {
      series += dw.d[l] * g.a[l] * p[l];
      magnitude += std::abs(dw.d[l] * g.a[l] * p[l]);
    }
    double omega = 1.0;
    for (double root : g.removed) omega *= x - root;
    const double target = p[q + 1] - sys.eta * p[q];
    worst = std::max(worst, std::abs(series * omega - target));
    // The series cancels heavily near the removed zeros, so the residual is
    // measured against the size of its terms as well as against the target.
    ref = std::max({ref, std::abs(target), magnitude * std::abs(omega)});
  }
  g.reconstruction_residual = worst / (ref > 0.0 ? ref : 1.0);

  if (g.route_discrepancy > kRouteTol) {
    throw NumericalError("gap expansion routes disagree: relative discrepancy " +
                         sci(g.route_discrepancy));
  }
  if (g.reconstruction_residual > kRouteTol) {
    throw NumericalError("gap expansion does not reproduce the quotient: relative residual " +
                         sci(g.reconstruction_residual));
  }
  return g;
}

const char* to_string(EtaCase c) {
  switch (c) {
    case EtaCase::a: return "a";
    case EtaCase::b: return "b";
    case EtaCase::c: return "c";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::strictly_decreasing: return "strictly_decreasing";
    case Verdict::all_equal: return "all_equal";
    case Verdict::strictly_increasing: return "strictly_increasing";
    case Verdict::single: return "single";
    case Verdict::mixed: return "mixed";
  }
  return "?";
}

EtaClassification classify(int m, double eta, double eta_b_value) {
  EtaClassification c;
  c.eta_b = eta_b_value;
  if (m >= 1) {
    c.eta_case = EtaCase::a;
  } else if (std::abs(eta - eta_b_value) <= 1e-10 * (1.0 + std::abs(eta_b_value))) {
    c.eta_case = EtaCase::b;
  } else {
    c.eta_case = eta < eta_b_value ? EtaCase::a : EtaCase::c;
  }
  return c;
}

MonotonicityReport classify_and_verify(const GapExpansion& expansion,
                                       const RecurrenceSystem& sys, double b) {
  MonotonicityReport r;
  r.b = b;
  r.classification = classify(expansion.m, sys.eta, eta_b(sys, b));
  switch (r.classification.eta_case) {
    case EtaCase::a: r.expected = Verdict::strictly_decreasing; break;
    case EtaCase::b: r.expected = Verdict::all_equal; break;
    case EtaCase::c: r.expected = Verdict::strictly_increasing; break;
  }

  const int len = static_cast<int>(expansion.a.size());
  const auto p = eval_polys(sys, len - 1, b);
  r.ratios.resize(len);
  for (int l = 0; l < len; ++l) r.ratios[l] = expansion.a[l] / p[l];
  r.all_positive = std::all_of(r.ratios.begin(), r.ratios.end(), [](double v) { return v > 0.0; });

  const double top = max_abs(r.ratios);
  const auto [mn, mx] = std::minmax_element(r.ratios.begin(), r.ratios.end());
  r.spread = top > 0.0 ? (*mx - *mn) / top : 0.0;

  double min_dec = INFINITY;
  double min_inc = INFINITY;
  for (int l = 0; l + 1 < len; ++l) {
    const double gap = (r.ratios[l] - r.ratios[l + 1]) / (top > 0.0 ? top : 1.0);
    min_dec = std::min(min_dec, gap);
    min_inc = std::min(min_inc, -gap);
  }
  if (len == 1) {
    r.verdict = Verdict::single;
  } else if (r.spread <= kEqualSpread) {
    r.verdict = Verdict::all_equal;
  } else if (min_dec > kStrictGap) {
    r.verdict = Verdict::strictly_decreasing;
  } else if (min_inc > kStrictGap) {
    r.verdict = Verdict::strictly_increasing;
  } else {
    r.verdict = Verdict::mixed;
  }

  switch (r.expected) {
    case Verdict::strictly_decreasing: r.margin = len > 1 ? min_dec : 0.0; break;
    case Verdict::strictly_increasing: r.margin = len > 1 ? min_inc : 0.0; break;
    default: r.margin = kEqualSpread - r.spread; break;
  }
  r.pass = r.all_positive && (r.verdict == r.expected || r.verdict == Verdict::single);
  return r;
}

DeterminantCrosscheck determinant_crosscheck(const RecurrenceSystem& sys, const Spectrum& spec,
                                             int m) {
  check_inputs(sys, spec, m);
  if (m < 1) throw InputError("the determinant cross-check needs m >= 1");
  const int q = sys.q;
  DeterminantCrosscheck r;
  r.a = partial_fraction_coeffs(sys, spec, m);

  std::vector<std::vector<double>> rows(spec.psi.begin(), spec.psi.begin() + m + 1);
  const SystemTable table(std::move(rows));
  std::vector<int> nus(m);
  for (int j = 0; j < m; ++j) nus[j] = q - m + 1 + j;

  for (int nu = 0; nu <= q - m; ++nu) {
    const double d = bordered_det(table, nu, nus);
    r.determinants.push_back(d);
    if (d == 0.0) {
      r.reason = "bordered determinant vanishes at nu = " + std::to_string(nu);
      return r;
    }
    r.ratios.push_back(r.a[nu] / d);
  }
  r.positive = std::all_of(r.ratios.begin(), r.ratios.end(), [](double v) { return v > 0.0; });
  const auto [mn, mx] = std::minmax_element(r.ratios.begin(), r.ratios.end());
  const double top = max_abs(r.ratios);
  r.spread = top > 0.0 ? (*mx - *mn) / top : 0.0;
  r.pass = r.positive && r.spread <= 1e-7;
  if (!r.positive) {
    r.reason = "ratio a_nu / D is not positive";
  } else if (!r.pass) {
    r.reason = "ratio a_nu / D is not constant";
  }
  return r;
}

}  // namespace dsturm
