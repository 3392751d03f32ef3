#include "dsturm/classical.hpp"

#include <cmath>
#include <numbers>

#include "dsturm/chebsys.hpp"
#include "dsturm/error.hpp"
#include "dsturm/gapfourier.hpp"
#include "dsturm/spectrum.hpp"

namespace dsturm {
namespace {

using std::numbers::pi;

void check_points(int q, int nu, std::span<const int> nus) {
  if (q < 1) throw InputError("q must be at least 1");
  if (nu < 0 || nu > q) throw InputError("nu outside [0, q]");
  if (static_cast<int>(nus.size()) > q) throw InputError("too many bordering points");
  for (std::size_t j = 0; j < nus.size(); ++j) {
    if (nus[j] < 1 || nus[j] > q) throw InputError("bordering point outside [1, q]");
    if (j > 0 && nus[j] <= nus[j - 1]) throw InputError("bordering points must increase");
  }
}

bool decreasing_positive(const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) return false;
    if (i > 0 && !(v[i - 1] > v[i])) return false;
  }
  return !v.empty();
}

}  // namespace

JacobiCase parse_case(const std::string& s) {
  std::string k = s;
  if (k.rfind("jacobi-", 0) == 0) k = k.substr(7);
  if (k == "i") return JacobiCase::i;
  if (k == "ii") return JacobiCase::ii;
  if (k == "iii") return JacobiCase::iii;
  if (k == "iv") return JacobiCase::iv;
  throw InputError("unknown Jacobi case '" + s + "'");
}

const char* to_string(JacobiCase c) {
  switch (c) {
    case JacobiCase::i: return "i";
    case JacobiCase::ii: return "ii";
    case JacobiCase::iii: return "iii";
    case JacobiCase::iv: return "iv";
  }
  return "?";
}

Family jacobi_case_family(JacobiCase c) {
  return family_by_name(std::string("jacobi-") + to_string(c));
}

std::vector<double> jacobi_case_zeros(JacobiCase c, int q) {
  if (q < 0) throw InputError("q must be non-negative");
  std::vector<double> t(q + 1);
  for (int j = 1; j <= q + 1; ++j) {
    double angle = 0.0;
    switch (c) {
      case JacobiCase::i: angle = pi * (2 * j - 1) / (2.0 * q + 2.0); break;
      case JacobiCase::ii: angle = pi * (2 * j - 1) / (2.0 * q + 3.0); break;
      case JacobiCase::iii: angle = pi * j / (q + 2.0); break;
      case JacobiCase::iv: angle = pi * j / (q + 1.5); break;
    }
    t[j - 1] = std::cos(angle);
  }
  return t;
}

double jacobi_case_det_closed_form(JacobiCase c, int q, int nu, std::span<const int> nus) {
  check_points(q, nu, nus);
  const int m = static_cast<int>(nus.size());
  // Row order: nus from the largest down, then nu.
  std::vector<int> pts(nus.rbegin(), nus.rend());
  pts.push_back(nu);

  const bool first_kind = c == JacobiCase::i || c == JacobiCase::ii;
  std::vector<double> x(m + 1);
  for (int i = 0; i <= m; ++i) {
    switch (c) {
      case JacobiCase::i: x[i] = pi * pts[i] / (2.0 * q + 2.0); break;
      case JacobiCase::ii: x[i] = pi * (pts[i] + 0.5) / (2.0 * q + 3.0); break;
      case JacobiCase::iii: x[i] = pi * (pts[i] + 1.0) / (q + 2.0); break;
      case JacobiCase::iv: x[i] = pi * (pts[i] + 0.5) / (q + 1.5); break;
    }
  }

  double d = 1.0;
  if (first_kind) {
    // cos((2j-1)x) = 2^{2j-2} cos^{2j-1} x + lower odd powers.
    d = std::ldexp(1.0, m * (m + 1));
    for (int i = 0; i <= m; ++i) d *= std::cos(x[i]);
    for (int k = 0; k <= m; ++k) {
      for (int l = k + 1; l <= m; ++l) {
        const double ck = std::cos(x[k]);
        const double cl = std::cos(x[l]);
        d *= cl * cl - ck * ck;
      }
    }
    if (c == JacobiCase::ii) {
      // sqrt(2 / (1 + t_j)) = 1 / cos(theta_j / 2).
      for (int j = 1; j <= m + 1; ++j) d /= std::cos(0.5 * pi * (2 * j - 1) / (2.0 * q + 3.0));
    }
    return d;
  }

  // sin(jx) = sin x (2^{j-1} cos^{j-1} x + lower powers).
  d = std::ldexp(1.0, m * (m + 1) / 2);
  for (int i = 0; i <= m; ++i) d *= std::sin(x[i]);
  for (int k = 0; k <= m; ++k) {
    for (int l = k + 1; l <= m; ++l) d *= std::cos(x[l]) - std::cos(x[k]);
  }
  for (int i = 0; i <= m; ++i) {
    d /= c == JacobiCase::iii ? pts[i] + 1.0 : 2.0 * pts[i] + 1.0;
  }
  for (int j = 1; j <= m + 1; ++j) {
    // case iv: sqrt((1 - t_j) / 2) = sin(theta_j / 2), no cancellation near t_j = 1.
    d /= c == JacobiCase::iii ? std::sin(pi * j / (q + 2.0)) : std::sin(0.5 * pi * j / (q + 1.5));
  }
  return d;
}

double jacobi_case_det_numeric(JacobiCase c, int q, int nu, std::span<const int> nus) {
  check_points(q, nu, nus);
  const auto spec = compute_spectrum(jacobi_case_family(c).system(q, 0.0));
  const auto table = psi_system(spec, static_cast<int>(nus.size()) + 1);
  return bordered_det(table, nu, nus);
}

TrigCoefficients trig_cos_coeffs(int q, int m) {
  if (q < 0 || m < 0 || m > q) throw InputError("need 0 <= m <= q");
  const auto sys = chebyshev_t().system(q, 0.0);
  const auto g = gap_expand(sys, compute_spectrum(sys), m);
  // d_0 = 1 and d_l = 2 for T_l, so the cosine coefficients are 2 a_l,
  // which also matches the a_{0,m}/2 convention of the constant term.
  TrigCoefficients out;
  for (double a : g.a) out.values.push_back(2.0 * a);
  out.strictly_decreasing_positive = decreasing_positive(out.values);
  return out;
}

TrigCoefficients trig_sin_coeffs(int q, int m) {
  if (m < 1 || m > q) throw InputError("need 1 <= m <= q");
  // sin((q+1)x) = sin x U_q(cos x) with U the classical second kind (d_l = 1),
  // and sin x U_l(cos x) = sin((l+1)x).
  const auto sys = chebyshev_u().system(q - 1, 0.0);
  const auto g = gap_expand(sys, compute_spectrum(sys), m - 1);
  TrigCoefficients out;
  for (std::size_t l = 0; l < g.a.size(); ++l) out.values.push_back(g.a[l] / static_cast<double>(l + 1));
  out.strictly_decreasing_positive = decreasing_positive(out.values);
  return out;
}

}  // namespace dsturm
