#include "dsturm/families.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "dsturm/error.hpp"

namespace dsturm {
namespace {

RecurrenceSystem blank(int q, double eta) {
  if (q < 0) throw InputError("q must be non-negative");
  RecurrenceSystem s;
  s.q = q;
  s.alpha.assign(q + 1, 0.0);
  s.beta.assign(q + 1, 0.0);
  s.gamma.assign(q, 0.0);
  s.rho.assign(q + 1, 1.0);
  s.eta = eta;
  return s;
}

// Monic Jacobi shift: x p_n = p_{n+1} + A_n p_n + B_n p_{n-1}.
double jacobi_A(int n, double a, double b) {
  if (n == 0) return (b - a) / (a + b + 2.0);
  const double s = 2.0 * n + a + b;
  return (b * b - a * a) / (s * (s + 2.0));
}

double jacobi_B(int n, double a, double b) {
  if (n == 1) {
    // The general formula has 0/0 at a + b = -1; this is its limit.
    return 4.0 * (1.0 + a) * (1.0 + b) /
           ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
  }
  const double s = 2.0 * n + a + b;
  return 4.0 * n * (n + a) * (n + b) * (n + a + b) /
         (s * s * (s + 1.0) * (s - 1.0));
}

// p_{n+1}(1) / p_n(1) for monic Jacobi, from p_n(1) = 2^n (a+1)_n / (n+a+b+1)_n.
double jacobi_ratio_at_one(int n, double a, double b) {
  if (n == 0) return 2.0 * (a + 1.0) / (a + b + 2.0);
  const double s = 2.0 * n + a + b;
  return 2.0 * (n + a + 1.0) * (n + a + b + 1.0) / ((s + 1.0) * (s + 2.0));
}

}  // namespace

Family::Family(std::string name, Generator generator)
    : name_(std::move(name)), generator_(std::move(generator)) {}

RecurrenceSystem Family::system(int q, double eta) const {
  auto s = generator_(q, eta);
  validate(s);
  return s;
}

Quadrature Family::quadrature(int n_nodes) const {
  if (n_nodes < 1) throw InputError("n_nodes must be at least 1");
  return gauss_quadrature(system(n_nodes - 1), n_nodes);
}

Family chebyshev_t() {
  return Family("chebyshev-t", [](int q, double eta) {
    auto s = blank(q, eta);
    for (int l = 0; l <= q; ++l) s.beta[l] = l == 0 ? 1.0 : 0.5;
    for (int l = 0; l < q; ++l) s.gamma[l] = 0.5;
    return s;
  });
}

Family chebyshev_u() {
  return Family("chebyshev-u", [](int q, double eta) {
    auto s = blank(q, eta);
    for (int l = 0; l <= q; ++l) s.beta[l] = 0.5;
    for (int l = 0; l < q; ++l) s.gamma[l] = 0.5;
    return s;
  });
}

Family legendre() {
  return Family("legendre", [](int q, double eta) {
    auto s = blank(q, eta);
    for (int l = 0; l <= q; ++l) s.beta[l] = (l + 1.0) / (2.0 * l + 1.0);
    for (int l = 0; l < q; ++l) s.gamma[l] = (l + 1.0) / (2.0 * l + 3.0);
    return s;
  });
}

Family jacobi(double a, double b) {
  if (!(a > -1.0) || !(b > -1.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InputError("Jacobi parameters must satisfy a, b > -1");
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "jacobi(%.17g,%.17g)", a, b);
  return Family(buf, [a, b](int q, double eta) {
    // U_n = p_n / p_n(1): x U_n = r_n U_{n+1} + A_n U_n + (B_n / r_{n-1}) U_{n-1}.
    auto s = blank(q, eta);
    for (int n = 0; n <= q; ++n) {
      s.alpha[n] = jacobi_A(n, a, b);
      s.beta[n] = jacobi_ratio_at_one(n, a, b);
    }
    for (int n = 1; n <= q; ++n) {
      s.gamma[n - 1] = jacobi_B(n, a, b) / jacobi_ratio_at_one(n - 1, a, b);
    }
    return s;
  });
}

Family family_by_name(const std::string& name, double a, double b) {
  if (name == "chebyshev-t") return chebyshev_t();
  if (name == "chebyshev-u") return chebyshev_u();
  if (name == "legendre") return legendre();
  if (name == "jacobi") return jacobi(a, b);
  // Chebyshev-type cases: (alpha, beta) in {(0,0), (0,1), (1,1), (1,0)} shifted by -1/2.
  const auto renamed = [&name](double ja, double jb) {
    Family base = jacobi(ja, jb);
    return Family(name, [base](int q, double eta) { return base.system(q, eta); });
  };
  if (name == "jacobi-i") return renamed(-0.5, -0.5);
  if (name == "jacobi-ii") return renamed(-0.5, 0.5);
  if (name == "jacobi-iii") return renamed(0.5, 0.5);
  if (name == "jacobi-iv") return renamed(0.5, -0.5);
  throw InputError("unknown family '" + name + "'");
}

}  // namespace dsturm
