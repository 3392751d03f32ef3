#include "dsturm/poly.hpp"

#include <algorithm>

#include "dsturm/error.hpp"

namespace dsturm {

double poly_eval(std::span<const double> p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_mul(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_divide_linear(std::span<const double> p, double root, double* remainder) {
  if (p.size() < 2) throw InputError("cannot divide a constant by a linear factor");
  const std::size_t deg = p.size() - 1;
  Poly quot(deg);
  double carry = p[deg];
  for (std::size_t i = deg; i-- > 0;) {
    quot[i] = carry;
    carry = p[i] + carry * root;
  }
  if (remainder != nullptr) *remainder = carry;
  return quot;
}

std::vector<Poly> monomial_polys(const RecurrenceSystem& sys, int l_max) {
  validate(sys);
  if (l_max < 0 || l_max > sys.q + 1) throw InputError("l_max outside [0, q+1]");
  std::vector<Poly> p(l_max + 1);
  p[0] = {1.0};
  for (int l = 0; l < l_max; ++l) {
    Poly next(l + 2, 0.0);
    for (int i = 0; i <= l; ++i) {
      next[i + 1] += sys.rho[l] * p[l][i];
      next[i] -= sys.alpha[l] * p[l][i];
    }
    if (l > 0) {
      for (int i = 0; i < l; ++i) next[i] -= sys.gamma[l - 1] * p[l - 1][i];
    }
    for (double& v : next) v /= sys.beta[l];
    p[l + 1] = std::move(next);
  }
  return p;
}

}  // namespace dsturm
