#include "dsturm/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dsturm/error.hpp"

namespace dsturm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxBisections = 200;

double pivot_floor(std::span<const double> off) {
  double emax = 1.0;
  for (double e : off) emax = std::max(emax, e * e);
  return std::numeric_limits<double>::min() * emax;
}

int count_below(std::span<const double> diag, std::span<const double> off,
                double x, double pivmin) {
  int count = 0;
  double piv = diag[0] - x;
  if (std::abs(piv) < pivmin) piv = -pivmin;
  if (piv < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    piv = (diag[i] - x) - off[i - 1] * off[i - 1] / piv;
    if (std::abs(piv) < pivmin) piv = -pivmin;
    if (piv < 0.0) ++count;
  }
  return count;
}

void check_shape(std::span<const double> diag, std::span<const double> off) {
  if (diag.empty()) throw InputError("tridiagonal matrix must be non-empty");
  if (off.size() + 1 != diag.size()) {
    throw InputError("off-diagonal length must be diag length - 1");
  }
}

}  // namespace

int sturm_count(std::span<const double> diag, std::span<const double> off,
                double x) {
  check_shape(diag, off);
  return count_below(diag, off, x, pivot_floor(off));
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> off) {
  check_shape(diag, off);
  const std::size_t n = diag.size();
  for (double v : diag) {
    if (!std::isfinite(v)) throw InputError("non-finite diagonal entry");
  }
  for (double v : off) {
    if (!std::isfinite(v)) throw InputError("non-finite off-diagonal entry");
  }

  // Gershgorin enclosure of the whole spectrum.
  double gl = std::numeric_limits<double>::infinity();
  double gu = -gl;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    gl = std::min(gl, diag[i] - r);
    gu = std::max(gu, diag[i] + r);
  }
  const double tnorm = std::max(std::abs(gl), std::abs(gu));
  const double pivmin = pivot_floor(off);
  const double atol = 2.0 * kEps * tnorm + pivmin;
  gl -= 2.0 * kEps * tnorm * static_cast<double>(n) + 2.0 * pivmin;
  gu += 2.0 * kEps * tnorm * static_cast<double>(n) + 2.0 * pivmin;

  std::vector<double> ascending(n);
  double lo_hint = gl;
  for (std::size_t j = 0; j < n; ++j) {
    double lo = lo_hint;
    double hi = gu;
    int iter = 0;
    while (hi - lo > 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + atol) {
      if (++iter > kMaxBisections) {
        throw NumericalError("bisection did not converge for eigenvalue " +
                             std::to_string(j));
      }
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_below(diag, off, mid, pivmin) <= static_cast<int>(j)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    ascending[j] = 0.5 * (lo + hi);
    // The next eigenvalue cannot lie below the current lower bracket.
    lo_hint = lo;
  }
  std::reverse(ascending.begin(), ascending.end());
  return ascending;
}

}  // namespace dsturm
