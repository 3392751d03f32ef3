#include "dsturm/chebsys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "dsturm/error.hpp"

namespace dsturm {
namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

void check_points(const SystemTable& s, std::span<const int> nu, std::size_t count) {
  if (nu.size() != count) {
    throw InputError("expected " + std::to_string(count) + " points, got " +
                     std::to_string(nu.size()));
  }
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 0 || nu[i] > s.q()) throw InputError("point outside the grid");
    if (i > 0 && nu[i] <= nu[i - 1]) throw InputError("points must be strictly increasing");
  }
}

struct Evaluated {
  double det;
  double tol;
};

Evaluated evaluate(const SystemTable& s, std::span<const int> points, double rel_tol) {
  const Matrix m = point_matrix(s, points);
  return {determinant(m), rel_tol * hadamard_bound(m)};
}

std::vector<int> random_subset(std::mt19937_64& rng, int lo, int hi, int count) {
  std::vector<int> pool(hi - lo + 1);
  std::iota(pool.begin(), pool.end(), lo);
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(i, static_cast<int>(pool.size()) - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

SystemTable::SystemTable(std::vector<std::vector<double>> rows, double sign_tol)
    : rows_(std::move(rows)), sign_tol_(sign_tol) {
  if (rows_.empty()) throw InputError("system table needs at least one function");
  const std::size_t len = rows_.front().size();
  if (len == 0) throw InputError("system table rows must be non-empty");
  for (const auto& r : rows_) {
    if (r.size() != len) throw InputError("system table rows have unequal lengths");
    for (double v : r) {
      if (!std::isfinite(v)) throw InputError("system table has a non-finite entry");
    }
  }
  if (rows_.size() > len) throw InputError("more functions than grid points (n > q + 1)");
  if (!(sign_tol_ >= 0.0)) throw InputError("sign_tol must be non-negative");
}

SystemTable monomial_system(int n, int q) {
  if (n < 1 || q < 0) throw InputError("monomial system needs n >= 1 and q >= 0");
  std::vector<std::vector<double>> rows(n, std::vector<double>(q + 1));
  for (int k = 0; k < n; ++k) {
    for (int nu = 0; nu <= q; ++nu) rows[k][nu] = std::pow(static_cast<double>(nu), k);
  }
  return SystemTable(std::move(rows));
}

SystemTable t0_counterexample_system(int q) {
  if (q < 2) throw InputError("the counterexample system needs q >= 2");
  std::vector<std::vector<double>> rows(q, std::vector<double>(q + 1, 0.0));
  for (int k = 1; k <= q - 1; ++k) {
    rows[k - 1][k - 1] = 1.0;
    rows[k - 1][q] = 1.0;
  }
  rows[q - 1][q - 1] = 1.0;
  rows[q - 1][q] = -1.0;
  return SystemTable(std::move(rows));
}

SystemTable psi_system(const Spectrum& spec, int n) {
  if (n < 1 || n > static_cast<int>(spec.psi.size())) {
    throw InputError("psi system size out of range");
  }
  return SystemTable(std::vector<std::vector<double>>(spec.psi.begin(), spec.psi.begin() + n));
}

Matrix point_matrix(const SystemTable& s, std::span<const int> points) {
  Matrix m(static_cast<int>(points.size()), s.n());
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) m(i, j) = s(j, points[i]);
  }
  return m;
}

double gram_det(const SystemTable& s, std::span<const int> nu) {
  check_points(s, nu, static_cast<std::size_t>(s.n()));
  return determinant(point_matrix(s, nu));
}

const char* to_string(TKind k) {
  switch (k) {
    case TKind::T_Z: return "T_Z";
    case TKind::T0_only: return "T0_only";
    case TKind::neither: return "neither";
  }
  return "unknown";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

bool next_combination_colex(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    const int limit = i + 1 < k ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (int j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

TSystemCertificate certify(const SystemTable& s, const CertifyOptions& opt) {
  const int n = s.n();
  const int points = s.q() + 1;
  TSystemCertificate cert;

  std::vector<int> subset(n);
  std::iota(subset.begin(), subset.end(), 0);

  Matrix full(n, points);
  for (int k = 0; k < n; ++k) {
    for (int nu = 0; nu < points; ++nu) full(k, nu) = s(k, nu);
  }
  if (numerical_rank(full, 1e-12) < n) {
    cert.kind = TKind::neither;
    cert.witness = subset;
    cert.witness_det = gram_det(s, subset);
    cert.min_abs_det = std::abs(cert.witness_det);
    return cert;
  }

  const std::uint64_t total = binomial(points, n);
  if (total > opt.budget) {
    throw BudgetError("certify needs " + std::to_string(total) +
                      " subsets, budget is " + std::to_string(opt.budget) +
                      "; sampling mode can refute but not certify");
  }

  int first_sign = 0;
  bool opposite = false;
  cert.min_abs_det = std::numeric_limits<double>::infinity();
  do {
    const auto ev = evaluate(s, subset, opt.det_rel_tol);
    ++cert.subsets_checked;
    const double ad = std::abs(ev.det);
    cert.min_abs_det = std::min(cert.min_abs_det, ad);
    if (ad <= ev.tol) {
      cert.kind = TKind::neither;
      cert.witness = subset;
      cert.witness_det = ev.det;
      cert.common_sign = 0;
      return cert;
    }
    const int sg = sign_of(ev.det);
    if (first_sign == 0) {
      first_sign = sg;
    } else if (sg != first_sign && !opposite) {
      opposite = true;
      cert.witness = subset;
      cert.witness_det = ev.det;
    }
  } while (next_combination_colex(subset, points));

  if (opposite) {
    cert.kind = TKind::T0_only;
  } else {
    cert.kind = TKind::T_Z;
    cert.common_sign = first_sign;
  }
  return cert;
}

SampledCheck certify_sampled(const SystemTable& s, std::uint64_t samples,
                             std::uint64_t seed, double det_rel_tol) {
  SampledCheck out;
  std::mt19937_64 rng(seed);
  int first_sign = 0;
  out.min_abs_det = std::numeric_limits<double>::infinity();
  for (std::uint64_t t = 0; t < samples; ++t) {
    const auto subset = random_subset(rng, 0, s.q(), s.n());
    const auto ev = evaluate(s, subset, det_rel_tol);
    ++out.samples;
    out.min_abs_det = std::min(out.min_abs_det, std::abs(ev.det));
    if (std::abs(ev.det) <= ev.tol) {
      out.refuted = true;
      out.kind = TKind::neither;
      out.witness = subset;
      out.witness_det = ev.det;
      return out;
    }
    const int sg = sign_of(ev.det);
    if (first_sign == 0) {
      first_sign = sg;
    } else if (sg != first_sign && !out.refuted) {
      // Keep sampling: a later zero determinant would downgrade the kind.
      out.refuted = true;
      out.kind = TKind::T0_only;
      out.witness = subset;
      out.witness_det = ev.det;
    }
  }
  return out;
}

std::vector<double> dual_functional(const SystemTable& s, std::span<const int> nu) {
  const int n = s.n();
  check_points(s, nu, static_cast<std::size_t>(n) + 1);
  std::vector<double> lambda(n + 1);
  std::vector<int> rest(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0, r = 0; j <= n; ++j) {
      if (j != i) rest[r++] = nu[j];
    }
    const double delta = determinant(point_matrix(s, rest));
    // 1-based index i + 1 gives the factor (-1)^{i+1}.
    lambda[i] = (i % 2 == 0) ? -delta : delta;
  }
  double peak = 0.0;
  for (double v : lambda) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) throw NumericalError("all cofactors vanish; the point set is degenerate");
  for (double& v : lambda) v /= peak;

  for (int k = 0; k < n; ++k) {
    double acc = 0.0;
    double norm = 0.0;
    for (int i = 0; i <= n; ++i) {
      acc += lambda[i] * s(k, nu[i]);
      norm += s(k, nu[i]) * s(k, nu[i]);
    }
    if (std::abs(acc) > 1e-9 * std::sqrt(norm)) {
      throw NumericalError("dual functional residual " + std::to_string(std::abs(acc)) +
                           " exceeds tolerance for function " + std::to_string(k + 1));
    }
  }
  return lambda;
}

double bordered_det(const SystemTable& s, int nu, std::span<const int> nus) {
  const int m = static_cast<int>(nus.size());
  if (s.n() != m + 1) throw InputError("bordered determinant needs m + 1 functions");
  if (nu < 0 || nu > s.q()) throw InputError("nu outside the grid");
  for (int j = 0; j < m; ++j) {
    if (nus[j] < 1 || nus[j] > s.q()) throw InputError("bordering point outside 1..q");
    if (j > 0 && nus[j] <= nus[j - 1]) throw InputError("bordering points must increase");
  }
  std::vector<int> rows(nus.rbegin(), nus.rend());
  rows.push_back(nu);
  return determinant(point_matrix(s, rows));
}

BorderedSignReport bordered_sign_check(const SystemTable& s, int trials, std::uint64_t seed) {
  const int m = s.n() - 1;
  const int q = s.q();
  if (m > q) throw InputError("bordered sign check needs m <= q");
  BorderedSignReport rep;
  std::vector<int> top(m);
  std::iota(top.begin(), top.end(), q - m + 1);
  rep.reference_sign = sign_of(bordered_det(s, 0, top));
  if (rep.reference_sign == 0) {
    rep.pass = false;
    rep.witness_nu = 0;
    rep.witness_nus = top;
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_nu(0, q);
  for (int t = 0; t < trials; ++t) {
    const auto nus = random_subset(rng, 1, q, m);
    const int nu = pick_nu(rng);
    std::vector<int> rows(nus.rbegin(), nus.rend());
    rows.push_back(nu);
    const Matrix mat = point_matrix(s, rows);
    const double d = determinant(mat);
    const double tol = 1e-10 * hadamard_bound(mat);
    ++rep.trials;
    int r_sign = 1;
    for (int v : nus) r_sign *= sign_of(static_cast<double>(v - nu));
    bool ok;
    if (r_sign == 0) {
      ok = std::abs(d) <= tol;
    } else {
      ok = std::abs(d) > tol && sign_of(d) == rep.reference_sign * r_sign;
    }
    if (!ok) {
      rep.pass = false;
      rep.witness_nu = nu;
      rep.witness_nus = nus;
      rep.witness_det = d;
      return rep;
    }
  }
  return rep;
}

}  // namespace dsturm
