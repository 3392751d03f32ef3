#include "dsturm/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dsturm/error.hpp"

namespace dsturm {
namespace {

constexpr double kLevelTol = 1e-9;

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void check_function(const DiscreteFunction& f, const SystemTable& s) {
  if (static_cast<int>(f.values.size()) != s.q() + 1) {
    throw InputError("function length does not match the system grid");
  }
  for (double v : f.values) {
    if (!std::isfinite(v)) throw InputError("function has a non-finite value");
  }
}

std::vector<double> error_on_grid(const DiscreteFunction& f, const SystemTable& s,
                                  std::span<const double> coeffs) {
  auto e = evaluate(s, coeffs);
  for (std::size_t nu = 0; nu < e.size(); ++nu) e[nu] -= f.values[nu];
  return e;
}

// Solves p(nu_i) + signs[i] * h = f(nu_i); returns (a_1..a_n, h).
std::vector<double> levelled_solve(const DiscreteFunction& f, const SystemTable& s,
                                   std::span<const int> points,
                                   std::span<const int> signs) {
  const int n = s.n();
  Matrix m(n + 1, n + 1);
  std::vector<double> rhs(n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int k = 0; k < n; ++k) m(i, k) = s(k, points[i]);
    m(i, n) = signs[i];
    rhs[i] = f.values[points[i]];
  }
  return solve(m, rhs);
}

ApproxResult interpolate_everywhere(const DiscreteFunction& f, const SystemTable& s) {
  std::vector<int> all(s.q() + 1);
  std::iota(all.begin(), all.end(), 0);
  ApproxResult r;
  r.coefficients = interpolate(s, all, f.values);
  r.E = max_abs(error_on_grid(f, s, r.coefficients));
  r.alternance = AlternanceCertificate{{0}, 1, r.E};
  return r;
}

}  // namespace

std::vector<double> evaluate(const SystemTable& s, std::span<const double> coefficients) {
  if (static_cast<int>(coefficients.size()) != s.n()) {
    throw InputError("coefficient count does not match the number of functions");
  }
  std::vector<double> p(s.q() + 1, 0.0);
  for (int k = 0; k < s.n(); ++k) {
    for (int nu = 0; nu <= s.q(); ++nu) p[nu] += coefficients[k] * s(k, nu);
  }
  return p;
}

std::vector<double> interpolate(const SystemTable& s, std::span<const int> nu,
                                std::span<const double> y, double det_rel_tol) {
  if (nu.size() != static_cast<std::size_t>(s.n()) || y.size() != nu.size()) {
    throw InputError("interpolation needs n points and n values");
  }
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 0 || nu[i] > s.q()) throw InputError("point outside the grid");
    if (i > 0 && nu[i] <= nu[i - 1]) throw InputError("points must be strictly increasing");
  }
  const Matrix m = point_matrix(s, nu);
  if (std::abs(determinant(m)) <= det_rel_tol * hadamard_bound(m)) {
    throw NumericalError("interpolation point set is singular for this system");
  }
  auto a = solve(m, std::vector<double>(y.begin(), y.end()));
  double resid = 0.0;
  for (int i = 0; i < m.rows; ++i) {
    double acc = -y[i];
    for (int k = 0; k < m.cols; ++k) acc += m(i, k) * a[k];
    resid = std::max(resid, std::abs(acc));
  }
  double ynorm = 0.0;
  for (double v : y) ynorm += v * v;
  if (resid > 1e-9 * std::max(std::sqrt(ynorm), 1e-300)) {
    throw NumericalError("interpolation residual exceeds tolerance");
  }
  return a;
}

ApproxResult best_approx(const DiscreteFunction& f, const SystemTable& s,
                         const ExchangeOptions& opt) {
  check_function(f, s);
  const int n = s.n();
  const int q = s.q();
  if (!opt.assume_tz) {
    const auto cert = certify(s, opt.certify);
    if (cert.kind != TKind::T_Z) {
      throw InputError(std::string("exchange mode needs a T_Z system, got ") +
                       to_string(cert.kind) + "; use the exhaustive oracle instead");
    }
  }
  if (n == q + 1) return interpolate_everywhere(f, s);

  const double scale = max_abs(f.values);
  std::vector<int> ref(n + 1);
  for (int i = 0; i <= n; ++i) {
    ref[i] = static_cast<int>(std::lround(static_cast<double>(i) * q / n));
  }

  ApproxResult r;
  std::vector<int> alternating(n + 1);
  for (int i = 0; i <= n; ++i) alternating[i] = i % 2 == 0 ? -1 : 1;
  std::vector<double> e;
  double h = 0.0;
  for (;;) {
    if (++r.iterations > opt.max_iterations) {
      throw NumericalError("exchange iteration limit reached");
    }
    std::vector<double> sol;
    try {
      // p(r_i) - f(r_i) = (-1)^i h with 0-based i.
      sol = levelled_solve(f, s, ref, alternating);
    } catch (const NumericalError&) {
      throw NumericalError("levelled system is singular on the current reference; "
                           "the system is not T_Z");
    }
    h = sol[n];
    sol.pop_back();
    r.coefficients = sol;
    if (!r.level_history.empty() &&
        std::abs(h) < r.level_history.back() * (1.0 - 1e-9) - 1e-15 * scale) {
      throw NumericalError("levelled error decreased during exchange; the system is not T_Z");
    }
    r.level_history.push_back(std::abs(h));

    e = error_on_grid(f, s, r.coefficients);
    int star = 0;
    for (int nu = 1; nu <= q; ++nu) {
      if (std::abs(e[nu]) > std::abs(e[star])) star = nu;
    }
    const double emax = std::abs(e[star]);
    if (emax <= 1e-12 * scale) break;  // f lies in the span
    if (emax <= std::abs(h) * (1.0 + 1e-12) + 1e-14 * scale) break;
    if (std::find(ref.begin(), ref.end(), star) != ref.end()) break;

    // Sign of the error at reference point i is (-1)^i sgn(h).
    const int hs = h >= 0.0 ? 1 : -1;
    const auto ref_sign = [hs](int i) { return i % 2 == 0 ? hs : -hs; };
    const int sig = sign_of(e[star]);
    if (star < ref.front()) {
      if (sig == ref_sign(0)) {
        ref.front() = star;
      } else {
        ref.pop_back();
        ref.insert(ref.begin(), star);
      }
    } else if (star > ref.back()) {
      if (sig == ref_sign(n)) {
        ref.back() = star;
      } else {
        ref.erase(ref.begin());
        ref.push_back(star);
      }
    } else {
      const auto it = std::upper_bound(ref.begin(), ref.end(), star);
      const int j = static_cast<int>(it - ref.begin()) - 1;  // ref[j] < star < ref[j+1]
      if (sig == ref_sign(j)) {
        ref[j] = star;
      } else {
        ref[j + 1] = star;
      }
    }
  }

  r.E = max_abs(e);
  if (r.E <= 1e-12 * scale) {
    r.alternance = AlternanceCertificate{{0}, 1, r.E};
  } else {
    r.alternance = AlternanceCertificate{ref, h >= 0.0 ? -1 : 1, r.E};
  }
  return r;
}

ApproxResult best_approx_oracle(const DiscreteFunction& f, const SystemTable& s,
                                std::uint64_t budget) {
  check_function(f, s);
  const int n = s.n();
  const int q = s.q();
  if (n == q + 1) return interpolate_everywhere(f, s);
  const std::uint64_t total = binomial(q + 1, n + 1);
  if (total > budget) {
    throw BudgetError("oracle needs " + std::to_string(total) + " reference sets, budget is " +
                      std::to_string(budget));
  }

  struct Candidate {
    double level;
    std::vector<int> points;
    std::vector<double> lambda;
  };
  std::vector<Candidate> cands;
  std::vector<int> subset(n + 1);
  std::iota(subset.begin(), subset.end(), 0);
  do {
    std::vector<double> lambda;
    try {
      lambda = dual_functional(s, subset);
    } catch (const NumericalError&) {
      continue;
    }
    if (std::any_of(lambda.begin(), lambda.end(),
                    [](double v) { return std::abs(v) <= 1e-12; })) {
      continue;
    }
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i <= n; ++i) {
      num += lambda[i] * f.values[subset[i]];
      den += std::abs(lambda[i]);
    }
    cands.push_back({std::abs(num) / den, subset, std::move(lambda)});
  } while (next_combination_colex(subset, q + 1));
  if (cands.empty()) throw NumericalError("no non-degenerate reference set exists");

  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.level > b.level; });
  const double scale = max_abs(f.values);
  for (const auto& c : cands) {
    std::vector<int> sg(n + 1);
    for (int i = 0; i <= n; ++i) sg[i] = sign_of(c.lambda[i]);
    std::vector<double> sol;
    try {
      sol = levelled_solve(f, s, c.points, sg);
    } catch (const NumericalError&) {
      continue;
    }
    const double h = sol[n];
    sol.pop_back();
    const auto e = error_on_grid(f, s, sol);
    const double sup = max_abs(e);
    if (sup > std::abs(h) * (1.0 + kLevelTol) + 1e-12 * std::max(scale, 1.0)) continue;

    ApproxResult r;
    r.coefficients = sol;
    r.E = sup;
    r.iterations = 1;
    r.level_history = {std::abs(h)};
    DualCertificate d;
    d.points = c.points;
    for (int i = 0; i <= n; ++i) {
      // p - f = -sg_i h at the reference points.
      d.signs.push_back(h >= 0.0 ? -sg[i] : sg[i]);
      d.weights.push_back(std::abs(c.lambda[i]));
    }
    bool alternates = true;
    for (int i = 0; i < n; ++i) alternates = alternates && d.signs[i] != d.signs[i + 1];
    if (alternates) {
      // e(nu_i) = d.signs[i] E and eps (-1)^i e(nu_i) = E with 1-based i.
      r.alternance = AlternanceCertificate{d.points, -d.signs[0], r.E};
    }
    r.dual = std::move(d);
    return r;
  }
  throw NumericalError("no levelled reference attains its level on the grid");
}

OptimalityReport verify_optimality(const DiscreteFunction& f, const SystemTable& s,
                                   const ApproxResult& result) {
  check_function(f, s);
  OptimalityReport rep;
  const auto e = error_on_grid(f, s, result.coefficients);
  const double E = result.E;
  const double tol = kLevelTol * (1.0 + E);
  const double sup = max_abs(e);
  rep.sup_excess = std::max(0.0, sup - E);

  const double scale = std::max(max_abs(f.values), 1.0);
  if (E <= 1e-12 * scale) {
    rep.signs_match = true;
    rep.pass = sup <= tol;
    if (!rep.pass) rep.reason = "E = 0 claimed but the error is nonzero";
    return rep;
  }

  std::vector<int> points;
  std::vector<int> signs;
  if (result.alternance) {
    points = result.alternance->points;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int parity = (i + 1) % 2 == 0 ? 1 : -1;
      signs.push_back(result.alternance->orientation * parity);
    }
  } else if (result.dual) {
    points = result.dual->points;
    signs = result.dual->signs;
  } else {
    rep.reason = "result carries no certificate";
    return rep;
  }
  if (points.size() != static_cast<std::size_t>(s.n()) + 1) {
    rep.reason = "certificate needs n + 1 points";
    return rep;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    rep.level_residual = std::max(rep.level_residual, std::abs(signs[i] * e[points[i]] - E));
  }
  const bool levels_ok = rep.level_residual <= tol && rep.sup_excess <= tol;

  try {
    const auto lambda = dual_functional(s, points);
    int global = 0;
    rep.signs_match = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int ls = std::abs(lambda[i]) > 1e-12 ? sign_of(lambda[i]) : 0;
      if (ls == 0) {
        rep.signs_match = false;
        break;
      }
      if (global == 0) global = ls * signs[i];
      if (ls != global * signs[i]) {
        rep.signs_match = false;
        break;
      }
    }
  } catch (const NumericalError&) {
    rep.signs_match = false;
  }

  rep.pass = levels_ok && rep.signs_match;
  if (!levels_ok) {
    rep.reason = "error level is not attained with the certified signs";
  } else if (!rep.signs_match) {
    rep.reason = "dual functional signs do not match the certificate";
  }
  return rep;
}

CounterexampleSolution t0_counterexample_solution(const DiscreteFunction& f) {
  const int q = static_cast<int>(f.values.size()) - 1;
  if (q < 2) throw InputError("the counterexample solution needs q >= 2");
  const auto& v = f.values;
  double head = 0.0;
  for (int nu = 0; nu <= q - 2; ++nu) head += v[nu];
  CounterexampleSolution out;
  out.lambda = -(head - v[q - 1] - v[q]) / (q + 1.0);
  out.E = std::abs(out.lambda);
  out.coefficients.resize(q);
  for (int k = 1; k <= q - 1; ++k) out.coefficients[k - 1] = v[k - 1] + out.lambda;
  out.coefficients[q - 1] = v[q - 1] - out.lambda;
  out.values.resize(q + 1);
  for (int nu = 0; nu <= q - 2; ++nu) out.values[nu] = v[nu] + out.lambda;
  out.values[q - 1] = v[q - 1] - out.lambda;
  out.values[q] = head - v[q - 1] + q * out.lambda;
  return out;
}

std::optional<std::vector<int>> find_alternance(std::span<const double> e, int length,
                                                double tol, std::uint64_t budget) {
  if (length < 1) throw InputError("alternance length must be positive");
  const double E = max_abs(e);
  std::vector<int> cand;
  for (std::size_t nu = 0; nu < e.size(); ++nu) {
    if (std::abs(e[nu]) >= E - tol && e[nu] != 0.0) cand.push_back(static_cast<int>(nu));
  }
  if (E == 0.0) return length == 1 ? std::optional<std::vector<int>>{{0}} : std::nullopt;
  const int c = static_cast<int>(cand.size());
  if (length > c) return std::nullopt;
  if (binomial(c, length) > budget) throw BudgetError("alternance search exceeds its budget");
  std::vector<int> idx(length);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < length && ok; ++i) {
      ok = sign_of(e[cand[idx[i]]]) != sign_of(e[cand[idx[i + 1]]]);
    }
    if (ok) {
      std::vector<int> pts(length);
      for (int i = 0; i < length; ++i) pts[i] = cand[idx[i]];
      return pts;
    }
  } while (next_combination_colex(idx, c));
  return std::nullopt;
}

}  // namespace dsturm
