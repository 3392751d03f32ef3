#include "dsturm/battery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <tuple>

#include "dsturm/chebsys.hpp"
#include "dsturm/classical.hpp"
#include "dsturm/error.hpp"
#include "dsturm/families.hpp"
#include "dsturm/gapfourier.hpp"
#include "dsturm/minimax.hpp"
#include "dsturm/oscillation.hpp"
#include "dsturm/spectrum.hpp"
#include "dsturm/yudin.hpp"

namespace dsturm::battery {
namespace {

using Rng = std::mt19937_64;

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "chebyshev-t", "chebyshev-u", "legendre", "jacobi-i", "jacobi-ii", "jacobi-iii", "jacobi-iv"};
  return names;
}

std::string fmt(const char* format, double a = 0.0, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

class SpectrumCache {
 public:
  const Spectrum& get(const std::string& family, int q, double eta) {
    const auto key = std::make_tuple(family, q, eta);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, compute_spectrum(family_by_name(family).system(q, eta))).first;
    }
    return it->second;
  }

 private:
  std::map<std::tuple<std::string, int, double>, Spectrum> cache_;
};

Outcome eigenfunction_counts(const Options& opt) {
  int cases = 0;
  for (const auto& name : family_names()) {
    const Family fam = family_by_name(name);
    for (int q : {5, 12, 30}) {
      const double eb = eta_b(fam.system(q, 0.0), 1.0);
      for (double eta : {0.0, 0.5, -0.5, eb}) {
        auto spec = compute_spectrum(fam.system(q, eta));
        if (opt.fault == Fault::oscillation) spec.psi[0][1] = -spec.psi[0][1];
        const auto rep = verify_eigenfunction_counts(spec);
        ++cases;
        if (!rep.pass) {
          return {false, name + " q=" + std::to_string(q) + fmt(" eta=%.6g", eta) +
                             ": counts differ from k-1 at k=" +
                             std::to_string(rep.first_failing_k)};
        }
      }
    }
  }
  return {true, std::to_string(cases) + " (family, q, eta) cases, every eigenfunction exact"};
}

Outcome combination_chain(const Options& opt) {
  Rng rng(opt.seed + 2);
  SpectrumCache cache;
  const double etas[] = {0.0, 0.5, -0.5};
  int violations = 0;
  std::string first;
  for (int draw = 0; draw < 500; ++draw) {
    const auto& name = family_names()[uniform_int(rng, 0, 6)];
    const int q = uniform_int(rng, 1, 15);
    const double eta = etas[uniform_int(rng, 0, 2)];
    const auto& spec = cache.get(name, q, eta);
    const int m = uniform_int(rng, 1, q + 1);
    const int n = uniform_int(rng, m, q + 1);
    std::vector<double> a(n - m + 1);
    for (double& v : a) v = normal(rng);
    const auto rep = verify_combination_chain(spec, m, n, a);
    if (!rep.pass) {
      if (violations++ == 0) {
        first = name + " q=" + std::to_string(q) + " m=" + std::to_string(m) +
                " n=" + std::to_string(n);
      }
    }
  }
  if (violations > 0) return {false, std::to_string(violations) + " violations, first " + first};
  return {true, "500 draws, 0 violations"};
}

Outcome splus_rule(const Options& opt) {
  Rng rng(opt.seed + 3);
  for (int t = 0; t < 1000; ++t) {
    const int len = uniform_int(rng, 1, 12);
    const int zeros = uniform_int(rng, 0, std::min(10, len));
    std::vector<int> idx(len);
    for (int i = 0; i < len; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    DiscreteFunction f;
    f.values.resize(len);
    for (int i = 0; i < len; ++i) {
      f.values[i] = (uniform_int(rng, 0, 1) == 0 ? -1.0 : 1.0) * (0.5 + uniform_int(rng, 0, 9));
    }
    for (int i = 0; i < zeros; ++i) f.values[idx[i]] = 0.0;
    const int rule = oscillation_report(f).S_plus;
    const int brute = splus_bruteforce(f);
    if (rule != brute) {
      return {false, "pattern " + std::to_string(t) + ": rule " + std::to_string(rule) +
                         " vs brute force " + std::to_string(brute)};
    }
  }
  return {true, "1000 patterns agree"};
}

Outcome determinant_oracles(const Options& opt) {
  Rng rng(opt.seed + 4);
  double worst = 0.0;
  for (JacobiCase c : {JacobiCase::i, JacobiCase::ii, JacobiCase::iii, JacobiCase::iv}) {
    for (int t = 0; t < 100; ++t) {
      const int q = uniform_int(rng, 1, 10);
      const int m = uniform_int(rng, 0, std::min(3, q));
      std::vector<int> pool(q);
      for (int i = 0; i < q; ++i) pool[i] = i + 1;
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> nus(pool.begin(), pool.begin() + m);
      std::sort(nus.begin(), nus.end());
      const int nu = uniform_int(rng, 0, q);
      const double closed = jacobi_case_det_closed_form(c, q, nu, nus);
      const double numeric = jacobi_case_det_numeric(c, q, nu, nus);
      if (std::abs(closed) < 1e-12 && std::abs(numeric) < 1e-12) continue;
      const double rel = std::abs(closed - numeric) / std::abs(closed);
      worst = std::max(worst, rel);
      if (!(rel <= 1e-8)) {
        return {false, std::string("case ") + to_string(c) + " q=" + std::to_string(q) +
                           fmt(": closed %.17g numeric %.17g", closed, numeric)};
      }
    }
  }
  return {true, fmt("400 tuples, worst relative error %.3g", worst)};
}

Outcome spectrum_ground_truth(const Options& opt) {
  auto spec = compute_spectrum(chebyshev_t().system(2, 0.0));
  if (opt.fault == Fault::spectrum) {
    for (double& l : spec.lambdas) l += 1e-3;
  }
  const double r3 = std::sqrt(3.0) / 2.0;
  const double expect[] = {r3, 0.0, -r3};
  double err_t = 0.0;
  for (int k = 0; k < 3; ++k) err_t = std::max(err_t, std::abs(spec.lambdas[k] - expect[k]));
  double err_u = 0.0;
  for (int q = 0; q <= 20; ++q) {
    const auto s = compute_spectrum(chebyshev_u().system(q, 0.0));
    for (int j = 1; j <= q + 1; ++j) {
      err_u = std::max(err_u, std::abs(s.lambdas[j - 1] - std::cos(std::numbers::pi * j / (q + 2.0))));
    }
  }
  const bool ok = err_t <= 1e-12 && err_u <= 1e-10;
  return {ok, fmt("first-kind q=2 error %.3g, second-kind zeros error %.3g", err_t, err_u)};
}

Outcome gap_expansion(const Options& opt) {
  const auto t1 = chebyshev_t().system(1, 0.0);
  const auto g = gap_expand(t1, compute_spectrum(t1), 0);
  const double e0 = std::max(std::abs(g.a[0] - std::sqrt(2.0)), std::abs(g.a[1] - 1.0));
  if (!(e0 <= 1e-12)) return {false, fmt("q=1 coefficients off by %.3g", e0)};

  Rng rng(opt.seed + 6);
  double worst_route = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto& name = family_names()[uniform_int(rng, 0, 6)];
    const int q = uniform_int(rng, 1, 20);
    const int m = uniform_int(rng, 0, q);
    const double eta = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    const auto sys = family_by_name(name).system(q, eta);
    try {
      const auto gx = gap_expand(sys, compute_spectrum(sys), m);
      worst_route = std::max(worst_route, gx.route_discrepancy);
    } catch (const NumericalError& e) {
      return {false, name + " q=" + std::to_string(q) + ": " + e.what()};
    }
  }

  int sweeps = 0;
  double worst_spread = 0.0;
  for (const auto& name : family_names()) {
    const Family fam = family_by_name(name);
    for (int q : {3, 8}) {
      const double eb = eta_b(fam.system(q, 0.0), 1.0);
      for (double eta : {eb - 1.0, eb, eb + 1.0}) {
        const auto sys = fam.system(q, eta);
        const auto spec = compute_spectrum(sys);
        for (int m = 0; m <= 2; ++m) {
          const auto rep = classify_and_verify(gap_expand(sys, spec, m), sys, 1.0);
          ++sweeps;
          if (rep.classification.eta_case == EtaCase::b) worst_spread = std::max(worst_spread, rep.spread);
          if (!rep.pass) {
            return {false, name + " q=" + std::to_string(q) + " m=" + std::to_string(m) +
                               " case " + to_string(rep.classification.eta_case) + ": verdict " +
                               to_string(rep.verdict)};
          }
        }
      }
    }
  }
  return {true, fmt("route discrepancy %.3g over 100 draws; ", worst_route) + std::to_string(sweeps) +
                    fmt(" ordering checks, case-b spread %.3g", worst_spread)};
}

Outcome remez_vs_oracle(const Options& opt) {
  {
    const auto s = monomial_system(2, 2);
    const auto r = best_approx(DiscreteFunction{{0.0, 1.0, 4.0}}, s);
    if (!(std::abs(r.E - 0.5) <= 1e-12)) return {false, fmt("square example gave E = %.17g", r.E)};
  }
  Rng rng(opt.seed + 7);
  SpectrumCache cache;
  const double etas[] = {0.0, 0.5, -0.5};
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int q = uniform_int(rng, 2, 12);
    const int n = uniform_int(rng, 1, std::min(5, q));
    const bool psi = t % 2 == 1;
    std::string label = psi ? "psi" : "monomial";
    std::string family;
    double eta = 0.0;
    if (psi) {
      family = family_names()[uniform_int(rng, 0, 6)];
      eta = etas[uniform_int(rng, 0, 2)];
      label += " " + family;
    }
    const SystemTable s = psi ? psi_system(cache.get(family, q, eta), n) : monomial_system(n, q);
    DiscreteFunction f;
    for (int nu = 0; nu <= q; ++nu) f.values.push_back(normal(rng));
    auto ex = best_approx(f, s);
    const auto orc = best_approx_oracle(f, s);
    const double diff = std::abs(ex.E - orc.E);
    worst = std::max(worst, diff);
    const std::string where = label + " q=" + std::to_string(q) + " n=" + std::to_string(n);
    if (!(diff <= 1e-9 * std::max(1.0, orc.E))) {
      return {false, where + fmt(": exchange E %.17g vs oracle %.17g", ex.E, orc.E)};
    }
    if (opt.fault == Fault::minimax) ex.coefficients[0] += 1e-2;
    const auto ver = verify_optimality(f, s, ex);
    if (!ver.pass) return {false, where + ": certificate rejected (" + ver.reason + ")"};
  }
  return {true, fmt("200 instances, worst |E difference| %.3g", worst)};
}

Outcome t0_counterexample(const Options& opt) {
  Rng rng(opt.seed + 8);
  int checked_alternance = 0;
  double worst = 0.0;
  for (int q : {3, 6}) {
    const auto s = t0_counterexample_system(q);
    for (int t = 0; t < 50; ++t) {
      DiscreteFunction f;
      for (int nu = 0; nu <= q; ++nu) f.values.push_back(normal(rng));
      const auto sol = t0_counterexample_solution(f);
      const auto orc = best_approx_oracle(f, s);
      const double diff = std::abs(sol.E - orc.E);
      worst = std::max(worst, diff);
      if (!(diff <= 1e-10)) {
        return {false, "q=" + std::to_string(q) + fmt(": closed form %.17g vs oracle %.17g", sol.E, orc.E)};
      }
      if (sol.lambda != 0.0) {
        std::vector<double> e(q + 1);
        for (int nu = 0; nu <= q; ++nu) e[nu] = sol.values[nu] - f.values[nu];
        if (find_alternance(e, q + 1, 1e-9 * (1.0 + sol.E))) {
          return {false, "q=" + std::to_string(q) + ": an alternance of length q+1 was found"};
        }
        ++checked_alternance;
      }
    }
  }
  return {true, fmt("100 functions, worst |E difference| %.3g; ", worst) +
                    std::to_string(checked_alternance) + " confirmed without alternance"};
}

Outcome yudin_chebyshev_u(const Options&) {
  const auto r = yudin_extremal(normalized(chebyshev_u()), 4, 1, 1);
  const double amax = *std::max_element(r.p_coeffs.begin(), r.p_coeffs.end());
  const double b_err = std::abs(r.B - 0.5);
  const bool ok = b_err <= 1e-12 && r.coeffs_nonnegative &&
                  std::abs(r.moments[0]) <= 1e-9 * r.norm &&
                  std::abs(r.p_coeffs[1]) <= 1e-9 * amax && r.sign_ok;
  const double amin = *std::min_element(r.p_coeffs.begin(), r.p_coeffs.end());
  return {ok, fmt("B error %.3g, min coefficient / max %.3g, sign grid minimum %.3g", b_err,
                  amin / amax, r.sign_check)};
}

Outcome trig_quotients(const Options&) {
  const auto base = trig_cos_coeffs(1, 0);
  const double err = std::max(std::abs(base.values[0] - 2.0 * std::sqrt(2.0)),
                              std::abs(base.values[1] - 2.0));
  if (!(err <= 1e-12)) return {false, fmt("q=1 cosine coefficients off by %.3g", err)};
  int count = 0;
  for (int q = 0; q <= 20; ++q) {
    for (int m = 0; m <= q; ++m) {
      if (!trig_cos_coeffs(q, m).strictly_decreasing_positive) {
        return {false, "cosine coefficients not decreasing at q=" + std::to_string(q) +
                           " m=" + std::to_string(m)};
      }
      ++count;
      if (m >= 1 && !trig_sin_coeffs(q, m).strictly_decreasing_positive) {
        return {false, "sine coefficients not decreasing at q=" + std::to_string(q) +
                           " m=" + std::to_string(m)};
      }
      if (m >= 1) ++count;
    }
  }
  return {true, std::to_string(count) + " coefficient sequences strictly decreasing and positive"};
}

Outcome tz_certification(const Options&) {
  int systems = 0;
  for (const auto& name : family_names()) {
    const Family fam = family_by_name(name);
    for (double eta : {0.0, 0.5}) {
      for (int q = 1; q <= 9; ++q) {
        const auto spec = compute_spectrum(fam.system(q, eta));
        for (int n = 1; n <= q + 1; ++n) {
          const auto cert = certify(psi_system(spec, n));
          ++systems;
          if (cert.kind != TKind::T_Z) {
            return {false, name + " q=" + std::to_string(q) + " n=" + std::to_string(n) +
                               ": " + to_string(cert.kind)};
          }
        }
      }
    }
  }
  for (int q = 1; q <= 9; ++q) {
    for (int n = 1; n <= std::min(5, q + 1); ++n) {
      const auto cert = certify(monomial_system(n, q));
      ++systems;
      if (cert.kind != TKind::T_Z) {
        return {false, "monomials q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " +
                           to_string(cert.kind)};
      }
    }
  }
  for (int q = 2; q <= 9; ++q) {
    const auto cert = certify(t0_counterexample_system(q));
    ++systems;
    if (cert.kind != TKind::T0_only) {
      return {false, "counterexample q=" + std::to_string(q) + ": " + to_string(cert.kind)};
    }
  }
  return {true, std::to_string(systems) + " systems certified as expected"};
}

struct Criterion {
  const char* name;
  double time_limit;
  std::function<Outcome(const Options&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"eigenfunction zero counts are exactly k-1", 5.0, eigenfunction_counts},
      {"sign-change chain for eigenfunction combinations", 10.0, combination_chain},
      {"maximal sign-change rule matches brute force", 2.0, splus_rule},
      {"closed-form Jacobi determinants match numeric ones", 5.0, determinant_oracles},
      {"spectrum ground truth for Chebyshev families", 0.0, spectrum_ground_truth},
      {"gap expansion routes and monotonicity verdicts", 0.0, gap_expansion},
      {"exchange algorithm matches the exhaustive oracle", 0.0, remez_vs_oracle},
      {"T0-only counterexample closed form and missing alternance", 0.0, t0_counterexample},
      {"Yudin extremal polynomial for Chebyshev-U, q=4, m=1", 0.0, yudin_chebyshev_u},
      {"trigonometric quotient coefficients decrease", 0.0, trig_quotients},
      {"T_Z certification of psi, monomial and counterexample systems", 30.0, tz_certification},
  };
  return list;
}

}  // namespace

Fault parse_fault(const std::string& s) {
  if (s.empty() || s == "none") return Fault::none;
  if (s == "spectrum") return Fault::spectrum;
  if (s == "oscillation") return Fault::oscillation;
  if (s == "minimax") return Fault::minimax;
  throw std::invalid_argument("unknown fault '" + s + "'");
}

const char* to_string(Fault f) {
  switch (f) {
    case Fault::none: return "none";
    case Fault::spectrum: return "spectrum";
    case Fault::oscillation: return "oscillation";
    case Fault::minimax: return "minimax";
  }
  return "?";
}

const char* criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id out of range");
  return criteria()[id - 1].name;
}

std::vector<CriterionResult> run(const Options& opt) {
  std::vector<int> ids = opt.selection;
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    if (id < 1 || id > kCriterionCount) {
      throw std::invalid_argument("criterion id " + std::to_string(id) + " out of range");
    }
  }

  std::vector<CriterionResult> out;
  for (int id : ids) {
    const auto& c = criteria()[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = c.name;
    r.time_limit = c.time_limit;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body(opt);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = o.pass;
    r.detail = o.detail;
    if (r.time_limit > 0.0 && r.seconds > r.time_limit) {
      r.pass = false;
      r.detail += fmt(" (runtime %.2f s exceeds %.0f s)", r.seconds, r.time_limit);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace dsturm::battery
