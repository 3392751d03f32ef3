#include "dsturm/oscillation.hpp"

#include <algorithm>
#include <cmath>

#include "dsturm/error.hpp"

namespace dsturm {
namespace {

int count_changes(const std::vector<int>& s) {
  int changes = 0;
  int last = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

void add_checks(DifferenceReport& rep, const char* prefix,
                const OscillationReport& diff, const OscillationReport& f) {
  const std::string p(prefix);
  const InequalityCheck checks[] = {
      {p + "N", diff.N, f.N, diff.N >= f.N},
      {p + "S-", diff.S_minus, f.S_minus, diff.S_minus >= f.S_minus},
      {p + "S+", diff.S_plus, f.S_plus, diff.S_plus >= f.S_plus},
  };
  for (const auto& c : checks) {
    rep.pass = rep.pass && c.holds;
    rep.checks.push_back(c);
  }
}

}  // namespace

std::vector<int> sign_pattern(const DiscreteFunction& f) {
  if (f.values.empty()) throw InputError("discrete function has no values");
  if (!(f.sign_tol >= 0.0)) throw InputError("sign_tol must be non-negative");
  double scale = 0.0;
  for (double v : f.values) {
    if (!std::isfinite(v)) throw InputError("discrete function has a non-finite value");
    scale = std::max(scale, std::abs(v));
  }
  const double cut = f.sign_tol * scale;
  std::vector<int> s(f.values.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double v = f.values[i];
    s[i] = std::abs(v) <= cut ? 0 : (v > 0.0 ? 1 : -1);
  }
  return s;
}

OscillationReport oscillation_report(const DiscreteFunction& f) {
  const auto s = sign_pattern(f);
  const int len = static_cast<int>(s.size());
  OscillationReport rep;

  for (int nu = 0; nu < len; ++nu) {
    if (s[nu] == 0) {
      rep.zeros.push_back({nu, ZeroType::first});
      ++rep.N0;
    } else if (nu > 0 && s[nu - 1] * s[nu] < 0) {
      rep.zeros.push_back({nu, ZeroType::second});
    }
  }
  rep.N = static_cast<int>(rep.zeros.size());
  rep.S_minus = count_changes(s);

  // Closed segments of strict sign changes.
  for (int nu = 1; nu < len;) {
    if (s[nu - 1] * s[nu] < 0) {
      const int start = nu - 1;
      while (nu < len && s[nu - 1] * s[nu] < 0) ++nu;
      rep.intervals.push_back({start, nu - 1, IntervalType::sign_changes});
    } else {
      ++nu;
    }
  }

  // Maximal zero runs and the S+ run rule.
  int s_plus = 0;
  int prev_nonzero = -1;
  for (int nu = 0; nu < len; ++nu) {
    if (s[nu] == 0) continue;
    if (prev_nonzero >= 0 && nu == prev_nonzero + 1) {
      if (s[prev_nonzero] != s[nu]) ++s_plus;
    }
    prev_nonzero = nu;
  }
  for (int nu = 0; nu < len;) {
    if (s[nu] != 0) {
      ++nu;
      continue;
    }
    const int u = nu;
    while (nu < len && s[nu] == 0) ++nu;
    const int v = nu - 1;
    const int z = v - u + 1;
    if (u == 0 || v == len - 1) {
      // A boundary run can take any signs: every adjacent pair inside it
      // and the pair linking it to the nonzero side may change sign.
      s_plus += (u == 0 && v == len - 1) ? z - 1 : z;
      rep.intervals.push_back({u, v, IntervalType::inert});
      continue;
    }
    const bool differ = s[u - 1] != s[v + 1];
    const bool gains = ((z + 1) % 2 == 1) == differ;
    s_plus += gains ? z + 1 : z;
    if (gains) {
      rep.intervals.push_back({u - 1, v + 1,
                               differ ? IntervalType::opposite_sign_gain
                                      : IntervalType::same_sign_gain});
    } else {
      rep.intervals.push_back({u, v, IntervalType::inert});
    }
  }
  rep.S_plus = s_plus;
  std::sort(rep.intervals.begin(), rep.intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.first != b.first ? a.first < b.first : a.last < b.last;
            });
  return rep;
}

int splus_bruteforce(const DiscreteFunction& f) {
  auto s = sign_pattern(f);
  std::vector<int> zero_at;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) zero_at.push_back(static_cast<int>(i));
  }
  if (zero_at.size() > 20) {
    throw BudgetError("splus_bruteforce supports at most 20 zero entries");
  }
  const unsigned long total = 1UL << zero_at.size();
  int best = 0;
  for (unsigned long mask = 0; mask < total; ++mask) {
    for (std::size_t j = 0; j < zero_at.size(); ++j) {
      s[zero_at[j]] = (mask >> j) & 1UL ? 1 : -1;
    }
    best = std::max(best, count_changes(s));
  }
  return best;
}

const char* to_string(IntervalType t) {
  switch (t) {
    case IntervalType::sign_changes: return "sign_changes";
    case IntervalType::same_sign_gain: return "same_sign_gain";
    case IntervalType::opposite_sign_gain: return "opposite_sign_gain";
    case IntervalType::inert: return "inert";
  }
  return "unknown";
}

const char* to_string(ZeroType t) {
  return t == ZeroType::first ? "first" : "second";
}

EigenfunctionCountReport verify_eigenfunction_counts(const Spectrum& spec, double sign_tol) {
  EigenfunctionCountReport rep;
  for (std::size_t k = 0; k < spec.psi.size(); ++k) {
    const auto r = oscillation_report({spec.psi[k], sign_tol});
    const int target = static_cast<int>(k);
    rep.counts.push_back({target + 1, r.N, r.S_minus, r.S_plus});
    const bool ok = r.N == target && r.S_minus == target && r.S_plus == target;
    if (!ok && rep.pass) {
      rep.pass = false;
      rep.first_failing_k = target + 1;
    }
  }
  return rep;
}

CombinationChainReport verify_combination_chain(const Spectrum& spec, int m, int n,
                               std::span<const double> a, double sign_tol) {
  const int size = static_cast<int>(spec.psi.size());
  if (m < 1 || m > n || n > size) {
    throw InputError("combination indices must satisfy 1 <= m <= n <= q + 1");
  }
  if (static_cast<int>(a.size()) != n - m + 1) {
    throw InputError("coefficient count must be n - m + 1");
  }
  if (std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; })) {
    throw InputError("coefficient vector is identically zero");
  }
  CombinationChainReport rep;
  rep.V.assign(size, 0.0);
  for (int k = m; k <= n; ++k) {
    const double c = a[k - m];
    for (int nu = 0; nu < size; ++nu) rep.V[nu] += c * spec.psi[k - 1][nu];
  }
  const auto r = oscillation_report({rep.V, sign_tol});
  rep.lower = m - 1;
  rep.upper = n - 1;
  rep.S_minus = r.S_minus;
  rep.N = r.N;
  rep.S_plus = r.S_plus;
  rep.pass = rep.lower <= rep.S_minus && rep.S_minus <= rep.N &&
             rep.N <= rep.S_plus && rep.S_plus <= rep.upper;
  return rep;
}

DifferenceReport difference_inequalities(const DiscreteFunction& f,
                                         bool zero_after_end) {
  const auto base = oscillation_report(f);
  const std::size_t len = f.values.size();
  DifferenceReport rep;

  DiscreteFunction back{std::vector<double>(len), f.sign_tol};
  for (std::size_t nu = 0; nu < len; ++nu) {
    back.values[nu] = f.values[nu] - (nu > 0 ? f.values[nu - 1] : 0.0);
  }
  add_checks(rep, "backward ", oscillation_report(back), base);

  if (zero_after_end) {
    DiscreteFunction fwd{std::vector<double>(len), f.sign_tol};
    for (std::size_t nu = 0; nu < len; ++nu) {
      fwd.values[nu] = (nu + 1 < len ? f.values[nu + 1] : 0.0) - f.values[nu];
    }
    add_checks(rep, "forward ", oscillation_report(fwd), base);
    rep.forward_checked = true;
  }
  return rep;
}

}  // namespace dsturm
