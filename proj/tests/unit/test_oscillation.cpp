#include <gtest/gtest.h>

#include <random>

#include "dsturm/error.hpp"
#include "dsturm/families.hpp"
#include "dsturm/oscillation.hpp"
#include "test_util.hpp"

namespace dsturm {
namespace {

struct Counts {
  int N = 0;
  int S_minus = 0;
  int S_plus = 0;
};

// Enumerates every +-1 replacement of the zero entries and counts sign
// changes directly; N counts exact zeros plus strict sign flips.
Counts brute_counts(const std::vector<int>& s) {
  Counts c;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) ++c.N;
    else if (i > 0 && s[i - 1] * s[i] < 0) ++c.N;
  }
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) zeros.push_back(i);
  }
  c.S_minus = 1 << 30;
  c.S_plus = -1;
  for (unsigned mask = 0; mask < (1u << zeros.size()); ++mask) {
    auto t = s;
    for (std::size_t z = 0; z < zeros.size(); ++z) t[zeros[z]] = (mask >> z) & 1u ? 1 : -1;
    int changes = 0;
    for (std::size_t i = 1; i < t.size(); ++i) changes += t[i - 1] != t[i];
    c.S_minus = std::min(c.S_minus, changes);
    c.S_plus = std::max(c.S_plus, changes);
  }
  return c;
}

DiscreteFunction fn(std::vector<double> v) { return DiscreteFunction{std::move(v)}; }

TEST(SignPattern, AppliesRelativeTolerance) {
  const auto s = sign_pattern(fn({1.0, 1e-12, -3.0, 0.0}));
  EXPECT_EQ(s, (std::vector<int>{1, 0, -1, 0}));
  EXPECT_THROW((void)sign_pattern(fn({1.0, std::nan("")})), InputError);
}

TEST(OscillationReport, HandExamples) {
  auto r = oscillation_report(fn({1, 0, 1}));
  EXPECT_EQ(r.N, 1);
  EXPECT_EQ(r.N0, 1);
  EXPECT_EQ(r.S_minus, 0);
  EXPECT_EQ(r.S_plus, 2);

  r = oscillation_report(fn({1, 0, -1}));
  EXPECT_EQ(r.N, 1);
  EXPECT_EQ(r.S_minus, 1);
  EXPECT_EQ(r.S_plus, 1);

  r = oscillation_report(fn({1, -1, 2}));
  EXPECT_EQ(r.N, 2);
  EXPECT_EQ(r.N0, 0);
  ASSERT_EQ(r.zeros.size(), 2u);
  EXPECT_EQ(r.zeros[0].type, ZeroType::second);
  EXPECT_EQ(r.zeros[0].nu, 1);
}

TEST(OscillationReport, IdenticallyZero) {
  const auto r = oscillation_report(fn({0, 0, 0, 0}));
  EXPECT_EQ(r.N, 4);
  EXPECT_EQ(r.S_minus, 0);
  EXPECT_EQ(r.S_plus, 3);
}

TEST(OscillationReport, IntervalClasses) {
  const auto r = oscillation_report(fn({1, 0, 1, 0, 0, 1, 0}));
  bool same = false, opposite = false, inert = false;
  for (const auto& iv : r.intervals) {
    if (iv.type == IntervalType::same_sign_gain) {
      same = true;
      EXPECT_EQ(iv.first, 0);
      EXPECT_EQ(iv.last, 2);
    }
    if (iv.type == IntervalType::opposite_sign_gain) opposite = true;
    if (iv.type == IntervalType::inert) inert = true;
  }
  EXPECT_TRUE(same);
  EXPECT_FALSE(opposite);
  EXPECT_TRUE(inert);
  EXPECT_STREQ(to_string(IntervalType::sign_changes), "sign_changes");
}

TEST(SplusBruteforce, Examples) {
  EXPECT_EQ(splus_bruteforce(fn({1, 0, 1})), 2);
  // Positions 1..3 read (+, z, -) and contribute one change for either z.
  EXPECT_EQ(splus_bruteforce(fn({0, 1, 0, -1, 0})), 3);
  std::vector<double> many(22, 0.0);
  many[0] = 1.0;
  EXPECT_THROW((void)splus_bruteforce(fn(many)), BudgetError);
}

TEST(OscillationReport, MatchesBruteForceOnRandomPatterns) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> sgn(-1, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = len(rng);
    std::vector<double> v(n);
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) {
      s[i] = sgn(rng);
      v[i] = s[i] * (0.5 + (rng() % 100) / 10.0);
    }
    const auto r = oscillation_report(fn(v));
    const auto c = brute_counts(s);
    EXPECT_EQ(r.N, c.N);
    EXPECT_EQ(r.S_minus, c.S_minus);
    EXPECT_EQ(r.S_plus, c.S_plus);
    EXPECT_LE(r.S_minus, r.N);
    // The identically zero function has N = q + 1 > S+ = q.
    if (r.N0 < n) EXPECT_LE(r.N, r.S_plus);
  }
}

TEST(EigenfunctionCounts, ChebyshevTExamples) {
  const auto spec = compute_spectrum(chebyshev_t().system(5, 0.0));
  EXPECT_EQ(oscillation_report(fn(spec.psi[2])).N, 2);
  EXPECT_EQ(oscillation_report(fn(spec.psi[5])).N, 5);
  const auto r = verify_eigenfunction_counts(spec);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.first_failing_k, 0);
  ASSERT_EQ(r.counts.size(), 6u);
  for (const auto& c : r.counts) {
    EXPECT_EQ(c.N, c.k - 1);
    EXPECT_EQ(c.S_plus, c.k - 1);
  }
}

TEST(EigenfunctionCounts, RandomSystems) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sys = testing::random_system(rng, 3 + trial % 10, -1.0 + trial * 0.07);
    EXPECT_TRUE(verify_eigenfunction_counts(compute_spectrum(sys)).pass);
  }
}

TEST(EigenfunctionCounts, DetectsCorruptedTable) {
  auto spec = compute_spectrum(chebyshev_t().system(5, 0.0));
  spec.psi[0][1] = -spec.psi[0][1];
  const auto r = verify_eigenfunction_counts(spec);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.first_failing_k, 1);
}

TEST(CombinationChain, BoundsHold) {
  const auto spec = compute_spectrum(chebyshev_t().system(6, 0.0));
  std::mt19937_64 rng(53);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a{g(rng), g(rng), g(rng)};
    const auto r = verify_combination_chain(spec, 3, 5, a);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lower, 2);
    EXPECT_EQ(r.upper, 4);
    EXPECT_GE(r.S_minus, 2);
    EXPECT_LE(r.S_plus, 4);
  }
}

TEST(CombinationChain, SingleTermCollapses) {
  const auto spec = compute_spectrum(legendre().system(7, 0.25));
  for (int k = 1; k <= 8; ++k) {
    const std::vector<double> a{1.0};
    const auto r = verify_combination_chain(spec, k, k, a);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.S_minus, k - 1);
    EXPECT_EQ(r.N, k - 1);
    EXPECT_EQ(r.S_plus, k - 1);
  }
}

TEST(CombinationChain, RejectsBadRange) {
  const auto spec = compute_spectrum(legendre().system(4, 0.0));
  const std::vector<double> a{1.0, 2.0};
  EXPECT_THROW((void)verify_combination_chain(spec, 3, 2, a), InputError);
  EXPECT_THROW((void)verify_combination_chain(spec, 1, 3, a), InputError);
}

TEST(DifferenceInequalities, HandExample) {
  const auto r = difference_inequalities(fn({1, 1}));
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.forward_checked);
  bool found = false;
  for (const auto& c : r.checks) {
    if (c.name.find("N") != std::string::npos && c.difference_count == 1 && c.function_count == 0) {
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(DifferenceInequalities, RandomFunctions) {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> v(11);
    for (auto& x : v) x = val(rng);
    EXPECT_TRUE(difference_inequalities(fn(v)).pass);
    const auto fwd = difference_inequalities(fn(v), true);
    EXPECT_TRUE(fwd.forward_checked);
    EXPECT_TRUE(fwd.pass);
  }
}

}  // namespace
}  // namespace dsturm
