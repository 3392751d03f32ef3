#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "dsturm/chebsys.hpp"
#include "dsturm/error.hpp"
#include "dsturm/families.hpp"
#include "test_util.hpp"

namespace dsturm {
namespace {

double vandermonde(const std::vector<int>& nu) {
  double p = 1.0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    for (std::size_t j = i + 1; j < nu.size(); ++j) p *= nu[j] - nu[i];
  }
  return p;
}

std::vector<int> random_points(std::mt19937_64& rng, int q, int n) {
  std::vector<int> all(q + 1);
  for (int i = 0; i <= q; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> pick(all.begin(), all.begin() + n);
  std::sort(pick.begin(), pick.end());
  return pick;
}

TEST(GramDet, MonomialVandermonde) {
  const auto s = monomial_system(3, 5);
  EXPECT_NEAR(gram_det(s, std::vector<int>{0, 1, 3}), 6.0, 1e-12);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const auto sys = monomial_system(n, 9);
    const auto nu = random_points(rng, 9, n);
    const double ref = vandermonde(nu);
    EXPECT_NEAR(gram_det(sys, nu), ref, 1e-9 * std::abs(ref));
  }
}

TEST(PointMatrix, Layout) {
  const auto s = monomial_system(2, 4);
  const std::vector<int> nu{1, 3};
  const auto m = point_matrix(s, nu);
  EXPECT_EQ(m.rows, 2);
  EXPECT_EQ(m.cols, 2);
  EXPECT_DOUBLE_EQ(m(1, 1), 3.0);
  EXPECT_DOUBLE_EQ(m(0, 1), 1.0);
}

TEST(Certify, MonomialsAreTZ) {
  const auto c = certify(monomial_system(2, 5));
  EXPECT_EQ(c.kind, TKind::T_Z);
  EXPECT_EQ(c.common_sign, 1);
  EXPECT_EQ(c.subsets_checked, 15u);
  EXPECT_TRUE(c.witness.empty());
}

TEST(Certify, CounterexampleIsT0Only) {
  for (int q = 2; q <= 8; ++q) {
    const auto s = t0_counterexample_system(q);
    const auto c = certify(s);
    EXPECT_EQ(c.kind, TKind::T0_only) << "q=" << q;
    ASSERT_EQ(static_cast<int>(c.witness.size()), q);
    EXPECT_NE(c.witness_det, 0.0);
    EXPECT_NEAR(gram_det(s, c.witness), c.witness_det, 1e-12);
  }
  EXPECT_STREQ(to_string(TKind::T0_only), "T0_only");
}

TEST(Certify, SweepsEverySubsetOfPsiSystems) {
  for (int q = 1; q <= 8; ++q) {
    const auto spec = compute_spectrum(legendre().system(q, 0.3));
    for (int n = 1; n <= q + 1; ++n) {
      const auto c = certify(psi_system(spec, n));
      EXPECT_EQ(c.kind, TKind::T_Z) << "q=" << q << " n=" << n;
      EXPECT_EQ(c.subsets_checked, binomial(q + 1, n));
    }
  }
}

TEST(Certify, RankDeficientIsNeither) {
  const SystemTable s({{1, 2, 3, 4}, {2, 4, 6, 8}});
  EXPECT_EQ(certify(s).kind, TKind::neither);
}

TEST(Certify, VanishingMinorIsNeither) {
  // 1 and (nu - 1)^2 on 0..2: the minor at points (0, 2) is zero.
  const SystemTable s({{1, 1, 1}, {1, 0, 1}});
  const auto c = certify(s);
  EXPECT_EQ(c.kind, TKind::neither);
  EXPECT_EQ(c.witness, (std::vector<int>{0, 2}));
}

TEST(Certify, BudgetExceeded) {
  CertifyOptions opt;
  opt.budget = 10;
  EXPECT_THROW((void)certify(monomial_system(3, 9), opt), BudgetError);
}

TEST(CertifySampled, RefutesButNeverCertifies) {
  const auto r = certify_sampled(t0_counterexample_system(5), 500, 1);
  EXPECT_TRUE(r.refuted);
  const auto ok = certify_sampled(monomial_system(3, 12), 500, 1);
  EXPECT_FALSE(ok.refuted);
  EXPECT_EQ(ok.samples, 500u);
}

TEST(DualFunctional, SecondDifference) {
  const auto s = monomial_system(2, 4);
  const auto lam = dual_functional(s, std::vector<int>{0, 1, 2});
  ASSERT_EQ(lam.size(), 3u);
  EXPECT_NEAR(lam[1] / lam[0], -2.0, 1e-12);
  EXPECT_NEAR(lam[2] / lam[0], 1.0, 1e-12);
  EXPECT_NEAR(testing::max_abs(lam), 1.0, 1e-15);
}

TEST(DualFunctional, AnnihilatesAndAlternatesOnTZ) {
  std::mt19937_64 rng(67);
  const auto spec = compute_spectrum(chebyshev_u().system(9, 0.0));
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const auto s = psi_system(spec, n);
    const auto nu = random_points(rng, 9, n + 1);
    const auto lam = dual_functional(s, nu);
    for (int k = 0; k < n; ++k) {
      double acc = 0.0, scale = 0.0;
      for (int i = 0; i <= n; ++i) {
        acc += lam[i] * s(k, nu[i]);
        scale += std::abs(lam[i] * s(k, nu[i]));
      }
      EXPECT_NEAR(acc, 0.0, 1e-10 * scale);
    }
    for (int i = 0; i < n; ++i) EXPECT_LT(lam[i] * lam[i + 1], 0.0);
  }
}

TEST(BorderedDet, LinearCaseIsPointDifference) {
  const auto s = monomial_system(2, 8);
  int sign = 0;
  for (int nu1 = 1; nu1 <= 8; ++nu1) {
    for (int nu = 0; nu <= 8; ++nu) {
      const double d = bordered_det(s, nu, std::vector<int>{nu1});
      if (nu == nu1) {
        EXPECT_NEAR(d, 0.0, 1e-14);
        continue;
      }
      const double ratio = d / (nu - nu1);
      EXPECT_NEAR(std::abs(ratio), 1.0, 1e-12);
      const int sg = ratio > 0 ? 1 : -1;
      if (sign == 0) sign = sg;
      EXPECT_EQ(sg, sign);
    }
  }
}

TEST(BorderedSignCheck, MonomialsAndPsiRows) {
  for (int m = 0; m <= 3; ++m) {
    const auto r = bordered_sign_check(monomial_system(m + 1, 8), 200, 71 + m);
    EXPECT_TRUE(r.pass) << "m=" << m;
    EXPECT_EQ(r.trials, 200);
    EXPECT_NE(r.reference_sign, 0);
  }
  const auto spec = compute_spectrum(chebyshev_t().system(9, 0.0));
  for (int m = 1; m <= 3; ++m) {
    EXPECT_TRUE(bordered_sign_check(psi_system(spec, m + 1), 200, 5).pass) << "m=" << m;
  }
}

TEST(Combinatorics, ColexEnumeratesAllSubsets) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = i;
      std::set<std::vector<int>> seen;
      std::vector<int> prev;
      do {
        EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
        EXPECT_TRUE(seen.insert(c).second);
        if (!prev.empty()) {
          EXPECT_TRUE(std::lexicographical_compare(c.rbegin(), c.rend(), prev.rbegin(),
                                                   prev.rend()) == false);
        }
        prev = c;
      } while (next_combination_colex(c, n));
      EXPECT_EQ(seen.size(), binomial(n, k));
    }
  }
  EXPECT_EQ(binomial(10, 5), 252u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(SystemTable, RejectsRaggedRows) {
  EXPECT_THROW(SystemTable({{1, 2}, {1, 2, 3}}), InputError);
  EXPECT_THROW((void)t0_counterexample_system(1), InputError);
}

}  // namespace
}  // namespace dsturm
