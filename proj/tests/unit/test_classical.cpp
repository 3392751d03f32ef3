#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dsturm/chebsys.hpp"
#include "dsturm/classical.hpp"
#include "dsturm/error.hpp"
#include "dsturm/gapfourier.hpp"
#include "dsturm/spectrum.hpp"
#include "test_util.hpp"

namespace dsturm {
namespace {

using testing::kPi;

constexpr JacobiCase kCases[] = {JacobiCase::i, JacobiCase::ii, JacobiCase::iii, JacobiCase::iv};

// Zeros of U_{q+1} for the four weights, from the first, third, second and
// fourth kind Chebyshev polynomials.
double zero_formula(JacobiCase c, int q, int j) {
  switch (c) {
    case JacobiCase::i: return std::cos(kPi * (2 * j - 1) / (2 * q + 2));
    case JacobiCase::ii: return std::cos(kPi * (2 * j - 1) / (2 * q + 3));
    case JacobiCase::iii: return std::cos(kPi * j / (q + 2));
    case JacobiCase::iv: return std::cos(2 * kPi * j / (2 * q + 3));
  }
  return 0.0;
}

std::vector<int> random_points(std::mt19937_64& rng, int q, int m) {
  std::vector<int> all(q);
  for (int i = 0; i < q; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> pick(all.begin(), all.begin() + m);
  std::sort(pick.begin(), pick.end());
  return pick;
}

TEST(JacobiCase, Parsing) {
  EXPECT_EQ(parse_case("iii"), JacobiCase::iii);
  EXPECT_EQ(parse_case("jacobi-iv"), JacobiCase::iv);
  EXPECT_THROW((void)parse_case("v"), InputError);
  EXPECT_STREQ(to_string(JacobiCase::ii), "ii");
  EXPECT_EQ(jacobi_case_family(JacobiCase::i).name(), "jacobi-i");
}

TEST(JacobiCase, ZeroFormulas) {
  for (auto c : kCases) {
    for (int q = 0; q <= 15; ++q) {
      const auto z = jacobi_case_zeros(c, q);
      const auto spec = compute_spectrum(jacobi_case_family(c).system(q, 0.0));
      ASSERT_EQ(static_cast<int>(z.size()), q + 1);
      for (int j = 1; j <= q + 1; ++j) {
        EXPECT_NEAR(z[j - 1], zero_formula(c, q, j), 1e-13) << to_string(c) << " q=" << q;
        EXPECT_NEAR(spec.lambdas[j - 1], z[j - 1], 1e-10) << to_string(c) << " q=" << q;
      }
    }
  }
}

TEST(JacobiCase, ClosedFormAgainstBorderedDeterminant) {
  const int q = 4;
  const auto spec = compute_spectrum(jacobi_case_family(JacobiCase::iii).system(q, 0.0));
  const auto s = psi_system(spec, 2);
  const std::vector<int> nus{3};
  const double ref = bordered_det(s, 0, nus);
  EXPECT_NEAR(jacobi_case_det_closed_form(JacobiCase::iii, q, 0, nus), ref, 1e-9 * std::abs(ref));
}

TEST(JacobiCase, ClosedFormMatchesNumericOnRandomTuples) {
  std::mt19937_64 rng(97);
  for (auto c : kCases) {
    for (int trial = 0; trial < 100; ++trial) {
      const int q = 1 + static_cast<int>(rng() % 10);
      const int m = static_cast<int>(rng() % (std::min(q, 3) + 1));
      const auto nus = random_points(rng, q, m);
      const int nu = static_cast<int>(rng() % (q + 1));
      const double cf = jacobi_case_det_closed_form(c, q, nu, nus);
      const auto spec = compute_spectrum(jacobi_case_family(c).system(q, 0.0));
      const double ref = bordered_det(psi_system(spec, m + 1), nu, nus);
      if (std::abs(cf) < 1e-12 && std::abs(ref) < 1e-12) continue;
      EXPECT_NEAR(cf, ref, 1e-8 * std::abs(cf)) << to_string(c) << " q=" << q << " m=" << m;
      EXPECT_NEAR(jacobi_case_det_numeric(c, q, nu, nus), ref, 1e-12 * (1.0 + std::abs(ref)));
    }
  }
}

TEST(JacobiCase, SignLaw) {
  std::mt19937_64 rng(101);
  for (int m = 1; m <= 3; ++m) {
    const int q = 9;
    int fixed = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto nus = random_points(rng, q, m);
      const int nu = static_cast<int>(rng() % (q + 1));
      if (std::find(nus.begin(), nus.end(), nu) != nus.end()) continue;
      double prod = 1.0;
      for (int v : nus) prod *= (v - nu);
      const double d = jacobi_case_det_closed_form(JacobiCase::i, q, nu, nus);
      const int sg = (d > 0) == (prod > 0) ? 1 : -1;
      if (fixed == 0) fixed = sg;
      EXPECT_EQ(sg, fixed) << "m=" << m;
    }
  }
}

TEST(TrigCos, SmallestCase) {
  const auto c = trig_cos_coeffs(1, 0);
  ASSERT_EQ(c.values.size(), 2u);
  EXPECT_NEAR(c.values[0], 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(c.values[1], 2.0, 1e-12);
  EXPECT_TRUE(c.strictly_decreasing_positive);
}

// Midpoint-rule cosine transform of the directly evaluated quotient.
std::vector<double> cos_oracle(int q, int m) {
  const int M = 4 * (q + 1);
  std::vector<double> a(q - m + 1, 0.0);
  for (int k = 0; k < M; ++k) {
    const double x = kPi * (k + 0.5) / M;
    double g = std::cos((q + 1) * x);
    for (int j = 0; j <= m; ++j) g /= (std::cos(x) - std::cos(kPi * (2 * j + 1) / (2 * q + 2)));
    for (int nu = 0; nu <= q - m; ++nu) a[nu] += 2.0 / M * g * std::cos(nu * x);
  }
  return a;
}

std::vector<double> sin_oracle(int q, int m) {
  const int M = 4 * (q + 1);
  std::vector<double> b(q - m + 1, 0.0);
  for (int k = 0; k < M; ++k) {
    const double x = kPi * (k + 0.5) / M;
    double g = std::sin((q + 1) * x);
    for (int j = 1; j <= m; ++j) g /= (std::cos(x) - std::cos(kPi * j / (q + 1)));
    for (int nu = 1; nu <= q - m + 1; ++nu) b[nu - 1] += 2.0 / M * g * std::sin(nu * x) / nu;
  }
  return b;
}

TEST(TrigCos, MatchesCosineTransformAndIsMonotone) {
  for (int q = 0; q <= 20; ++q) {
    for (int m = 0; m <= q; ++m) {
      const auto c = trig_cos_coeffs(q, m);
      const auto ref = cos_oracle(q, m);
      ASSERT_EQ(c.values.size(), ref.size());
      const double s = testing::max_abs(ref);
      for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(c.values[i], ref[i], 1e-9 * s);
      EXPECT_TRUE(c.strictly_decreasing_positive) << "q=" << q << " m=" << m;
    }
  }
}

TEST(TrigCos, EqualsTwiceGapExpansion) {
  for (int q = 1; q <= 12; ++q) {
    const auto sys = jacobi_case_family(JacobiCase::i).system(q, 0.0);
    const auto spec = compute_spectrum(sys);
    for (int m = 0; m <= q; ++m) {
      const auto g = gap_expand(sys, spec, m);
      const auto c = trig_cos_coeffs(q, m);
      for (std::size_t i = 0; i < g.a.size(); ++i) {
        EXPECT_NEAR(c.values[i], 2.0 * g.a[i], 1e-9 * std::abs(c.values[0]));
      }
    }
  }
}

TEST(TrigSin, ExplicitDivision) {
  // sin 3x / (cos x - 1/2) = 2 sin x + 2 sin 2x, so (b_1, b_2) = (2, 1).
  const auto s = trig_sin_coeffs(2, 1);
  ASSERT_EQ(s.values.size(), 2u);
  EXPECT_NEAR(s.values[0], 2.0, 1e-12);
  EXPECT_NEAR(s.values[1], 1.0, 1e-12);
  EXPECT_TRUE(s.strictly_decreasing_positive);
  const auto one = trig_sin_coeffs(1, 1);
  ASSERT_EQ(one.values.size(), 1u);
  EXPECT_GT(one.values[0], 0.0);
  EXPECT_THROW((void)trig_sin_coeffs(3, 0), InputError);
}

TEST(TrigSin, MatchesSineTransformAndIsMonotone) {
  for (int q = 1; q <= 20; ++q) {
    for (int m = 1; m <= q; ++m) {
      const auto c = trig_sin_coeffs(q, m);
      const auto ref = sin_oracle(q, m);
      ASSERT_EQ(c.values.size(), ref.size());
      const double s = testing::max_abs(ref);
      for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(c.values[i], ref[i], 1e-9 * s);
      EXPECT_TRUE(c.strictly_decreasing_positive) << "q=" << q << " m=" << m;
    }
  }
}

}  // namespace
}  // namespace dsturm
