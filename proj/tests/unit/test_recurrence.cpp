#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dsturm/error.hpp"
#include "dsturm/families.hpp"
#include "dsturm/recurrence.hpp"
#include "test_util.hpp"

namespace dsturm {
namespace {

using testing::kPi;

TEST(DeriveWeights, ChebyshevTWeights) {
  const auto sys = chebyshev_t().system(6, 0.0);
  const auto dw = derive_weights(sys);
  ASSERT_EQ(dw.d.size(), 7u);
  EXPECT_NEAR(dw.d[0], 1.0, 1e-15);
  for (int l = 1; l <= 6; ++l) EXPECT_NEAR(dw.d[l], 2.0, 1e-14) << l;
  EXPECT_NEAR(dw.w[1], 1.0, 1e-15);
}

TEST(DeriveWeights, SelfAdjointSymmetryOnRandomSystems) {
  // The operator is symmetric in the d-weighted inner product exactly when
  // w_l = beta_l d_l / rho_l equals gamma_l d_{l+1} / rho_{l+1}.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sys = testing::random_system(rng, 8, 0.3);
    const auto dw = derive_weights(sys);
    for (int l = 0; l < sys.q; ++l) {
      const double other = sys.gamma[l] * dw.d[l + 1] / sys.rho[l + 1];
      EXPECT_NEAR(dw.w[l], other, 1e-12 * dw.w[l]);
    }
    EXPECT_NEAR(dw.B[0], 1.0 / sys.rho[0], 1e-15);
  }
}

TEST(EvalPolys, ChebyshevTClosedForm) {
  const auto sys = chebyshev_t().system(6, 0.0);
  const auto p = eval_polys(sys, 2, 0.25);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_NEAR(p[0], 1.0, 1e-15);
  EXPECT_NEAR(p[1], 0.25, 1e-15);
  EXPECT_NEAR(p[2], -0.875, 1e-15);

  for (double v : eval_polys(sys, 5, 1.0)) EXPECT_NEAR(v, 1.0, 1e-14);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = u(rng);
    const auto vals = eval_polys(sys, 7, x);
    for (int l = 0; l <= 7; ++l) {
      EXPECT_NEAR(vals[l], testing::chebyshev_t_value(l, x), 1e-13);
    }
  }
}

TEST(EvalPolys, LegendreMatchesBonnet) {
  const auto sys = legendre().system(10, 0.0);
  for (double x : {-0.9, -0.3, 0.0, 0.42, 0.99}) {
    const auto vals = eval_polys(sys, 11, x);
    double pm1 = 1.0, p = x;
    EXPECT_NEAR(vals[0], 1.0, 1e-15);
    EXPECT_NEAR(vals[1], x, 1e-15);
    for (int l = 1; l < 11; ++l) {
      const double next = ((2 * l + 1) * x * p - l * pm1) / (l + 1);
      pm1 = p;
      p = next;
      EXPECT_NEAR(vals[l + 1], p, 1e-13) << "l=" << l + 1 << " x=" << x;
    }
  }
}

TEST(EvalPolys, RejectsOutOfRangeDegree) {
  const auto sys = chebyshev_t().system(3, 0.0);
  EXPECT_THROW((void)eval_polys(sys, 5, 0.1), InputError);
  EXPECT_THROW((void)eval_polys(sys, -1, 0.1), InputError);
}

TEST(EvalPtilde, ChebyshevTExamples) {
  EXPECT_NEAR(eval_ptilde(chebyshev_t().system(1, 0.0), std::sqrt(2.0) / 2), 0.0, 1e-15);
  EXPECT_NEAR(eval_ptilde(chebyshev_t().system(1, 1.0), 1.0), 0.0, 1e-15);
  // T_3(x) - 0.5 T_2(x) by hand.
  const double x = 0.37;
  const double expect = (4 * x * x * x - 3 * x) - 0.5 * (2 * x * x - 1);
  EXPECT_NEAR(eval_ptilde(chebyshev_t().system(2, 0.5), x), expect, 1e-15);
}

TEST(CdKernel, ChebyshevTExamples) {
  const auto sys = chebyshev_t().system(4, 0.0);
  EXPECT_NEAR(cd_kernel(sys, 1, 1.0, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(cd_kernel_sum(sys, 1, 0.3, 0.7), cd_kernel_closed(sys, 1, 0.3, 0.7), 1e-14);
  // 1 + 2 * sum cos(l a) cos(l b) by direct evaluation.
  const double x = 0.3, y = -0.55;
  double direct = 1.0;
  for (int l = 1; l <= 4; ++l) {
    direct += 2.0 * testing::chebyshev_t_value(l, x) * testing::chebyshev_t_value(l, y);
  }
  EXPECT_NEAR(cd_kernel(sys, 4, x, y), direct, 1e-13);
}

TEST(CdKernel, BranchesAgreeOnRandomSystems) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sys = testing::random_system(rng, 6, 0.0);
    const double x = u(rng), y = u(rng);
    if (std::abs(x - y) < 1e-3) continue;
    for (int l = 0; l <= 6; ++l) {
      const double a = cd_kernel_sum(sys, l, x, y);
      const double b = cd_kernel_closed(sys, l, x, y);
      EXPECT_NEAR(a, b, 1e-9 * (1.0 + std::abs(a))) << "l=" << l;
    }
  }
}

TEST(GaussQuadrature, ChebyshevTThreeNodes) {
  const auto quad = gauss_quadrature(chebyshev_t().system(4, 0.0), 3);
  ASSERT_EQ(quad.nodes.size(), 3u);
  EXPECT_NEAR(quad.nodes[0], -std::sqrt(3.0) / 2, 1e-14);
  EXPECT_NEAR(quad.nodes[1], 0.0, 1e-14);
  EXPECT_NEAR(quad.nodes[2], std::sqrt(3.0) / 2, 1e-14);
  for (double w : quad.weights) EXPECT_NEAR(w, 1.0 / 3.0, 1e-14);
  EXPECT_EQ(quad.degree_exact, 5);
}

TEST(GaussQuadrature, LegendreIntegratesMonomials) {
  const auto sys = legendre().system(6, 0.0);
  const auto quad = gauss_quadrature(sys, 4);
  EXPECT_LE(quadrature_orthonormality_residual(sys, quad), 1e-10);
  // Mass 1 on [-1, 1] with density 1/2.
  for (int k = 0; k <= 7; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
      s += quad.weights[j] * std::pow(quad.nodes[j], k);
    }
    const double exact = (k % 2 == 0) ? 1.0 / (k + 1) : 0.0;
    EXPECT_NEAR(s, exact, 1e-14) << "k=" << k;
  }
}

TEST(GaussQuadrature, MassIsInverseRho0) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sys = testing::random_system(rng, 7, 0.0);
    const auto quad = gauss_quadrature(sys, 5);
    double mass = 0.0;
    for (double w : quad.weights) {
      EXPECT_GT(w, 0.0);
      mass += w;
    }
    EXPECT_NEAR(mass, 1.0 / sys.rho[0], 1e-12);
    EXPECT_LE(quadrature_orthonormality_residual(sys, quad), 1e-9);
  }
}

TEST(Validate, RejectsMalformedTables) {
  auto sys = chebyshev_t().system(3, 0.0);
  EXPECT_NO_THROW(validate(sys));
  auto bad = sys;
  bad.beta[1] = -0.5;
  EXPECT_THROW(validate(bad), InputError);
  bad = sys;
  bad.gamma.pop_back();
  EXPECT_THROW(validate(bad), InputError);
  bad = sys;
  bad.rho[0] = 0.0;
  EXPECT_THROW(validate(bad), InputError);
  bad = sys;
  bad.alpha[2] = std::nan("");
  EXPECT_THROW(validate(bad), InputError);
}

TEST(Truncate, KeepsLeadingCoefficients) {
  const auto sys = legendre().system(8, 0.0);
  const auto t = truncate(sys, 4, 0.7);
  EXPECT_EQ(t.q, 4);
  EXPECT_DOUBLE_EQ(t.eta, 0.7);
  for (int l = 0; l <= 4; ++l) EXPECT_DOUBLE_EQ(t.beta[l], sys.beta[l]);
  EXPECT_THROW((void)truncate(sys, 9, 0.0), InputError);
}

TEST(NormalizeAt, UnitValuesAndSameZeros) {
  const auto sys = chebyshev_u().system(6, 0.0);
  const auto norm = normalize_at(sys, 1.0);
  for (double v : eval_polys(norm, 7, 1.0)) EXPECT_NEAR(v, 1.0, 1e-13);
  // U_7 / 8 at a point equals the normalized value.
  for (double x : {-0.8, 0.1, 0.65}) {
    EXPECT_NEAR(eval_polys(norm, 7, x)[7], testing::chebyshev_u_value(7, x) / 8.0, 1e-13);
  }
}

TEST(FromMonic, ReproducesMonicChebyshev) {
  // Monic T: A = 0, B_1 = 1/2, B_l = 1/4.
  std::vector<double> A(5, 0.0), B(5, 0.25);
  B[1] = 0.5;
  const auto sys = from_monic(A, B, 0.0);
  const double x = 0.3;
  const auto vals = eval_polys(sys, 5, x);
  for (int l = 1; l <= 5; ++l) {
    EXPECT_NEAR(vals[l], testing::chebyshev_t_value(l, x) / std::pow(2.0, l - 1), 1e-14);
  }
}

TEST(Families, JacobiMatchesNamedCases) {
  const auto a = family_by_name("jacobi-iii").system(5, 0.0);
  const auto b = jacobi(0.5, 0.5).system(5, 0.0);
  for (int l = 0; l <= 5; ++l) {
    EXPECT_NEAR(a.alpha[l], b.alpha[l], 1e-15);
    EXPECT_NEAR(a.beta[l], b.beta[l], 1e-15);
  }
  EXPECT_THROW((void)family_by_name("no-such-family"), InputError);
  EXPECT_THROW((void)jacobi(-1.5, 0.0), InputError);
}

TEST(Families, JacobiNormalizedAtOne) {
  for (auto [a, b] : {std::pair{0.3, -0.4}, std::pair{1.5, 2.0}, std::pair{-0.5, -0.5}}) {
    const auto sys = jacobi(a, b).system(6, 0.0);
    for (double v : eval_polys(sys, 7, 1.0)) EXPECT_NEAR(v, 1.0, 1e-12);
  }
  // Legendre is jacobi(0, 0).
  const auto j = jacobi(0.0, 0.0).system(5, 0.0);
  const auto p = legendre().system(5, 0.0);
  for (double x : {-0.7, 0.2}) {
    const auto u = eval_polys(j, 6, x);
    const auto v = eval_polys(p, 6, x);
    for (int l = 0; l <= 6; ++l) EXPECT_NEAR(u[l], v[l], 1e-13);
  }
  (void)kPi;
}

}  // namespace
}  // namespace dsturm
