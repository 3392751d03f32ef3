#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "dsturm/error.hpp"
#include "dsturm/families.hpp"
#include "dsturm/spectrum.hpp"
#include "dsturm/tridiag.hpp"
#include "test_util.hpp"

namespace dsturm {
namespace {

using testing::kPi;

// Eigenvalues of the unsymmetrized recurrence matrix, built straight from
// the coefficient tables and solved by Eigen's general eigensolver.
std::vector<double> oracle_eigenvalues(const RecurrenceSystem& s) {
  const int n = s.q + 1;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int l = 0; l < n; ++l) {
    J(l, l) = s.alpha[l] / s.rho[l];
    if (l > 0) J(l, l - 1) = s.gamma[l - 1] / s.rho[l];
    if (l + 1 < n) J(l, l + 1) = s.beta[l] / s.rho[l];
  }
  J(n - 1, n - 1) += s.eta * s.beta[n - 1] / s.rho[n - 1];
  Eigen::EigenSolver<Eigen::MatrixXd> es(J, false);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i].real());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

TEST(Tridiag, SturmCountAndEigenvaluesMatchEigen) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 12;
    std::vector<double> diag(n), off(n > 0 ? n - 1 : 0);
    for (auto& v : diag) v = u(rng);
    for (auto& v : off) v = 0.1 + std::abs(u(rng));
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) M(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) M(i, i + 1) = M(i + 1, i) = off[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    std::vector<double> ref(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(ref.begin(), ref.end(), std::greater<>());

    const auto got = tridiagonal_eigenvalues(diag, off);
    ASSERT_EQ(got.size(), ref.size());
    for (int i = 0; i < n; ++i) EXPECT_NEAR(got[i], ref[i], 1e-12) << "n=" << n;

    const double x = u(rng);
    const int below = static_cast<int>(std::count_if(ref.begin(), ref.end(),
                                                     [x](double e) { return e < x; }));
    EXPECT_EQ(sturm_count(diag, off, x), below);
  }
}

TEST(Spectrum, ChebyshevTCosineZeros) {
  const auto spec = compute_spectrum(chebyshev_t().system(2, 0.0));
  ASSERT_EQ(spec.lambdas.size(), 3u);
  EXPECT_NEAR(spec.lambdas[0], std::sqrt(3.0) / 2, 1e-12);
  EXPECT_NEAR(spec.lambdas[1], 0.0, 1e-12);
  EXPECT_NEAR(spec.lambdas[2], -std::sqrt(3.0) / 2, 1e-12);

  for (int q = 0; q <= 25; ++q) {
    const auto s = compute_spectrum(chebyshev_t().system(q, 0.0));
    for (int j = 1; j <= q + 1; ++j) {
      EXPECT_NEAR(s.lambdas[j - 1], std::cos(kPi * (2 * j - 1) / (2 * q + 2)), 1e-12);
    }
  }
}

TEST(Spectrum, ChebyshevUZeros) {
  for (int q = 0; q <= 20; ++q) {
    const auto s = compute_spectrum(chebyshev_u().system(q, 0.0));
    for (int j = 1; j <= q + 1; ++j) {
      EXPECT_NEAR(s.lambdas[j - 1], std::cos(kPi * j / (q + 2)), 1e-10) << "q=" << q;
    }
  }
}

TEST(Spectrum, PerturbedChebyshevTQuadratic) {
  // T_2 - T_1 / 2 = 2 x^2 - x / 2 - 1.
  const auto s = compute_spectrum(chebyshev_t().system(1, 0.5));
  const double disc = std::sqrt(0.25 + 8.0);
  EXPECT_NEAR(s.lambdas[0], (0.5 + disc) / 4.0, 1e-14);
  EXPECT_NEAR(s.lambdas[1], (0.5 - disc) / 4.0, 1e-14);
  EXPECT_NEAR(s.lambdas[0], 0.843070, 1e-6);
  EXPECT_NEAR(s.lambdas[1], -0.593070, 1e-6);
}

TEST(Spectrum, RandomSystemsMatchGeneralEigensolver) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> e(-1.5, 1.5);
  for (int trial = 0; trial < 40; ++trial) {
    const int q = 1 + trial % 14;
    const auto sys = testing::random_system(rng, q, e(rng));
    const auto s = compute_spectrum(sys);
    const auto ref = oracle_eigenvalues(sys);
    for (int k = 0; k <= q; ++k) {
      EXPECT_NEAR(s.lambdas[k], ref[k], 1e-9 * (1.0 + std::abs(ref[k])));
      // Table rows are forward-recurrence values at the eigenvalue.
      const auto p = eval_polys(sys, q, s.lambdas[k]);
      for (int nu = 0; nu <= q; ++nu) EXPECT_DOUBLE_EQ(s.psi[k][nu], p[nu]);
    }
  }
}

TEST(Spectrum, EigenvaluesStrictlyDescending) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = compute_spectrum(testing::random_system(rng, 12, -0.7));
    for (std::size_t k = 1; k < s.lambdas.size(); ++k) EXPECT_GT(s.lambdas[k - 1], s.lambdas[k]);
  }
}

TEST(PolynomialZeros, LegendreZerosAreRoots) {
  const auto sys = legendre().system(8, 0.0);
  for (int l = 1; l <= 9; ++l) {
    const auto z = polynomial_zeros(sys, l);
    ASSERT_EQ(static_cast<int>(z.size()), l);
    for (double x : z) EXPECT_NEAR(eval_polys(sys, l, x)[l], 0.0, 1e-12);
  }
  EXPECT_THROW((void)polynomial_zeros(sys, 10), InputError);
}

TEST(Interlacing, CosineAndRandomSystems) {
  EXPECT_TRUE(interlacing_check(chebyshev_t().system(4, 0.0)).pass);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = interlacing_check(testing::random_system(rng, 8, 0.4));
    EXPECT_TRUE(r.pass) << r.violation;
  }
}

TEST(DiscreteOrthogonality, CosineAndRandomSystems) {
  const auto t = chebyshev_t().system(3, 0.0);
  EXPECT_LE(discrete_orthogonality_check(t, compute_spectrum(t)), 1e-10);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sys = testing::random_system(rng, 10, 0.0);
    EXPECT_LE(discrete_orthogonality_check(sys, compute_spectrum(sys)), 1e-8);
  }
}

TEST(DiscreteOrthogonality, CosineSumsByHand) {
  // For T with eta = 0 the eigenfunctions are cos(nu theta_k) and the
  // weights (1, 2, ..., 2) make distinct rows orthogonal.
  const int q = 5;
  const auto s = compute_spectrum(chebyshev_t().system(q, 0.0));
  for (int k = 0; k <= q; ++k) {
    for (int j = k + 1; j <= q; ++j) {
      double acc = s.psi[k][0] * s.psi[j][0];
      for (int nu = 1; nu <= q; ++nu) acc += 2.0 * s.psi[k][nu] * s.psi[j][nu];
      EXPECT_NEAR(acc, 0.0, 1e-12);
    }
  }
}

}  // namespace
}  // namespace dsturm
