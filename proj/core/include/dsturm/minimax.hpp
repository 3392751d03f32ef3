#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsturm/chebsys.hpp"
#include "dsturm/oscillation.hpp"

namespace dsturm {

/// Points nu_1 < ... < nu_{n+1} with eps (-1)^i e(nu_i) = level, i 1-based.
struct AlternanceCertificate {
  std::vector<int> points;
  int orientation = 1;
  double level = 0.0;
};

/// Characterization certificate: e(points[i]) = signs[i] * E and
/// sum weights[i] * signs[i] * p(points[i]) = 0 for every p in the span.
struct DualCertificate {
  std::vector<int> points;
  std::vector<int> signs;
  std::vector<double> weights;
};

struct ApproxResult {
  std::vector<double> coefficients;  ///< a_1..a_n
  double E = 0.0;                    ///< max |p - f| over the grid
  std::optional<AlternanceCertificate> alternance;
  std::optional<DualCertificate> dual;
  int iterations = 0;
  std::vector<double> level_history;  ///< |levelled error| per exchange step
};

/// p(nu) = sum_k coefficients[k] phi_{k+1}(nu) for nu = 0..q.
[[nodiscard]] std::vector<double> evaluate(const SystemTable& s,
                                           std::span<const double> coefficients);

/// Coefficients of the unique p with p(nu_i) = y_i.
[[nodiscard]] std::vector<double> interpolate(const SystemTable& s,
                                              std::span<const int> nu,
                                              std::span<const double> y,
                                              double det_rel_tol = 1e-10);

struct ExchangeOptions {
  /// Skip the T_Z certification sweep (the caller vouches for it).
  bool assume_tz = false;
  CertifyOptions certify;
  int max_iterations = 100000;
};

/// Single-point exchange on a T_Z system. Refuses other systems.
[[nodiscard]] ApproxResult best_approx(const DiscreteFunction& f,
                                       const SystemTable& s,
                                       const ExchangeOptions& opt = {});

/// Exhaustive reference search. Each (n+1)-subset is levelled with the
/// sign pattern of its dual functional; the largest level whose
/// polynomial attains it on the whole grid is the best error.
[[nodiscard]] ApproxResult best_approx_oracle(const DiscreteFunction& f,
                                              const SystemTable& s,
                                              std::uint64_t budget = 100000);

struct OptimalityReport {
  bool pass = false;
  double level_residual = 0.0;  ///< max_i |sign_i e(nu_i) - E|
  double sup_excess = 0.0;      ///< max(0, max|e| - E)
  bool signs_match = false;     ///< dual functional signs agree with the certificate
  std::string reason;
};

/// Checks the attained levels and the dual functional signs.
[[nodiscard]] OptimalityReport verify_optimality(const DiscreteFunction& f,
                                                 const SystemTable& s,
                                                 const ApproxResult& result);

struct CounterexampleSolution {
  std::vector<double> coefficients;  ///< a_1..a_q
  std::vector<double> values;        ///< p*(0..q)
  double lambda = 0.0;
  double E = 0.0;
};

/// Closed-form best approximation for t0_counterexample_system(q), q >= 2.
[[nodiscard]] CounterexampleSolution t0_counterexample_solution(const DiscreteFunction& f);

/// Exhaustive search for `length` increasing points where e alternates in
/// sign with |e| within tol of max|e|. Returns the first set found.
[[nodiscard]] std::optional<std::vector<int>> find_alternance(
    std::span<const double> e, int length, double tol,
    std::uint64_t budget = 10'000'000);

}  // namespace dsturm
