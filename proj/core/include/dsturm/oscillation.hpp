#pragma once

#include <span>
#include <string>
#include <vector>

#include "dsturm/spectrum.hpp"

namespace dsturm {

/// Real values on the grid 0..q. Entries with |f| <= sign_tol * max|f|
/// count as exact zeros.
struct DiscreteFunction {
  std::vector<double> values;
  double sign_tol = 1e-9;
};

/// -1, 0 or +1 per grid point after applying the sign tolerance.
[[nodiscard]] std::vector<int> sign_pattern(const DiscreteFunction& f);

enum class ZeroType { first, second };

struct Zero {
  int nu = 0;
  ZeroType type = ZeroType::first;
};

/// Interval classes used when counting maximal sign changes.
///  sign_changes: closed segment [k, k+l] with f(nu-1) f(nu) < 0 throughout;
///  same_sign_gain: nonzero ends of equal sign around an odd number of zeros;
///  opposite_sign_gain: nonzero ends of opposite sign around an even number;
///  inert: a zero run touching the boundary or not of the two kinds above.
/// Gaining intervals include their two nonzero endpoints, inert ones do not.
enum class IntervalType { sign_changes, same_sign_gain, opposite_sign_gain, inert };

struct Interval {
  int first = 0;
  int last = 0;
  IntervalType type = IntervalType::inert;
};

struct OscillationReport {
  int N = 0;        ///< all generalized zeros
  int N0 = 0;       ///< zeros of the first type
  int S_minus = 0;  ///< fewest sign changes over nonzero replacements
  int S_plus = 0;   ///< most sign changes over nonzero replacements
  std::vector<Zero> zeros;
  std::vector<Interval> intervals;
};

/// Counts for f. The identically zero function gets N = q + 1,
/// S_minus = 0, S_plus = q.
[[nodiscard]] OscillationReport oscillation_report(const DiscreteFunction& f);

/// Maximum number of sign changes over all 2^z sign assignments to the z
/// zero entries. Throws BudgetError when z > 20.
[[nodiscard]] int splus_bruteforce(const DiscreteFunction& f);

[[nodiscard]] const char* to_string(IntervalType t);
[[nodiscard]] const char* to_string(ZeroType t);

struct EigenfunctionCounts {
  int k = 0;  ///< 1-based eigenfunction index
  int N = 0;
  int S_minus = 0;
  int S_plus = 0;
};

struct EigenfunctionCountReport {
  bool pass = true;
  int first_failing_k = 0;  ///< 1-based, 0 when every k passes
  std::vector<EigenfunctionCounts> counts;
};

/// Checks N(psi_k) = S-(psi_k) = S+(psi_k) = k - 1 for every k.
[[nodiscard]] EigenfunctionCountReport verify_eigenfunction_counts(const Spectrum& spec,
                                             double sign_tol = 1e-9);

struct CombinationChainReport {
  bool pass = true;
  int lower = 0;  ///< m - 1
  int S_minus = 0;
  int N = 0;
  int S_plus = 0;
  int upper = 0;  ///< n - 1
  std::vector<double> V;
};

/// Forms V = sum_{k=m}^{n} a_k psi_k (a has n - m + 1 entries, 1-based k)
/// and checks m - 1 <= S-(V) <= N(V) <= S+(V) <= n - 1.
[[nodiscard]] CombinationChainReport verify_combination_chain(const Spectrum& spec, int m, int n,
                                             std::span<const double> a,
                                             double sign_tol = 1e-9);

struct InequalityCheck {
  std::string name;
  int difference_count = 0;
  int function_count = 0;
  bool holds = true;
};

struct DifferenceReport {
  bool pass = true;
  bool forward_checked = false;
  std::vector<InequalityCheck> checks;
};

/// Compares N, S-, S+ of f with those of its backward difference (taking
/// f(-1) = 0). The forward-difference versions run only when the caller
/// asserts f(q+1) = 0 through zero_after_end.
[[nodiscard]] DifferenceReport difference_inequalities(const DiscreteFunction& f,
                                                       bool zero_after_end = false);

}  // namespace dsturm
