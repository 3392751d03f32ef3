#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsturm::battery {

/// Deliberate corruption used to check that the battery can fail.
enum class Fault { none, spectrum, oscillation, minimax };

[[nodiscard]] Fault parse_fault(const std::string& s);
[[nodiscard]] const char* to_string(Fault f);

struct Options {
  std::uint64_t seed = 20240917;
  std::vector<int> selection;  ///< criterion ids; empty runs all of them
  Fault fault = Fault::none;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double time_limit = 0.0;  ///< 0 when the criterion has no runtime bound
  std::string detail;
};

inline constexpr int kCriterionCount = 11;

[[nodiscard]] const char* criterion_name(int id);

/// Runs the selected criteria in increasing id order. Throws
/// std::invalid_argument for ids outside 1..kCriterionCount.
[[nodiscard]] std::vector<CriterionResult> run(const Options& opt);

}  // namespace dsturm::battery
