// Acceptance battery runner: one line per criterion, nonzero exit on failure.
// With --expect-fail the roles flip, which is how the fault-injection runs
// prove that a corrupted computation is caught by the intended criterion.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

#include "dsturm/battery.hpp"

int main(int argc, char** argv) {
  namespace bt = dsturm::battery;
  CLI::App app{"dsturm acceptance battery"};
  bt::Options opt;
  std::string fault = "none";
  int expect_fail = 0;
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--inject-fault", fault, "none, spectrum, oscillation or minimax");
  app.add_option("--expect-fail", expect_fail, "criterion id that must fail")
      ->check(CLI::Range(1, bt::kCriterionCount));
  CLI11_PARSE(app, argc, argv);

  std::vector<bt::CriterionResult> results;
  try {
    opt.fault = bt::parse_fault(fault);
    results = bt::run(opt);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  int failed = 0;
  bool target_failed = false;
  for (const auto& r : results) {
    std::printf("[%s] %2d %s (%.3fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.detail.c_str());
    if (!r.pass) ++failed;
    if (r.id == expect_fail && !r.pass) target_failed = true;
  }
  std::printf("%d of %zu criteria passed (seed %llu, fault %s)\n",
              static_cast<int>(results.size()) - failed, results.size(),
              static_cast<unsigned long long>(opt.seed), bt::to_string(opt.fault));

  if (expect_fail != 0) {
    std::printf("criterion %d %s under the injected fault\n", expect_fail,
                target_failed ? "failed as intended" : "did NOT fail");
    return target_failed ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
