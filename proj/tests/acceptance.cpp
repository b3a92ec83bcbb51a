// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>

#include "tosc/suites.hpp"

int main() {
  tosc::SuiteOptions options;
  int failed = 0;
  for (const auto& id : tosc::criterion_ids()) {
    const auto start = std::chrono::steady_clock::now();
    tosc::CriterionResult r;
    try {
      r = tosc::run_criterion(id, options);
    } catch (const std::exception& e) {
      r = {id, "suite error", false, e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.passed) ++failed;
    std::printf("%s %s %s: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(),
                r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
