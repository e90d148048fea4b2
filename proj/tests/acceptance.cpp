// Runs the twelve acceptance criteria and prints one line per criterion.
#include <chrono>
#include <cstdio>

#include "netmod/checks.hpp"

int main() {
  int failures = 0;
  for (const auto& suite : netmod::acceptance_suites()) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = suite.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %-13s %s (%zu cases, %.2fs)\n", r.passed ? "PASS" : "FAIL", suite.name.c_str(),
                suite.title.c_str(), r.cases, secs);
    std::printf("     %s\n", r.summary.c_str());
    if (!r.passed) {
      std::printf("     counterexample: %s\n", r.counterexample.c_str());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, netmod::acceptance_suites().size());
  return failures == 0 ? 0 : 1;
}
