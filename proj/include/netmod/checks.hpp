#pragma once

// Named property suites: one per module's invariants and one per
// acceptance criterion. Shared by `netmod check` and the acceptance test.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace netmod {

struct CheckResult {
  bool passed = true;
  std::size_t cases = 0;
  /// What was covered, e.g. "9331 words, 3064 classes".
  std::string summary;
  /// First failing instance; empty on success.
  std::string counterexample;
};

struct Suite {
  std::string name;
  std::string title;
  std::function<CheckResult()> run;
};

/// Module invariant suites: algebra-core, green-product, kneser,
/// network-model, operad-algebras, cli.
const std::vector<Suite>& invariant_suites();
/// criterion-1 .. criterion-12.
const std::vector<Suite>& acceptance_suites();
/// Invariant suites followed by the acceptance suites.
std::vector<Suite> all_suites();
/// nullptr when no suite has that name.
const Suite* find_suite(std::string_view name);

}  // namespace netmod
