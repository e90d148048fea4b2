#pragma once

// Helpers shared by the suite implementations.

#include <string>
#include <vector>

#include "netmod/checks.hpp"
#include "netmod/io.hpp"
#include "netmod/sweep.hpp"

namespace netmod::checks {

/// Counts cases and keeps the first failure.
class Checker {
 public:
  /// Returns `cond`; on the first false, stores describe().
  template <typename Describe>
  bool expect(bool cond, Describe&& describe) {
    ++cases_;
    if (!cond && !failed_) {
      failed_ = true;
      counterexample_ = describe();
    }
    return cond;
  }

  /// Records an exception thrown by the code under test.
  void fail(std::string what) {
    if (!failed_) {
      failed_ = true;
      counterexample_ = std::move(what);
    }
  }

  bool failed() const { return failed_; }
  std::size_t cases() const { return cases_; }

  CheckResult finish(std::string summary) const {
    while (!summary.empty() && (summary.back() == ' ' || summary.back() == ';')) summary.pop_back();
    return {!failed_, cases_, std::move(summary), counterexample_};
  }

 private:
  std::size_t cases_ = 0;
  bool failed_ = false;
  std::string counterexample_;
};

/// Runs `body`, turning escaped exceptions into a failure.
CheckResult guarded(const std::function<CheckResult()>& body);

/// Human-readable packed word.
std::string describe_code_word(const std::string& w, const OracleAlphabet& al, const GreenContext& ctx);

/// Distinct elements of model(n) reachable by words of length <= max_len
/// over all non-identity single-edge letters, in first-seen order.
std::vector<NetworkElement> network_elements(const NetworkModel& model, std::size_t n, std::size_t max_len);

/// Every word of length <= max_len over all non-identity single-edge
/// letters of model(n), by length then letter order.
std::vector<std::vector<WeightedEdge>> network_words(const NetworkModel& model, std::size_t n,
                                                     std::size_t max_len);

/// All graphs on n vertices with every degree <= k.
std::vector<SimpleGraph> bounded_graphs(std::size_t n, std::size_t k);

std::string show(const NetworkElement& g, const NetworkModel& model);
std::string show(const SimpleGraph& g);

// Suite bodies.
CheckResult algebra_core_suite();
CheckResult green_product_suite();
CheckResult kneser_suite();
CheckResult network_model_suite();
CheckResult operad_algebras_suite();
CheckResult cli_suite();

CheckResult criterion_1();
CheckResult criterion_2();
CheckResult criterion_3();
CheckResult criterion_4();
CheckResult criterion_5();
CheckResult criterion_6();
CheckResult criterion_7();
CheckResult criterion_8();
CheckResult criterion_9();
CheckResult criterion_10();
CheckResult criterion_11();
CheckResult criterion_12();

}  // namespace netmod::checks
