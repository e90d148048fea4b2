#pragma once

#include <stdexcept>
#include <string>

namespace netmod {

/// Malformed input text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value or operation does not fit its context: variety constraint
/// violated, mismatched Green contexts, element outside its monoid, etc.
class ContextError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive oracle hit its configured size bound.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netmod
