#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilorbit {

// A violated mathematical precondition or an out-of-scope request
// (bad characteristic, unsupported family, malformed orbit label, ...).
// The CLI maps these to exit code 1.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration budget exceeded; carries the state count the request needs.
struct BudgetError : HypothesisError {
  std::uint64_t required;
  BudgetError(const std::string& what, std::uint64_t required_states)
      : HypothesisError(what), required(required_states) {}
};

}  // namespace nilorbit
