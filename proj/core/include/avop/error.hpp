#pragma once

#include <stdexcept>
#include <string>

namespace avop {

/// Malformed input: out-of-range table entries, size mismatches, bad JSON.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A size guard was exceeded. Never silent: callers must raise the cap
/// explicitly if they really want the larger search.
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition documented on the operation does not hold
/// (non-averaging operator passed to a descendent construction, etc).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// A theorem-backed postcondition failed. Indicates a bug, not bad input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace avop
