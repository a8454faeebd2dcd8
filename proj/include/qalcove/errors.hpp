#pragma once

#include <stdexcept>
#include <string>

namespace qalcove {

/// Rejected user input (bad type label, non-dominant weight, malformed path data).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical guarantee failed at runtime. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_internal(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

}  // namespace qalcove
