#pragma once

#include <string>
#include <vector>

namespace qalcove {

/// Outcome of an exhaustive check: how many items were examined, and the
/// violations found (expected to be empty).
struct Report {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

}  // namespace qalcove
