#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qalcove/weyl_group.hpp"

namespace qalcove::testing {

/// Shared, lazily built Weyl groups keyed by type name ("A2", "G2", ...).
inline const WeylGroup& group(char type, int rank) {
  static std::map<std::string, std::unique_ptr<WeylGroup>> cache;
  const std::string key = std::string(1, type) + std::to_string(rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<WeylGroup>(RootDatum::build(type, rank))).first;
  return *it->second;
}

struct Case {
  char type;
  int rank;
  std::vector<int> lambda;
  std::string name() const {
    std::string s = std::string(1, type) + std::to_string(rank) + " (";
    for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
    return s + ")";
  }
  const WeylGroup& W() const { return group(type, rank); }
  Weight weight() const { return Weight(lambda); }
};

/// The desk-scale weights used throughout: A1, A2, C2, B2, G2 and A3.
inline const std::vector<Case>& standard_cases() {
  static const std::vector<Case> cases = {
      {'A', 1, {1}},       {'A', 1, {2}},       {'A', 1, {3}},       {'A', 2, {1, 0}},
      {'A', 2, {0, 1}},    {'A', 2, {1, 1}},    {'A', 2, {2, 0}},    {'C', 2, {1, 0}},
      {'C', 2, {0, 1}},    {'C', 2, {1, 1}},    {'B', 2, {1, 0}},    {'B', 2, {0, 1}},
      {'B', 2, {1, 1}},    {'G', 2, {1, 0}},    {'G', 2, {0, 1}},    {'A', 3, {0, 1, 0}},
  };
  return cases;
}

/// All types of rank <= 2.
inline std::vector<std::pair<char, int>> rank_two_types() { return {{'A', 1}, {'A', 2}, {'B', 2}, {'C', 2}, {'G', 2}}; }

}  // namespace qalcove::testing
