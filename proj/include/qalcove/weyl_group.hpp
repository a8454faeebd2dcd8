#pragma once

// The finite Weyl group, fully enumerated. Elements are dense integer ids into
// a table; id 0 is the identity. Each element is stored as the signed
// permutation it induces on the roots together with its matrix on the
// fundamental-weight basis.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "qalcove/lie_data.hpp"

namespace qalcove {

using WeylElement = std::int32_t;

class WeylGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 60000;

  /// Enumerates W by breadth-first search over right multiplication by simple
  /// reflections. Throws InvalidInput if |W| exceeds max_order.
  explicit WeylGroup(RootDatum datum, std::size_t max_order = kDefaultMaxOrder);

  const RootDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  std::size_t order() const { return length_.size(); }
  WeylElement identity() const { return 0; }

  int length(WeylElement w) const { return length_[w]; }
  WeylElement inverse(WeylElement w) const { return inverse_[w]; }
  WeylElement multiply(WeylElement u, WeylElement v) const;
  /// w s_i and s_i w for a node i in 1..r.
  WeylElement right_simple(WeylElement w, int node) const { return right_[w * rank() + node - 1]; }
  WeylElement left_simple(int node, WeylElement w) const { return left_[w * rank() + node - 1]; }
  /// The reflection s_beta for a positive root index.
  WeylElement reflection(int root_index) const { return reflection_[root_index]; }
  WeylElement longest() const { return longest_; }

  /// Image of a signed root.
  SignedRoot act(WeylElement w, SignedRoot beta) const;
  Weight act(WeylElement w, const Weight& mu) const;
  RationalWeight act(WeylElement w, const RationalWeight& mu) const;

  bool has_right_descent(WeylElement w, int node) const;
  bool has_left_descent(WeylElement w, int node) const;

  /// Lexicographically smallest reduced word (nodes 1..r).
  std::vector<int> reduced_word(WeylElement w) const;
  WeylElement from_word(const std::vector<int>& word) const;
  std::string word_string(WeylElement w) const;  // "e" or "s1s2s1"

  /// Minimum-length representative of w W_J.
  WeylElement min_coset_rep(WeylElement w, NodeSet J) const;
  bool is_min_coset_rep(WeylElement w, NodeSet J) const;
  /// W^J ordered by (length, id).
  std::vector<WeylElement> coset_reps(NodeSet J) const;
  /// Elements of the parabolic subgroup W_J ordered by (length, id).
  std::vector<WeylElement> parabolic_elements(NodeSet J) const;
  WeylElement longest_in(NodeSet J) const;

  /// Bruhat covers w < w r_beta with length exactly one more.
  std::vector<WeylElement> bruhat_covers(WeylElement w) const;

  /// omega(v) = w_o v w_o.
  WeylElement omega(WeylElement v) const { return multiply(longest_, multiply(v, longest_)); }
  NodeSet omega(NodeSet J) const;

 private:
  int encode(SignedRoot r) const { return r.sign > 0 ? r.index : r.index + npos_; }
  SignedRoot decode(int c) const { return c < npos_ ? SignedRoot{c, 1} : SignedRoot{c - npos_, -1}; }
  int apply_code(WeylElement w, int code) const;
  std::uint64_t key_of(const std::vector<int>& simple_images) const;
  WeylElement lookup(const std::vector<int>& simple_images) const;

  RootDatum datum_;
  int npos_ = 0;
  std::vector<std::vector<int>> simple_reflect_;  // [node-1][code] -> code
  std::vector<std::int16_t> perm_;                // |W| x npos_, image codes of positive roots
  std::vector<int> matrix_;                       // |W| x r x r, action on weight coordinates
  std::vector<int> length_;
  std::vector<WeylElement> inverse_;
  std::vector<WeylElement> right_;
  std::vector<WeylElement> left_;
  std::vector<WeylElement> reflection_;
  std::unordered_map<std::uint64_t, WeylElement> index_;
  WeylElement longest_ = 0;
};

}  // namespace qalcove
