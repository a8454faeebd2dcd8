#include "qalcove/weyl_group.hpp"

#include <algorithm>
#include <queue>

#include "qalcove/errors.hpp"

namespace qalcove {

WeylGroup::WeylGroup(RootDatum datum, std::size_t max_order) : datum_(std::move(datum)) {
  const int r = datum_.rank();
  npos_ = datum_.num_positive_roots();
  const auto& A = datum_.cartan();

  simple_reflect_.assign(r, std::vector<int>(2 * npos_));
  for (int i = 1; i <= r; ++i) {
    const int si = datum_.simple_root(i);
    for (int k = 0; k < npos_; ++k) {
      SignedRoot img = datum_.reflect_root({k, 1}, si);
      simple_reflect_[i - 1][k] = encode(img);
      simple_reflect_[i - 1][k + npos_] = encode(img.negated());
    }
  }

  // Identity.
  perm_.resize(npos_);
  for (int k = 0; k < npos_; ++k) perm_[k] = static_cast<std::int16_t>(k);
  matrix_.assign(r * r, 0);
  for (int a = 0; a < r; ++a) matrix_[a * r + a] = 1;
  length_.push_back(0);
  {
    std::vector<int> imgs(r);
    for (int j = 1; j <= r; ++j) imgs[j - 1] = datum_.simple_root(j);
    index_.emplace(key_of(imgs), 0);
  }

  // Breadth-first search under right multiplication; ids come out ordered by length.
  std::vector<int> imgs(r);
  std::vector<std::int16_t> next_perm(npos_);
  for (std::size_t w = 0; w < length_.size(); ++w) {
    right_.resize((w + 1) * r, -1);
    for (int i = 1; i <= r; ++i) {
      for (int k = 0; k < npos_; ++k)
        next_perm[k] = static_cast<std::int16_t>(apply_code(static_cast<WeylElement>(w), simple_reflect_[i - 1][k]));
      for (int j = 1; j <= r; ++j) imgs[j - 1] = next_perm[datum_.simple_root(j)];
      auto key = key_of(imgs);
      auto it = index_.find(key);
      if (it != index_.end()) {
        right_[w * r + i - 1] = it->second;
        continue;
      }
      const auto id = static_cast<WeylElement>(length_.size());
      if (static_cast<std::size_t>(id) >= max_order)
        throw InvalidInput("Weyl group of " + datum_.name() + " exceeds the size budget of " +
                           std::to_string(max_order) + " elements");
      index_.emplace(key, id);
      right_[w * r + i - 1] = id;
      perm_.insert(perm_.end(), next_perm.begin(), next_perm.end());
      std::vector<int> m(matrix_.begin() + w * r * r, matrix_.begin() + (w + 1) * r * r);
      for (int a = 0; a < r; ++a) {
        int s = 0;
        for (int j = 0; j < r; ++j) s += m[a * r + j] * A[j][i - 1];
        m[a * r + i - 1] -= s;
      }
      matrix_.insert(matrix_.end(), m.begin(), m.end());
      const bool up = !has_right_descent(static_cast<WeylElement>(w), i);
      length_.push_back(length_[w] + (up ? 1 : -1));
    }
  }

  const std::size_t n = length_.size();
  left_.resize(n * r);
  inverse_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    const auto* p = &perm_[w * npos_];
    for (int i = 1; i <= r; ++i) {
      for (int j = 1; j <= r; ++j) imgs[j - 1] = simple_reflect_[i - 1][p[datum_.simple_root(j)]];
      left_[w * r + i - 1] = lookup(imgs);
    }
    for (int k = 0; k < npos_; ++k) {
      SignedRoot img = decode(p[k]);
      if (datum_.root(img.index).height != 1) continue;
      for (int j = 1; j <= r; ++j)
        if (datum_.simple_root(j) == img.index) imgs[j - 1] = encode({k, img.sign});
    }
    inverse_[w] = lookup(imgs);
  }
  reflection_.resize(npos_);
  for (int k = 0; k < npos_; ++k) {
    for (int j = 1; j <= r; ++j) imgs[j - 1] = encode(datum_.reflect_root({datum_.simple_root(j), 1}, k));
    reflection_[k] = lookup(imgs);
  }
  longest_ = static_cast<WeylElement>(n - 1);
  check_internal(length_[longest_] == npos_, "longest element has wrong length");
}

int WeylGroup::apply_code(WeylElement w, int code) const {
  const auto* p = &perm_[static_cast<std::size_t>(w) * npos_];
  if (code < npos_) return p[code];
  int c = p[code - npos_];
  return c < npos_ ? c + npos_ : c - npos_;
}

std::uint64_t WeylGroup::key_of(const std::vector<int>& simple_images) const {
  std::uint64_t key = 0;
  for (auto it = simple_images.rbegin(); it != simple_images.rend(); ++it)
    key = key * static_cast<std::uint64_t>(2 * npos_) + static_cast<std::uint64_t>(*it);
  return key;
}

WeylElement WeylGroup::lookup(const std::vector<int>& simple_images) const {
  auto it = index_.find(key_of(simple_images));
  check_internal(it != index_.end(), "Weyl element lookup failed");
  return it->second;
}

WeylElement WeylGroup::multiply(WeylElement u, WeylElement v) const {
  const int r = rank();
  std::vector<int> imgs(r);
  for (int j = 1; j <= r; ++j) imgs[j - 1] = apply_code(u, apply_code(v, datum_.simple_root(j)));
  return lookup(imgs);
}

SignedRoot WeylGroup::act(WeylElement w, SignedRoot beta) const { return decode(apply_code(w, encode(beta))); }

Weight WeylGroup::act(WeylElement w, const Weight& mu) const {
  const int r = rank();
  const int* m = &matrix_[static_cast<std::size_t>(w) * r * r];
  Weight out(r);
  for (int a = 0; a < r; ++a)
    for (int j = 0; j < r; ++j) out[a] += m[a * r + j] * mu[j];
  return out;
}

RationalWeight WeylGroup::act(WeylElement w, const RationalWeight& mu) const {
  const int r = rank();
  const int* m = &matrix_[static_cast<std::size_t>(w) * r * r];
  RationalWeight out(r);
  for (int a = 0; a < r; ++a)
    for (int j = 0; j < r; ++j) out.coords[a] += m[a * r + j] * mu.coords[j];
  return out;
}

bool WeylGroup::has_right_descent(WeylElement w, int node) const {
  return apply_code(w, datum_.simple_root(node)) >= npos_;
}

bool WeylGroup::has_left_descent(WeylElement w, int node) const {
  return has_right_descent(inverse_[w], node);
}

std::vector<int> WeylGroup::reduced_word(WeylElement w) const {
  std::vector<int> word;
  while (length_[w] > 0) {
    int i = 1;
    while (!has_left_descent(w, i)) ++i;
    word.push_back(i);
    w = left_simple(i, w);
  }
  return word;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElement w = 0;
  for (int i : word) {
    if (i < 1 || i > rank()) throw InvalidInput("reduced word letter out of range: " + std::to_string(i));
    w = right_simple(w, i);
  }
  return w;
}

std::string WeylGroup::word_string(WeylElement w) const {
  auto word = reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

WeylElement WeylGroup::min_coset_rep(WeylElement w, NodeSet J) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J.nodes(rank())) {
      if (has_right_descent(w, j)) {
        w = right_simple(w, j);
        moved = true;
      }
    }
  }
  return w;
}

bool WeylGroup::is_min_coset_rep(WeylElement w, NodeSet J) const {
  for (int j : J.nodes(rank()))
    if (has_right_descent(w, j)) return false;
  return true;
}

std::vector<WeylElement> WeylGroup::coset_reps(NodeSet J) const {
  std::vector<WeylElement> out;
  for (WeylElement w = 0; w < static_cast<WeylElement>(order()); ++w)
    if (is_min_coset_rep(w, J)) out.push_back(w);
  return out;  // ids are already ordered by length
}

std::vector<WeylElement> WeylGroup::parabolic_elements(NodeSet J) const {
  std::vector<WeylElement> out{0};
  std::vector<char> seen(order(), 0);
  seen[0] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int j : J.nodes(rank())) {
      WeylElement x = right_simple(out[k], j);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement WeylGroup::longest_in(NodeSet J) const { return parabolic_elements(J).back(); }

std::vector<WeylElement> WeylGroup::bruhat_covers(WeylElement w) const {
  std::vector<WeylElement> out;
  for (int k = 0; k < npos_; ++k) {
    WeylElement x = multiply(w, reflection_[k]);
    if (length_[x] == length_[w] + 1) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NodeSet WeylGroup::omega(NodeSet J) const {
  NodeSet out;
  for (int j : J.nodes(rank())) out.insert(datum_.omega()[j]);
  return out;
}

}  // namespace qalcove
