#pragma once

// Finite root systems of types A-G with the marks and comarks of their
// untwisted affinizations.
//
// Conventions used throughout the library:
//   * Dynkin nodes are numbered 1..r in Bourbaki order; node 0 is the affine
//     node. Vectors indexed by classical node use slot i-1 for node i.
//   * Roots are integer vectors in the simple-root basis, coroots in the
//     simple-coroot basis, weights in the fundamental-weight basis. Every
//     pairing <beta^vee, mu> is therefore an integer dot product.
//   * cartan()[i][j] = <alpha_{i+1}^vee, alpha_{j+1}>.
//
// Bourbaki numbering places the short simple root of B_n at node n, the long
// simple root of C_n at node n, and for G_2 the short root at node 1 and the
// long root at node 2.

#include <compare>
#include <cstdint>
#include <string>
#include <initializer_list>
#include <vector>

#include "qalcove/rational.hpp"

namespace qalcove {

/// Integral weight in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, 0) {}
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const {
    for (int c : coords)
      if (c != 0) return false;
    return true;
  }
  bool is_dominant() const {
    for (int c : coords)
      if (c < 0) return false;
    return true;
  }

  auto operator<=>(const Weight&) const = default;

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& c : a.coords) c = -c;
    return a;
  }
  friend Weight operator*(int s, Weight a) {
    for (auto& c : a.coords) c *= s;
    return a;
  }

  RationalWeight to_rational() const {
    RationalWeight r(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = coords[i];
    return r;
  }
};

/// Subset of the classical nodes {1..r}.
class NodeSet {
 public:
  NodeSet() = default;
  static NodeSet from_nodes(const std::vector<int>& nodes);

  bool contains(int node) const { return (bits_ >> (node - 1)) & 1u; }
  void insert(int node) { bits_ |= 1u << (node - 1); }
  std::vector<int> nodes(int rank) const;
  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }

  auto operator<=>(const NodeSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A root of the finite system: +beta or -beta for a positive root index.
struct SignedRoot {
  int index = 0;
  int sign = 1;

  SignedRoot negated() const { return {index, -sign}; }
  bool operator==(const SignedRoot&) const = default;
};

struct PositiveRoot {
  std::vector<int> root;    ///< simple-root coordinates
  std::vector<int> coroot;  ///< simple-coroot coordinates
  Weight weight;            ///< the root in the fundamental-weight basis
  int height = 0;
};

class RootDatum {
 public:
  /// Throws InvalidInput for anything that is not a finite type
  /// (A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=4, E_6..8, F_4, G_2).
  static RootDatum build(char type_label, int rank);

  char type_label() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  const PositiveRoot& root(int index) const { return roots_[index]; }
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  int simple_root(int node) const { return simple_[node - 1]; }
  int highest_root() const { return theta_; }
  /// Index of the positive root with these simple-root coordinates, or -1.
  int find_root(const std::vector<int>& coords) const;
  /// Signed root for arbitrary coordinates; throws InternalError if not a root.
  SignedRoot signed_root(const std::vector<int>& coords) const;
  bool is_long(int root_index) const;

  /// Marks a_i and comarks a_i^vee, indexed by i in I_af = {0..r}.
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& comarks() const { return comarks_; }

  Weight zero_weight() const { return Weight(rank_); }
  Weight fundamental_weight(int node) const;
  Weight rho() const;
  /// Twice the half-sum of the positive roots of the parabolic subsystem.
  Weight two_rho(NodeSet J) const;
  bool in_parabolic(int root_index, NodeSet J) const;

  /// <beta^vee, mu> for positive root beta.
  int pairing(int root_index, const Weight& mu) const;
  int pairing(SignedRoot beta, const Weight& mu) const {
    return beta.sign * pairing(beta.index, mu);
  }
  Rational pairing(int root_index, const RationalWeight& mu) const;

  /// s_beta(mu) = mu - <beta^vee, mu> beta.
  Weight reflect(const Weight& mu, int root_index) const;
  /// r_{beta,l}(mu) = mu - (<beta^vee, mu> - l) beta.
  Weight affine_reflect(const Weight& mu, int root_index, int level) const;
  RationalWeight affine_reflect(const RationalWeight& mu, int root_index,
                                const Rational& level) const;
  /// Image of a signed root under the reflection s_beta.
  SignedRoot reflect_root(SignedRoot gamma, int root_index) const;
  Weight root_weight(SignedRoot beta) const;

  /// lev = sum_i a_i^vee eps_i over I_af.
  int level(const std::vector<int>& affine_coeffs) const;
  /// c_r = max(a_r / a_r^vee, a_0^vee).
  Rational c_r(int node) const;

  /// Simple-root coordinates of a weight (exact, rational in general).
  std::vector<Rational> to_root_coords(const Weight& mu) const;
  /// True when mu - nu lies in the nonnegative root cone Q^+.
  bool dominates(const Weight& mu, const Weight& nu) const;
  /// Invariant symmetric form, normalized so short roots have (a,a) = 2 * min ratio.
  Rational inner_product(const Weight& mu, const Weight& nu) const;
  /// Dominant representative of the W-orbit of mu.
  Weight dominant_conjugate(const Weight& mu) const;
  /// Node permutation omega with w_o alpha_j = -alpha_{omega(j)}; omega[0] = 0.
  const std::vector<int>& omega() const { return omega_; }
  Weight apply_omega(const Weight& mu) const;
  /// Stabilizer node set of a dominant weight.
  NodeSet stabilizer(const Weight& lambda) const;

 private:
  RootDatum() = default;
  void generate_roots();
  void compute_marks();
  void compute_symmetrizer();
  void compute_omega();

  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<PositiveRoot> roots_;
  std::vector<int> simple_;
  int theta_ = 0;
  std::vector<int> marks_;
  std::vector<int> comarks_;
  std::vector<Rational> symmetrizer_;  // (alpha_i, alpha_i) / 2
  std::vector<int> omega_;
};

std::string format_weight(const Weight& mu);  // e.g. "2ϖ1+ϖ3", "0"
std::string format_root(const RootDatum& datum, SignedRoot beta);  // e.g. "α1+2α2", "-α1"

}  // namespace qalcove
