#pragma once

// Parabolic quantum Bruhat graphs QB(W^J), their b-restrictions, shortest
// path weights, the lambda-dependent reflection ordering, label-increasing
// paths and tilted-Bruhat minima.

#include <mutex>
#include <optional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qalcove/weyl_group.hpp"

namespace qalcove {

enum class EdgeKind { Bruhat, Quantum };

struct QBGEdge {
  WeylElement source = 0;
  WeylElement target = 0;
  int label = 0;  ///< positive root index
  EdgeKind kind = EdgeKind::Bruhat;
};

/// Edge test for the full graph QB(W): the kind of w -> w r_beta, if any.
std::optional<EdgeKind> qb_edge_kind(const WeylGroup& W, WeylElement w, int root_index);

class QuantumBruhatGraph {
 public:
  QuantumBruhatGraph(const WeylGroup& W, NodeSet J);

  const WeylGroup& group() const { return *W_; }
  NodeSet parabolic() const { return J_; }
  const std::vector<WeylElement>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  /// Position of w in vertices(), or -1 when w is not in W^J.
  int vertex_index(WeylElement w) const { return slot_[w]; }
  const std::vector<QBGEdge>& out_edges(WeylElement w) const { return adjacency_[slot_[w]]; }
  std::size_t num_edges() const;
  /// Edge weight: the coroot of the label for quantum edges, zero otherwise.
  std::vector<int> edge_weight(const QBGEdge& e) const;

  /// Subgraph keeping edges with b <alpha^vee, lambda> integral.
  QuantumBruhatGraph restricted(const Rational& b, const Weight& lambda) const;
  bool restricted_to_integral() const { return !restriction_.has_value(); }

  /// Vertices reachable from w (including w), as a bitmap over vertices().
  std::vector<char> reachable_from(WeylElement w) const;
  bool strongly_connected() const;

 private:
  QuantumBruhatGraph() = default;

  const WeylGroup* W_ = nullptr;
  NodeSet J_;
  std::vector<WeylElement> vertices_;
  std::vector<int> slot_;
  std::vector<std::vector<QBGEdge>> adjacency_;
  std::optional<std::pair<Rational, Weight>> restriction_;
};

/// All-pairs BFS distances and one witness coweight per pair in QB(W^J).
class PathWeights {
 public:
  explicit PathWeights(const QuantumBruhatGraph& graph);

  int distance(WeylElement x, WeylElement y) const;
  /// Coroot-basis weight of the witness shortest path from x to y.
  const std::vector<int>& witness(WeylElement x, WeylElement y) const;
  /// wt_lambda(x => y) = <wt(p), lambda> for a shortest path p.
  int weight(WeylElement x, WeylElement y, const Weight& lambda) const;

  /// Every coweight (modulo Q_J^vee, J coordinates zeroed) realized by some
  /// shortest path from x, indexed by target vertex slot.
  std::vector<std::set<std::vector<int>>> all_shortest_coweights(WeylElement x) const;

 private:
  const QuantumBruhatGraph* graph_;
  std::size_t n_;
  std::vector<int> dist_;
  std::vector<std::vector<int>> coweight_;
};

/// Reachability in the b-restricted graphs, cached per reduced denominator of b.
class RestrictedReachability {
 public:
  RestrictedReachability(const QuantumBruhatGraph& graph, Weight lambda);
  /// Is there a directed path from x to y in QB_{b lambda}(W^J)?
  bool reachable(WeylElement x, WeylElement y, const Rational& b) const;

 private:
  const std::vector<char>& closure(std::int64_t denominator) const;

  const QuantumBruhatGraph* graph_;
  Weight lambda_;
  mutable std::mutex mutex_;
  mutable std::map<std::int64_t, std::unique_ptr<std::vector<char>>> cache_;
};

/// The reflection ordering <_lambda on Phi^+: roots outside Phi_J by the
/// position of H_{alpha,0} in the lex chain, then Phi_J^+ in the inversion
/// order of the lexicographically smallest reduced word of the longest
/// element of W_J. zero_level_order lists the roots of the lex chain entries
/// with height 0 in chain order.
class ReflectionOrder {
 public:
  ReflectionOrder(const WeylGroup& W, NodeSet J, const std::vector<int>& zero_level_order);

  const std::vector<int>& roots() const { return order_; }
  int rank_of(int root_index) const { return rank_[root_index]; }
  bool less(int a, int b) const { return rank_[a] < rank_[b]; }
  /// Dyer's interleaving condition on every rank-2 subsystem (via coroots).
  bool verify(const RootDatum& datum) const;

 private:
  std::vector<int> order_;
  std::vector<int> rank_;
};

struct QBPath {
  std::vector<WeylElement> vertices;  ///< v = vertices[0], ..., vertices.back()
  std::vector<int> labels;
  std::vector<EdgeKind> kinds;
  std::size_t length() const { return labels.size(); }
};

/// The unique label-increasing path from v to w in QB(W). Throws InternalError
/// if the path is not unique or not shortest.
QBPath increasing_path(const WeylGroup& W, const ReflectionOrder& order, WeylElement v, WeylElement w);

/// Endpoint (and path) of the unique increasing path from v into the coset
/// w W_J using only labels outside Phi_J^+.
QBPath tilted_minimum_path(const WeylGroup& W, const ReflectionOrder& order, NodeSet J, WeylElement v,
                           WeylElement coset_rep);
WeylElement tilted_minimum(const WeylGroup& W, const ReflectionOrder& order, NodeSet J, WeylElement v,
                           WeylElement coset_rep);
/// Brute-force oracle: the unique minimizer of the QB(W) distance from v over w W_J.
WeylElement tilted_minimum_bruteforce(const WeylGroup& W, NodeSet J, WeylElement v, WeylElement coset_rep);
/// BFS distances in QB(W) from v, indexed by element id.
std::vector<int> qb_distances(const WeylGroup& W, WeylElement v);

std::string to_dot(const QuantumBruhatGraph& graph);

}  // namespace qalcove
