#include "qalcove/quantum_bruhat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "qalcove/errors.hpp"

namespace qalcove {

namespace {

int coroot_height(const RootDatum& d, int k) {
  const auto& c = d.root(k).coroot;
  return std::accumulate(c.begin(), c.end(), 0);
}

}  // namespace

std::optional<EdgeKind> qb_edge_kind(const WeylGroup& W, WeylElement w, int root_index) {
  const WeylElement x = W.multiply(w, W.reflection(root_index));
  const int lw = W.length(w), lx = W.length(x);
  if (lx == lw + 1) return EdgeKind::Bruhat;
  if (lx == lw + 1 - 2 * coroot_height(W.datum(), root_index)) return EdgeKind::Quantum;
  return std::nullopt;
}

QuantumBruhatGraph::QuantumBruhatGraph(const WeylGroup& W, NodeSet J) : W_(&W), J_(J) {
  const auto& d = W.datum();
  if (J.bits() >> d.rank()) throw InvalidInput("parabolic node set out of range");
  vertices_ = W.coset_reps(J);
  slot_.assign(W.order(), -1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) slot_[vertices_[k]] = static_cast<int>(k);
  const Weight shift = 2 * d.rho() - d.two_rho(J);
  adjacency_.resize(vertices_.size());
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const WeylElement w = vertices_[k];
    for (int a = 0; a < d.num_positive_roots(); ++a) {
      if (d.in_parabolic(a, J)) continue;
      const WeylElement x = W.multiply(w, W.reflection(a));
      if (W.length(x) == W.length(w) + 1) {
        check_internal(slot_[x] >= 0, "Bruhat cover left W^J");
        adjacency_[k].push_back({w, x, a, EdgeKind::Bruhat});
        continue;
      }
      const WeylElement y = W.min_coset_rep(x, J);
      if (W.length(y) == W.length(w) + 1 - d.pairing(a, shift))
        adjacency_[k].push_back({w, y, a, EdgeKind::Quantum});
    }
  }
}

std::size_t QuantumBruhatGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& adj : adjacency_) n += adj.size();
  return n;
}

std::vector<int> QuantumBruhatGraph::edge_weight(const QBGEdge& e) const {
  if (e.kind == EdgeKind::Bruhat) return std::vector<int>(W_->rank(), 0);
  return W_->datum().root(e.label).coroot;
}

QuantumBruhatGraph QuantumBruhatGraph::restricted(const Rational& b, const Weight& lambda) const {
  const auto& d = W_->datum();
  if (static_cast<int>(lambda.size()) != d.rank() || !lambda.is_dominant())
    throw InvalidInput("restriction needs a dominant weight of the right rank");
  if (d.stabilizer(lambda) != J_) throw InvalidInput("weight stabilizer does not match the graph's parabolic");
  QuantumBruhatGraph g;
  g.W_ = W_;
  g.J_ = J_;
  g.vertices_ = vertices_;
  g.slot_ = slot_;
  g.adjacency_.resize(adjacency_.size());
  for (std::size_t k = 0; k < adjacency_.size(); ++k)
    for (const auto& e : adjacency_[k])
      if (is_integer(b * d.pairing(e.label, lambda))) g.adjacency_[k].push_back(e);
  if (!is_integer(b)) g.restriction_ = std::make_pair(b, lambda);
  return g;
}

std::vector<char> QuantumBruhatGraph::reachable_from(WeylElement w) const {
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{slot_[w]};
  seen[slot_[w]] = 1;
  while (!stack.empty()) {
    int k = stack.back();
    stack.pop_back();
    for (const auto& e : adjacency_[k]) {
      int t = slot_[e.target];
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

bool QuantumBruhatGraph::strongly_connected() const {
  // Strongly connected iff everything is reachable from one vertex in the
  // graph and in its reverse.
  if (vertices_.empty()) return true;
  auto fwd = reachable_from(vertices_[0]);
  if (std::find(fwd.begin(), fwd.end(), 0) != fwd.end()) return false;
  std::vector<std::vector<int>> rev(vertices_.size());
  for (std::size_t k = 0; k < adjacency_.size(); ++k)
    for (const auto& e : adjacency_[k]) rev[slot_[e.target]].push_back(static_cast<int>(k));
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int k = stack.back();
    stack.pop_back();
    for (int t : rev[k])
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
  }
  return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

PathWeights::PathWeights(const QuantumBruhatGraph& graph) : graph_(&graph), n_(graph.size()) {
  if (n_ > 4000) throw InvalidInput("parabolic quantum Bruhat graph too large for all-pairs path weights");
  const int r = graph.group().rank();
  dist_.assign(n_ * n_, -1);
  coweight_.assign(n_ * n_, {});
  for (std::size_t s = 0; s < n_; ++s) {
    std::queue<int> q;
    dist_[s * n_ + s] = 0;
    coweight_[s * n_ + s].assign(r, 0);
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& e : graph.out_edges(graph.vertices()[u])) {
        int v = graph.vertex_index(e.target);
        if (dist_[s * n_ + v] >= 0) continue;
        dist_[s * n_ + v] = dist_[s * n_ + u] + 1;
        auto cw = coweight_[s * n_ + u];
        auto ew = graph.edge_weight(e);
        for (int i = 0; i < r; ++i) cw[i] += ew[i];
        coweight_[s * n_ + v] = std::move(cw);
        q.push(v);
      }
    }
  }
}

int PathWeights::distance(WeylElement x, WeylElement y) const {
  int d = dist_[graph_->vertex_index(x) * n_ + graph_->vertex_index(y)];
  check_internal(d >= 0, "quantum Bruhat graph is not strongly connected");
  return d;
}

const std::vector<int>& PathWeights::witness(WeylElement x, WeylElement y) const {
  distance(x, y);
  return coweight_[graph_->vertex_index(x) * n_ + graph_->vertex_index(y)];
}

int PathWeights::weight(WeylElement x, WeylElement y, const Weight& lambda) const {
  const auto& cw = witness(x, y);
  int s = 0;
  for (std::size_t i = 0; i < cw.size(); ++i) s += cw[i] * lambda[i];
  return s;
}

std::vector<std::set<std::vector<int>>> PathWeights::all_shortest_coweights(WeylElement x) const {
  const auto& g = *graph_;
  const int r = g.group().rank();
  const std::size_t s = g.vertex_index(x);
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dist_[s * n_ + a] < dist_[s * n_ + b]; });
  std::vector<std::set<std::vector<int>>> out(n_);
  out[s].insert(std::vector<int>(r, 0));
  for (int u : order) {
    for (const auto& e : g.out_edges(g.vertices()[u])) {
      int v = g.vertex_index(e.target);
      if (dist_[s * n_ + v] != dist_[s * n_ + u] + 1) continue;
      auto ew = g.edge_weight(e);
      for (auto cw : out[u]) {
        for (int i = 0; i < r; ++i) cw[i] = g.parabolic().contains(i + 1) ? 0 : cw[i] + ew[i];
        out[v].insert(std::move(cw));
      }
    }
  }
  return out;
}

RestrictedReachability::RestrictedReachability(const QuantumBruhatGraph& graph, Weight lambda)
    : graph_(&graph), lambda_(std::move(lambda)) {}

const std::vector<char>& RestrictedReachability::closure(std::int64_t denominator) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(denominator);
  if (it != cache_.end()) return *it->second;
  const auto& g = *graph_;
  const auto& d = g.group().datum();
  const std::size_t n = g.size();
  auto table = std::make_unique<std::vector<char>>(n * n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> stack{static_cast<int>(s)};
    (*table)[s * n + s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& e : g.out_edges(g.vertices()[u])) {
        if (d.pairing(e.label, lambda_) % denominator != 0) continue;
        int v = g.vertex_index(e.target);
        if ((*table)[s * n + v]) continue;
        (*table)[s * n + v] = 1;
        stack.push_back(v);
      }
    }
  }
  auto& ref = *table;
  cache_.emplace(denominator, std::move(table));
  return ref;
}

bool RestrictedReachability::reachable(WeylElement x, WeylElement y, const Rational& b) const {
  const auto& table = closure(b.denominator());
  return table[graph_->vertex_index(x) * graph_->size() + graph_->vertex_index(y)] != 0;
}

ReflectionOrder::ReflectionOrder(const WeylGroup& W, NodeSet J, const std::vector<int>& zero_level_order) {
  const auto& d = W.datum();
  const int npos = d.num_positive_roots();
  rank_.assign(npos, -1);
  for (int a : zero_level_order) {
    check_internal(!d.in_parabolic(a, J) && rank_[a] < 0, "bad zero-level hyperplane order");
    rank_[a] = static_cast<int>(order_.size());
    order_.push_back(a);
  }
  // Inversion order of the lex-smallest reduced word of the longest element of W_J.
  const auto word = W.reduced_word(W.longest_in(J));
  WeylElement prefix = W.identity();
  for (int i : word) {
    SignedRoot g = W.act(prefix, SignedRoot{d.simple_root(i), 1});
    check_internal(g.sign > 0 && rank_[g.index] < 0, "inversion sequence is not a reduced word");
    rank_[g.index] = static_cast<int>(order_.size());
    order_.push_back(g.index);
    prefix = W.right_simple(prefix, i);
  }
  check_internal(static_cast<int>(order_.size()) == npos, "reflection ordering does not cover all positive roots");
}

bool ReflectionOrder::verify(const RootDatum& d) const {
  // For alpha < beta, every gamma with gamma^vee = a alpha^vee + b beta^vee (a, b > 0)
  // must satisfy alpha < gamma < beta.
  const int npos = d.num_positive_roots();
  const int r = d.rank();
  for (int x = 0; x < npos; ++x) {
    for (int y = 0; y < npos; ++y) {
      if (rank_[x] >= rank_[y]) continue;
      const auto& u = d.root(x).coroot;
      const auto& v = d.root(y).coroot;
      int pi = -1, pj = -1;
      for (int i = 0; i < r && pi < 0; ++i)
        for (int j = i + 1; j < r; ++j)
          if (u[i] * v[j] - u[j] * v[i] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) continue;
      const std::int64_t det = u[pi] * v[pj] - u[pj] * v[pi];
      for (int z = 0; z < npos; ++z) {
        if (z == x || z == y) continue;
        const auto& g = d.root(z).coroot;
        Rational a(g[pi] * v[pj] - g[pj] * v[pi], det);
        Rational b(u[pi] * g[pj] - u[pj] * g[pi], det);
        bool in_span = true;
        for (int i = 0; i < r; ++i)
          if (a * u[i] + b * v[i] != g[i]) in_span = false;
        if (!in_span || a <= 0 || b <= 0) continue;
        if (!(rank_[x] < rank_[z] && rank_[z] < rank_[y])) return false;
      }
    }
  }
  return true;
}

namespace {

struct IncreasingSearch {
  const WeylGroup& W;
  const ReflectionOrder& order;
  NodeSet forbidden;  // labels in Phi_forbidden^+ are skipped
  bool use_forbidden;
  std::function<bool(WeylElement)> accept;
  std::vector<QBPath> found;
  QBPath current;

  void run(WeylElement v, int last_rank) {
    if (accept(v)) found.push_back(current);
    const auto& d = W.datum();
    for (int pos = last_rank + 1; pos < static_cast<int>(order.roots().size()); ++pos) {
      const int a = order.roots()[pos];
      if (use_forbidden && d.in_parabolic(a, forbidden)) continue;
      auto kind = qb_edge_kind(W, v, a);
      if (!kind) continue;
      const WeylElement x = W.multiply(v, W.reflection(a));
      current.vertices.push_back(x);
      current.labels.push_back(a);
      current.kinds.push_back(*kind);
      run(x, pos);
      current.vertices.pop_back();
      current.labels.pop_back();
      current.kinds.pop_back();
    }
  }
};

}  // namespace

std::vector<int> qb_distances(const WeylGroup& W, WeylElement v) {
  std::vector<int> dist(W.order(), -1);
  std::queue<WeylElement> q;
  dist[v] = 0;
  q.push(v);
  const int npos = W.datum().num_positive_roots();
  while (!q.empty()) {
    WeylElement u = q.front();
    q.pop();
    for (int a = 0; a < npos; ++a) {
      if (!qb_edge_kind(W, u, a)) continue;
      WeylElement x = W.multiply(u, W.reflection(a));
      if (dist[x] >= 0) continue;
      dist[x] = dist[u] + 1;
      q.push(x);
    }
  }
  return dist;
}

QBPath increasing_path(const WeylGroup& W, const ReflectionOrder& order, WeylElement v, WeylElement w) {
  IncreasingSearch search{W, order, NodeSet{}, false, [w](WeylElement x) { return x == w; }, {}, {}};
  search.current.vertices.push_back(v);
  search.run(v, -1);
  check_internal(search.found.size() == 1, "label-increasing path from " + W.word_string(v) + " to " +
                                               W.word_string(w) + " is not unique (" +
                                               std::to_string(search.found.size()) + " found)");
  const auto dist = qb_distances(W, v);
  check_internal(static_cast<int>(search.found[0].length()) == dist[w], "label-increasing path is not shortest");
  return search.found[0];
}

QBPath tilted_minimum_path(const WeylGroup& W, const ReflectionOrder& order, NodeSet J, WeylElement v,
                           WeylElement coset_rep) {
  const WeylElement target = W.min_coset_rep(coset_rep, J);
  IncreasingSearch search{W, order, J, true,
                          [&W, J, target](WeylElement x) { return W.min_coset_rep(x, J) == target; }, {}, {}};
  search.current.vertices.push_back(v);
  search.run(v, -1);
  check_internal(search.found.size() == 1, "increasing path into the coset " + W.word_string(target) +
                                               "W_J is not unique (" + std::to_string(search.found.size()) +
                                               " found)");
  return search.found[0];
}

WeylElement tilted_minimum(const WeylGroup& W, const ReflectionOrder& order, NodeSet J, WeylElement v,
                           WeylElement coset_rep) {
  return tilted_minimum_path(W, order, J, v, coset_rep).vertices.back();
}

WeylElement tilted_minimum_bruteforce(const WeylGroup& W, NodeSet J, WeylElement v, WeylElement coset_rep) {
  const auto dist = qb_distances(W, v);
  const WeylElement base = W.min_coset_rep(coset_rep, J);
  WeylElement best = -1;
  int count = 0;
  for (WeylElement u : W.parabolic_elements(J)) {
    WeylElement x = W.multiply(base, u);
    if (best < 0 || dist[x] < dist[best]) {
      best = x;
      count = 1;
    } else if (dist[x] == dist[best]) {
      ++count;
    }
  }
  check_internal(count == 1, "distance minimizer over the coset is not unique");
  return best;
}

std::string to_dot(const QuantumBruhatGraph& graph) {
  const auto& W = graph.group();
  std::ostringstream os;
  os << "digraph QB {\n";
  for (WeylElement v : graph.vertices()) os << "  \"" << W.word_string(v) << "\";\n";
  for (WeylElement v : graph.vertices())
    for (const auto& e : graph.out_edges(v))
      os << "  \"" << W.word_string(e.source) << "\" -> \"" << W.word_string(e.target) << "\" [label=\""
         << format_root(W.datum(), {e.label, 1}) << "\", style=" << (e.kind == EdgeKind::Bruhat ? "solid" : "dashed")
         << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qalcove
