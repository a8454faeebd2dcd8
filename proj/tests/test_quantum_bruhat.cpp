#include <doctest.h>

#include <queue>

#include "qalcove/alcove_model.hpp"
#include "qalcove/quantum_bruhat.hpp"
#include "support.hpp"

using namespace qalcove;
using qalcove::testing::group;
using qalcove::testing::rank_two_types;

namespace {

std::vector<NodeSet> all_subsets(int r) {
  std::vector<NodeSet> out;
  for (std::uint32_t bits = 0; bits < (1u << r); ++bits) {
    std::vector<int> nodes;
    for (int i = 1; i <= r; ++i)
      if (bits >> (i - 1) & 1) nodes.push_back(i);
    out.push_back(NodeSet::from_nodes(nodes));
  }
  return out;
}

std::vector<int> bfs(const QuantumBruhatGraph& g, WeylElement from) {
  std::vector<int> dist(g.size(), -1);
  std::queue<WeylElement> q;
  dist[g.vertex_index(from)] = 0;
  q.push(from);
  while (!q.empty()) {
    WeylElement u = q.front();
    q.pop();
    for (const auto& e : g.out_edges(u))
      if (dist[g.vertex_index(e.target)] < 0) {
        dist[g.vertex_index(e.target)] = dist[g.vertex_index(u)] + 1;
        q.push(e.target);
      }
  }
  return dist;
}

// Weights of rank <= 2 covering every stabilizer type.
std::vector<Weight> sample_weights(int r) {
  if (r == 1) return {Weight({1}), Weight({2})};
  return {Weight({1, 0}), Weight({0, 1}), Weight({1, 1}), Weight({2, 1})};
}

}  // namespace

TEST_SUITE("quantum_bruhat") {

TEST_CASE("A1 graph") {
  const auto& W = group('A', 1);
  QuantumBruhatGraph g(W, NodeSet{});
  REQUIRE(g.num_edges() == 2);
  const auto& from_e = g.out_edges(W.identity());
  REQUIRE(from_e.size() == 1);
  CHECK(from_e[0].kind == EdgeKind::Bruhat);
  CHECK(g.edge_weight(from_e[0]) == std::vector<int>{0});
  const auto& from_s = g.out_edges(W.from_word({1}));
  REQUIRE(from_s.size() == 1);
  CHECK(from_s[0].kind == EdgeKind::Quantum);
  CHECK(from_s[0].target == W.identity());
  CHECK(g.edge_weight(from_s[0]) == std::vector<int>{1});
}

TEST_CASE("parabolic vertex sets and the trivial graph") {
  const auto& W = group('A', 2);
  CHECK(QuantumBruhatGraph(W, NodeSet::from_nodes({2})).size() == 3);
  for (auto [t, r] : rank_two_types()) {
    std::vector<int> all;
    for (int i = 1; i <= r; ++i) all.push_back(i);
    CHECK(QuantumBruhatGraph(group(t, r), NodeSet::from_nodes(all)).num_edges() == 0);
  }
}

TEST_CASE("restriction") {
  const auto& W = group('A', 1);
  QuantumBruhatGraph g(W, NodeSet{});
  const Weight lambda({2});
  CHECK(g.restricted(Rational(1), lambda).num_edges() == 2);
  CHECK(g.restricted(Rational(1, 2), lambda).num_edges() == 2);
  CHECK(g.restricted(Rational(1, 3), lambda).num_edges() == 0);
  CHECK_THROWS(g.restricted(Rational(1, 2), Weight({-1})));
  CHECK_THROWS(QuantumBruhatGraph(group('A', 2), NodeSet{}).restricted(Rational(1), Weight({1, 0})));
}

TEST_CASE("shortest path weights") {
  const auto& W = group('A', 1);
  QuantumBruhatGraph g(W, NodeSet{});
  PathWeights pw(g);
  const Weight lambda({2});
  const WeylElement e = W.identity(), s = W.from_word({1});
  CHECK(pw.weight(e, e, lambda) == 0);
  CHECK(pw.weight(s, e, lambda) == 2);
  CHECK(pw.weight(e, s, lambda) == 0);
}

TEST_CASE("edge kinds match their length conditions") {
  for (auto [t, r] : rank_two_types()) {
    const auto& W = group(t, r);
    const auto& d = W.datum();
    for (NodeSet J : all_subsets(r)) {
      QuantumBruhatGraph g(W, J);
      const Weight shift = 2 * d.rho() - d.two_rho(J);
      for (WeylElement w : g.vertices())
        for (const auto& e : g.out_edges(w)) {
          CHECK(!d.in_parabolic(e.label, J));
          CHECK(W.is_min_coset_rep(e.target, J));
          if (e.kind == EdgeKind::Bruhat) {
            CHECK(W.length(e.target) == W.length(w) + 1);
            CHECK(g.edge_weight(e) == std::vector<int>(r, 0));
          } else {
            CHECK(W.length(e.target) == W.length(w) + 1 - d.pairing(e.label, shift));
            CHECK(g.edge_weight(e) == d.root(e.label).coroot);
          }
        }
    }
  }
}

TEST_CASE("strong connectivity") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'C', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}})
    for (NodeSet J : all_subsets(r)) CHECK(QuantumBruhatGraph(group(t, r), J).strongly_connected());
}

TEST_CASE("all shortest paths agree modulo Q_J^vee") {
  for (auto [t, r] : rank_two_types()) {
    const auto& W = group(t, r);
    for (NodeSet J : all_subsets(r)) {
      QuantumBruhatGraph g(W, J);
      PathWeights pw(g);
      for (WeylElement x : g.vertices()) {
        const auto sets = pw.all_shortest_coweights(x);
        for (std::size_t k = 0; k < sets.size(); ++k) CHECK(sets[k].size() == 1);
      }
    }
  }
}

TEST_CASE("path weight identities under s_j") {
  for (auto [t, r] : rank_two_types()) {
    const auto& W = group(t, r);
    const auto& d = W.datum();
    for (const Weight& lambda : sample_weights(r)) {
      const NodeSet J = d.stabilizer(lambda);
      QuantumBruhatGraph g(W, J);
      PathWeights pw(g);
      auto wt = [&](WeylElement x, WeylElement y) { return pw.weight(x, y, lambda); };
      for (int j = 0; j <= r; ++j) {
        const int root = j == 0 ? d.highest_root() : d.simple_root(j);
        const int sign = j == 0 ? -1 : 1;
        const WeylElement sj = W.reflection(root);
        const int delta = j == 0 ? 1 : 0;
        auto pair = [&](WeylElement w) { return sign * d.pairing(root, W.act(w, lambda)); };
        auto fl = [&](WeylElement w) { return W.min_coset_rep(W.multiply(sj, w), J); };
        for (WeylElement w1 : g.vertices())
          for (WeylElement w2 : g.vertices()) {
            const int p1 = pair(w1), p2 = pair(w2);
            if (p1 > 0 && p2 <= 0) CHECK(wt(fl(w1), w2) == wt(w1, w2) - delta * p1);
            if (p1 < 0 && p2 < 0) CHECK(wt(fl(w1), fl(w2)) == wt(w1, w2) - delta * p1 + delta * p2);
            if (p1 >= 0 && p2 < 0) CHECK(wt(w1, fl(w2)) == wt(w1, w2) + delta * p2);
          }
      }
    }
  }
}

TEST_CASE("restricted edges of QB(W) project to restricted paths in QB(W^J)") {
  for (auto [t, r] : rank_two_types()) {
    const auto& W = group(t, r);
    const auto& d = W.datum();
    QuantumBruhatGraph full(W, NodeSet{});
    for (const Weight& lambda : sample_weights(r)) {
      const NodeSet J = d.stabilizer(lambda);
      QuantumBruhatGraph par(W, J);
      RestrictedReachability reach(par, lambda);
      for (const Rational b : {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1)})
        for (WeylElement w : full.vertices())
          for (const auto& e : full.out_edges(w)) {
            if (!is_integer(b * d.pairing(e.label, lambda))) continue;
            CHECK(reach.reachable(W.min_coset_rep(w, J), W.min_coset_rep(e.target, J), b));
          }
    }
  }
}

TEST_CASE("shortest paths stay inside restricted graphs") {
  for (auto [t, r] : rank_two_types()) {
    const auto& W = group(t, r);
    QuantumBruhatGraph full(W, NodeSet{});
    const Weight lambda = W.datum().rho();
    for (const Rational b : {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 6)}) {
      const auto restricted = full.restricted(b, lambda);
      for (WeylElement x : full.vertices()) {
        const auto dr = bfs(restricted, x);
        const auto df = bfs(full, x);
        for (std::size_t k = 0; k < dr.size(); ++k)
          if (dr[k] >= 0) CHECK(dr[k] == df[k]);
      }
    }
  }
}

TEST_CASE("reflection orders") {
  const auto& A1 = group('A', 1);
  ReflectionOrder o1(A1, NodeSet{}, {0});
  CHECK(o1.roots() == std::vector<int>{0});

  const auto& W = group('A', 2);
  const auto& d = W.datum();
  const int a1 = d.simple_root(1), a2 = d.simple_root(2), a12 = d.find_root({1, 1});
  {
    const auto chain = lex_chain(d, d.rho());
    std::vector<int> zero;
    for (const auto& e : chain.entries)
      if (e.level == 0) zero.push_back(e.root);
    ReflectionOrder o(W, NodeSet{}, zero);
    CHECK(o.roots() == std::vector<int>{a2, a12, a1});
    CHECK(o.verify(d));
    const auto chain21 = lex_chain(d, d.rho(), {2, 1});
    zero.clear();
    for (const auto& e : chain21.entries)
      if (e.level == 0) zero.push_back(e.root);
    ReflectionOrder o21(W, NodeSet{}, zero);
    CHECK(o21.roots() == std::vector<int>{a1, a12, a2});
  }
  {
    ReflectionOrder o(W, NodeSet::from_nodes({2}), {a1, a12});
    CHECK(o.roots() == std::vector<int>{a1, a12, a2});
    CHECK(o.verify(d));
  }
  for (auto [t, r] : rank_two_types()) {
    const auto& G = group(t, r);
    for (const Weight& lambda : sample_weights(r)) {
      const auto chain = lex_chain(G.datum(), lambda);
      std::vector<int> zero;
      for (const auto& e : chain.entries)
        if (e.level == 0) zero.push_back(e.root);
      CHECK(ReflectionOrder(G, G.datum().stabilizer(lambda), zero).verify(G.datum()));
    }
  }
}

TEST_CASE("increasing paths are unique and shortest") {
  const auto& W = group('A', 1);
  ReflectionOrder o1(W, NodeSet{}, {0});
  CHECK(increasing_path(W, o1, W.identity(), W.identity()).length() == 0);
  const auto p = increasing_path(W, o1, W.identity(), W.from_word({1}));
  REQUIRE(p.length() == 1);
  CHECK(p.kinds[0] == EdgeKind::Bruhat);
  for (auto [t, r] : rank_two_types()) {
    const auto& G = group(t, r);
    const auto chain = lex_chain(G.datum(), G.datum().rho());
    std::vector<int> zero;
    for (const auto& e : chain.entries)
      if (e.level == 0) zero.push_back(e.root);
    ReflectionOrder order(G, NodeSet{}, zero);
    for (WeylElement v = 0; v < static_cast<WeylElement>(G.order()); ++v) {
      const auto dist = qb_distances(G, v);
      for (WeylElement w = 0; w < static_cast<WeylElement>(G.order()); ++w) {
        const auto path = increasing_path(G, order, v, w);
        CHECK(static_cast<int>(path.length()) == dist[w]);
        for (std::size_t k = 1; k < path.labels.size(); ++k) CHECK(order.less(path.labels[k - 1], path.labels[k]));
      }
    }
  }
}

TEST_CASE("tilted minima agree with brute force") {
  const auto& A2 = group('A', 2);
  const auto& d = A2.datum();
  const NodeSet J2 = NodeSet::from_nodes({2});
  ReflectionOrder o(A2, J2, {d.simple_root(1), d.find_root({1, 1})});
  const WeylElement s2 = A2.from_word({2});
  CHECK(tilted_minimum(A2, o, J2, A2.identity(), s2) == tilted_minimum_bruteforce(A2, J2, A2.identity(), s2));
  CHECK(tilted_minimum(A2, o, J2, A2.identity(), A2.identity()) == A2.identity());
  const auto& A1 = group('A', 1);
  ReflectionOrder o1(A1, NodeSet{}, {0});
  CHECK(tilted_minimum(A1, o1, NodeSet{}, A1.from_word({1}), A1.identity()) == A1.identity());

  for (auto [t, r] : rank_two_types()) {
    const auto& G = group(t, r);
    for (const Weight& lambda : sample_weights(r)) {
      const NodeSet J = G.datum().stabilizer(lambda);
      const auto chain = lex_chain(G.datum(), lambda);
      std::vector<int> zero;
      for (const auto& e : chain.entries)
        if (e.level == 0) zero.push_back(e.root);
      ReflectionOrder order(G, J, zero);
      for (WeylElement v = 0; v < static_cast<WeylElement>(G.order()); ++v)
        for (WeylElement c : G.coset_reps(J)) {
          const WeylElement m = tilted_minimum(G, order, J, v, c);
          CHECK(m == tilted_minimum_bruteforce(G, J, v, c));
          CHECK(G.min_coset_rep(m, J) == c);
          if (G.min_coset_rep(v, J) == c) CHECK(m == v);
        }
    }
  }
}

TEST_CASE("DOT export") {
  const auto dot = to_dot(QuantumBruhatGraph(group('A', 1), NodeSet{}));
  CHECK(dot.find("dashed") != std::string::npos);
  CHECK(dot.find("digraph") != std::string::npos);
}

}
