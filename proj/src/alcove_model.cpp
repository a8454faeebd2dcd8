#include "qalcove/alcove_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qalcove/errors.hpp"
#include "qalcove/parallel.hpp"

namespace qalcove {

namespace {

std::int64_t floor_of(const Rational& x) {
  std::int64_t n = x.numerator(), d = x.denominator();
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

void check_lambda(const RootDatum& d, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != d.rank())
    throw InvalidInput("weight has " + std::to_string(lambda.size()) + " coordinates, expected " +
                       std::to_string(d.rank()));
  if (!lambda.is_dominant()) throw InvalidInput("weight " + format_weight(lambda) + " is not dominant");
}

std::vector<std::int64_t> shi_coordinates(const RootDatum& d, const RationalWeight& p) {
  std::vector<std::int64_t> out(d.num_positive_roots());
  for (int a = 0; a < d.num_positive_roots(); ++a) out[a] = floor_of(d.pairing(a, p));
  return out;
}

}  // namespace

LambdaChain lex_chain(const RootDatum& d, const Weight& lambda, std::vector<int> node_order) {
  check_lambda(d, lambda);
  const int r = d.rank();
  if (node_order.empty()) {
    node_order.resize(r);
    std::iota(node_order.begin(), node_order.end(), 1);
  }
  {
    auto sorted = node_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(r);
    std::iota(expect.begin(), expect.end(), 1);
    if (sorted != expect) throw InvalidInput("node order must be a permutation of 1.." + std::to_string(r));
  }
  struct Key {
    ChainEntry entry;
    std::vector<std::int64_t> vec;  // (l, c_{o_1}, ..., c_{o_r}), to be divided by den
    std::int64_t den;
  };
  std::vector<Key> keys;
  for (int a = 0; a < d.num_positive_roots(); ++a) {
    const int den = d.pairing(a, lambda);
    for (int l = 0; l < den; ++l) {
      Key k{{a, l}, {l}, den};
      for (int node : node_order) k.vec.push_back(d.root(a).coroot[node - 1]);
      keys.push_back(std::move(k));
    }
  }
  auto cmp = [](const Key& x, const Key& y) {
    for (std::size_t i = 0; i < x.vec.size(); ++i) {
      auto lhs = x.vec[i] * y.den, rhs = y.vec[i] * x.den;
      if (lhs != rhs) return lhs < rhs;
    }
    return false;
  };
  std::sort(keys.begin(), keys.end(), cmp);
  for (std::size_t i = 1; i < keys.size(); ++i)
    check_internal(cmp(keys[i - 1], keys[i]), "lex hyperplane map is not injective");
  LambdaChain chain;
  chain.lambda = lambda;
  chain.node_order = node_order;
  chain.lex = true;
  for (auto& k : keys) chain.entries.push_back(k.entry);
  return chain;
}

std::string chain_defect(const RootDatum& d, const Weight& lambda, const std::vector<ChainEntry>& entries) {
  check_lambda(d, lambda);
  const int npos = d.num_positive_roots();
  std::vector<int> seen(npos, 0);
  std::size_t expected = 0;
  for (int a = 0; a < npos; ++a) expected += d.pairing(a, lambda);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string where = "entry " + std::to_string(i + 1) + ": ";
    if (e.root < 0 || e.root >= npos) return where + "not a positive root";
    if (e.level != seen[e.root])
      return where + "height " + std::to_string(e.level) + " breaks the counting rule (expected " +
             std::to_string(seen[e.root]) + ")";
    if (e.level >= d.pairing(e.root, lambda))
      return where + "hyperplane does not separate the fundamental alcove from its -lambda translate";
    ++seen[e.root];
  }
  if (entries.size() != expected)
    return "chain has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(expected);

  // Walk the alcoves with an interior point; each step must cross exactly the named wall.
  int top = 0;
  for (int a = 0; a < npos; ++a) top = std::max(top, d.pairing(a, d.rho()));
  const RationalWeight start = Rational(1, top + 1) * d.rho().to_rational();
  RationalWeight p = start;
  auto shi = shi_coordinates(d, p);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    p = d.affine_reflect(p, e.root, Rational(-e.level));
    auto next = shi_coordinates(d, p);
    for (int a = 0; a < npos; ++a) {
      const auto want = a == e.root ? std::int64_t{-e.level - 1} : shi[a];
      if (a == e.root && shi[a] != -e.level)
        return "entry " + std::to_string(i + 1) + ": the hyperplane is not a wall of the current alcove";
      if (next[a] != want)
        return "entry " + std::to_string(i + 1) + ": the step is not a crossing of adjacent alcoves";
    }
    shi = std::move(next);
  }
  if (shi != shi_coordinates(d, start - lambda.to_rational())) return "the alcove walk does not end at A_{-lambda}";
  return {};
}

LambdaChain user_chain(const RootDatum& d, const Weight& lambda, const std::vector<ChainEntry>& entries) {
  auto defect = chain_defect(d, lambda, entries);
  if (!defect.empty()) throw InvalidInput("not a lambda-chain: " + defect);
  LambdaChain chain;
  chain.lambda = lambda;
  chain.entries = entries;
  chain.lex = false;
  return chain;
}

int GraphSamples::maximum() const { return *std::max_element(values.begin(), values.end()); }

AlcoveModel::AlcoveModel(const WeylGroup& W, LambdaChain chain) : W_(&W), chain_(std::move(chain)) {
  check_lambda(W.datum(), chain_.lambda);
}

int AlcoveModel::pairing_with_lambda(int position) const {
  return W_->datum().pairing(chain_.entries[position].root, chain_.lambda);
}

int AlcoveModel::complementary_height(int position) const {
  return pairing_with_lambda(position) - chain_.entries[position].level;
}

std::optional<AdmissibleSubset> AlcoveModel::make_subset(std::vector<int> positions) const {
  AdmissibleSubset A;
  A.path.push_back(W_->identity());
  for (std::size_t h = 0; h < positions.size(); ++h) {
    const int j = positions[h];
    if (j < 0 || j >= static_cast<int>(chain_.size())) return std::nullopt;
    if (h > 0 && j <= positions[h - 1]) return std::nullopt;
    const int root = chain_.entries[j].root;
    auto kind = qb_edge_kind(*W_, A.path.back(), root);
    if (!kind) return std::nullopt;
    A.path.push_back(W_->multiply(A.path.back(), W_->reflection(root)));
    A.kinds.push_back(*kind);
  }
  A.positions = std::move(positions);
  return A;
}

AdmissibleSubset AlcoveModel::empty_subset() const { return *make_subset({}); }

std::vector<AdmissibleSubset> AlcoveModel::enumerate(int jobs, bool bruhat_only) const {
  const int m = static_cast<int>(chain_.size());
  // Task 0 emits the empty set; task t >= 1 emits the subtree of subsets whose
  // first position is t-1. Concatenating in task order gives depth-first order.
  std::vector<std::vector<AdmissibleSubset>> parts(m + 1);
  parallel_for(static_cast<std::size_t>(m) + 1, jobs, [&](std::size_t task) {
    auto& out = parts[task];
    AdmissibleSubset root = empty_subset();
    if (task == 0) {
      out.push_back(root);
      return;
    }
    const int first = static_cast<int>(task) - 1;
    auto dfs = [&](auto&& self, AdmissibleSubset& cur) -> void {
      out.push_back(cur);
      for (int j = cur.positions.back() + 1; j < m; ++j) {
        const int root_idx = chain_.entries[j].root;
        auto kind = qb_edge_kind(*W_, cur.end(), root_idx);
        if (!kind || (bruhat_only && *kind == EdgeKind::Quantum)) continue;
        cur.positions.push_back(j);
        cur.path.push_back(W_->multiply(cur.end(), W_->reflection(root_idx)));
        cur.kinds.push_back(*kind);
        self(self, cur);
        cur.positions.pop_back();
        cur.path.pop_back();
        cur.kinds.pop_back();
      }
    };
    const int root_idx = chain_.entries[first].root;
    auto kind = qb_edge_kind(*W_, W_->identity(), root_idx);
    if (!kind || (bruhat_only && *kind == EdgeKind::Quantum)) return;
    root.positions.push_back(first);
    root.path.push_back(W_->reflection(root_idx));
    root.kinds.push_back(*kind);
    dfs(dfs, root);
  });
  std::vector<AdmissibleSubset> all;
  for (auto& part : parts)
    for (auto& A : part) all.push_back(std::move(A));
  return all;
}

Weight AlcoveModel::weight(const std::vector<int>& positions) const {
  const auto& d = W_->datum();
  Weight mu = -chain_.lambda;
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
    const auto& e = chain_.entries.at(*it);
    mu = d.affine_reflect(mu, e.root, -e.level);
  }
  return -mu;
}

int AlcoveModel::height(const AdmissibleSubset& A) const {
  int h = 0;
  for (std::size_t k = 0; k < A.positions.size(); ++k)
    if (A.kinds[k] == EdgeKind::Quantum) h += complementary_height(A.positions[k]);
  return h;
}

FoldedChain AlcoveModel::fold(const AdmissibleSubset& A) const {
  // The folding z = r_{beta_{j_1},-l_{j_1}} ... acts as z(mu) = w mu + v.
  const auto& d = W_->datum();
  FoldedChain fc;
  WeylElement w = W_->identity();
  Weight v = d.zero_weight();
  std::size_t next = 0;
  for (int i = 0; i < static_cast<int>(chain_.size()); ++i) {
    const auto& e = chain_.entries[i];
    const SignedRoot g = W_->act(w, SignedRoot{e.root, 1});
    fc.gamma.push_back(g);
    fc.level.push_back(g.sign * (e.level - d.pairing(g, v)));
    if (next < A.positions.size() && A.positions[next] == i) {
      v -= e.level * d.root_weight(g);
      w = W_->multiply(w, W_->reflection(e.root));
      ++next;
      check_internal(w == A.path[next], "folding disagrees with the cached path");
    }
  }
  fc.gamma_infinity = W_->act(w, d.rho());
  fc.weight = W_->act(w, chain_.lambda) - v;
  check_internal(fc.weight == weight(A), "folded weight disagrees with the affine-reflection weight");
  return fc;
}

void AlcoveModel::check_node(int p) const {
  if (p < 0 || p > W_->rank()) throw InvalidInput("node " + std::to_string(p) + " is not in I_af");
}

void AlcoveModel::require_lex() const {
  if (!chain_.lex) throw InvalidInput("root operators are only defined here for lex lambda-chains");
}

WeylElement AlcoveModel::s(int p) const {
  check_node(p);
  return p == 0 ? W_->reflection(W_->datum().highest_root()) : W_->reflection(W_->datum().simple_root(p));
}

SignedRoot AlcoveModel::tilde_alpha(int p) const {
  check_node(p);
  return p == 0 ? SignedRoot{W_->datum().highest_root(), -1} : SignedRoot{W_->datum().simple_root(p), 1};
}

GraphSamples AlcoveModel::graph_samples(const AdmissibleSubset& A, int p) const {
  const auto& d = W_->datum();
  const SignedRoot alpha = tilde_alpha(p);
  const FoldedChain fc = fold(A);
  GraphSamples gs;
  std::vector<char> in_a(chain_.size(), 0);
  for (int j : A.positions) in_a[j] = 1;
  // Doubled values: g(0) = -1/2 and every half-unit step has slope +-1.
  int g2 = -1;
  for (int i = 0; i < static_cast<int>(chain_.size()); ++i) {
    if (fc.gamma[i].index != alpha.index) continue;
    gs.positions.push_back(i);
    g2 += fc.gamma[i].sign;
    check_internal(g2 % 2 == 0, "g_alpha is not integral at a fold point");
    check_internal(g2 / 2 == fc.level[i], "g_alpha disagrees with the folded height");
    gs.values.push_back(g2 / 2);
    g2 += (in_a[i] ? -1 : 1) * fc.gamma[i].sign;
  }
  const int s_inf = d.pairing(alpha.index, fc.gamma_infinity);
  check_internal(s_inf != 0, "gamma_infinity is not regular");
  g2 += s_inf > 0 ? 1 : -1;
  check_internal(g2 % 2 == 0, "g_alpha is not integral at the end");
  check_internal(g2 / 2 == d.pairing(alpha.index, fc.weight), "g_alpha end value disagrees with wt(A)");
  gs.values.push_back(g2 / 2);
  if (alpha.sign < 0)
    for (auto& x : gs.values) x = -x;
  return gs;
}

std::optional<AdmissibleSubset> AlcoveModel::f(const AdmissibleSubset& A, int p) const {
  require_lex();
  const auto gs = graph_samples(A, p);
  const int M = gs.maximum();
  const int delta = p == 0 ? 1 : 0;
  if (M <= delta) return std::nullopt;
  const int n = static_cast<int>(gs.positions.size());
  int k = 0;  // 0-based sample index of the first maximum
  while (gs.values[k] != M) ++k;
  check_internal(k >= 1, "f: maximum has no predecessor");
  auto has = [&](int pos) { return std::binary_search(A.positions.begin(), A.positions.end(), pos); };
  const int pred = gs.positions[k - 1];
  const bool m_infinite = k == n;
  check_internal(!has(pred), "f: predecessor is already a folding position");
  std::vector<int> next = A.positions;
  if (!m_infinite) {
    const int m = gs.positions[k];
    check_internal(has(m), "f: maximum position is not a folding position");
    next.erase(std::find(next.begin(), next.end(), m));
  }
  next.insert(std::upper_bound(next.begin(), next.end(), pred), pred);
  auto out = make_subset(next);
  check_internal(out.has_value(), "f: result is not admissible");

  // The QB path changes by left multiplication with s_p on one segment.
  const WeylElement sp = s(p);
  const int a = static_cast<int>(std::lower_bound(A.positions.begin(), A.positions.end(), pred) - A.positions.begin());
  const int b = m_infinite ? static_cast<int>(A.positions.size()) + 1
                           : static_cast<int>(std::find(A.positions.begin(), A.positions.end(), gs.positions[k]) -
                                              A.positions.begin()) + 1;
  for (int i = 0; i < static_cast<int>(out->path.size()); ++i) {
    WeylElement want = i <= a ? A.path[i] : (i <= b ? W_->multiply(sp, A.path[i - 1]) : A.path[i]);
    check_internal(out->path[i] == want, "f: path change is not a single s_p segment");
  }
  if (!m_infinite) check_internal(W_->multiply(sp, A.path[b - 1]) == A.path[b], "f: segment does not close up");
  check_internal(weight(*out) == weight(A) - W_->datum().root_weight(tilde_alpha(p)), "f: weight did not drop by alpha_p");
  return out;
}

std::optional<AdmissibleSubset> AlcoveModel::e(const AdmissibleSubset& A, int p) const {
  require_lex();
  const auto gs = graph_samples(A, p);
  const int M = gs.maximum();
  const int delta = p == 0 ? 1 : 0;
  const int n = static_cast<int>(gs.positions.size());
  if (!(M > gs.values[n] && M >= delta)) return std::nullopt;
  int k = n - 1;  // last maximum among the finite samples
  while (gs.values[k] != M) --k;
  auto has = [&](int pos) { return std::binary_search(A.positions.begin(), A.positions.end(), pos); };
  const int kpos = gs.positions[k];
  check_internal(has(kpos), "e: maximum position is not a folding position");
  std::vector<int> next = A.positions;
  next.erase(std::find(next.begin(), next.end(), kpos));
  if (k + 1 < n) {
    const int m = gs.positions[k + 1];
    check_internal(!has(m), "e: successor is already a folding position");
    next.insert(std::upper_bound(next.begin(), next.end(), m), m);
  }
  auto out = make_subset(next);
  check_internal(out.has_value(), "e: result is not admissible");
  check_internal(weight(*out) == weight(A) + W_->datum().root_weight(tilde_alpha(p)), "e: weight did not rise by alpha_p");
  return out;
}

int AlcoveModel::phi(const AdmissibleSubset& A, int p) const {
  require_lex();
  const auto gs = graph_samples(A, p);
  const int M = gs.maximum();
  const int delta = p == 0 ? 1 : 0;
  return M >= delta ? M - delta : 0;
}

int AlcoveModel::epsilon(const AdmissibleSubset& A, int p) const {
  require_lex();
  const auto gs = graph_samples(A, p);
  const int M = gs.maximum();
  const int delta = p == 0 ? 1 : 0;
  return M >= delta ? M - gs.values.back() : 0;
}

}  // namespace qalcove
