#include "qalcove/perfectness.hpp"

#include <algorithm>
#include <map>

#include "qalcove/errors.hpp"

namespace qalcove {

AffineWeight epsilon_weight(const CrystalGraph& g, int v) {
  AffineWeight w(g.rank + 1);
  for (int j = 0; j <= g.rank; ++j) w[j] = g.epsilon(v, j);
  return w;
}

AffineWeight phi_weight(const CrystalGraph& g, int v) {
  AffineWeight w(g.rank + 1);
  for (int j = 0; j <= g.rank; ++j) w[j] = g.phi(v, j);
  return w;
}

int affine_level(const RootDatum& d, const AffineWeight& w) { return d.level(w); }

std::vector<int> minimal_elements(const RootDatum& d, const CrystalGraph& g, int level) {
  std::vector<int> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (affine_level(d, epsilon_weight(g, static_cast<int>(v))) == level) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<AffineWeight> dominant_weights_of_level(const RootDatum& d, int level) {
  std::vector<AffineWeight> out;
  const auto& a = d.comarks();
  AffineWeight cur(a.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int left) -> void {
    if (j == a.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int c = 0; c * a[j] <= left; ++c) {
      cur[j] = c;
      self(self, j + 1, left - c * a[j]);
    }
    cur[j] = 0;
  };
  if (level >= 0) rec(rec, 0, level);
  return out;
}

namespace {

bool is_bijection(std::vector<AffineWeight> image, const std::vector<AffineWeight>& target) {
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  return image == target;  // target is already sorted and duplicate-free
}

}  // namespace

PerfectnessReport check_perfect(const WeylGroup& W, int node, int level) {
  const auto& d = W.datum();
  if (node < 1 || node > d.rank())
    throw InvalidInput("node " + std::to_string(node) + " is not a node of " + d.name());
  if (level < 1) throw InvalidInput("level must be positive");
  PerfectnessReport rep;
  rep.node = node;
  rep.level = level;
  rep.c_r = d.c_r(node);
  rep.predicted_perfect = rep.c_r == 1 && level == 1;

  QLSModel model(W, d.fundamental_weight(node));
  const CrystalGraph B = crystal_from_qls(model);
  rep.crystal_size = B.size();
  if (!check_axioms(d, B).empty()) throw InternalError("crystal axioms fail for QLS(" + format_weight(model.lambda()) + ")");

  rep.tensor_square_connected = tensor(B, B).connected();

  // (3): a weight dominating every vertex weight, carried by exactly one vertex.
  for (std::size_t v = 0; v < B.size(); ++v) {
    bool top = true;
    for (const auto& mu : B.weights)
      if (!d.dominates(B.weights[v], mu)) {
        top = false;
        break;
      }
    if (top) {
      rep.extremal_weight = B.weights[v];
      rep.unique_extremal_weight =
          std::count(B.weights.begin(), B.weights.end(), B.weights[v]) == 1;
      break;
    }
  }

  rep.min_epsilon_level = -1;
  for (std::size_t v = 0; v < B.size(); ++v) {
    const int lv = affine_level(d, epsilon_weight(B, static_cast<int>(v)));
    if (rep.min_epsilon_level < 0 || lv < rep.min_epsilon_level) rep.min_epsilon_level = lv;
  }
  rep.levels_bounded_below = rep.min_epsilon_level >= level;

  rep.dominant_weights = dominant_weights_of_level(d, level);
  rep.minimal = minimal_elements(d, B, level);
  for (int v : rep.minimal) {
    rep.epsilon_of_minimal.push_back(epsilon_weight(B, v));
    rep.phi_of_minimal.push_back(phi_weight(B, v));
    rep.labels.push_back(B.labels[v]);
  }
  rep.epsilon_bijective = is_bijection(rep.epsilon_of_minimal, rep.dominant_weights);
  rep.phi_bijective = is_bijection(rep.phi_of_minimal, rep.dominant_weights);

  rep.perfect = rep.tensor_square_connected && rep.unique_extremal_weight && rep.levels_bounded_below &&
                rep.epsilon_bijective && rep.phi_bijective;
  return rep;
}

}  // namespace qalcove
