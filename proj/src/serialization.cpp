#include "qalcove/serialization.hpp"

#include "qalcove/errors.hpp"

namespace qalcove {

namespace {

Json word_json(const WeylGroup& W, WeylElement w) { return W.reduced_word(w); }

const char* kind_name(EdgeKind k) { return k == EdgeKind::Bruhat ? "bruhat" : "quantum"; }

}  // namespace

Json weight_json(const Weight& mu) { return mu.coords; }

Json chain_json(const RootDatum& d, const LambdaChain& chain) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& e = chain.entries[i];
    entries.push_back({{"position", i + 1},
                       {"root", d.root(e.root).root},
                       {"root_label", format_root(d, {e.root, 1})},
                       {"level", e.level},
                       {"pairing", d.pairing(e.root, chain.lambda)}});
  }
  return {{"type", d.name()},
          {"lambda", weight_json(chain.lambda)},
          {"lex", chain.lex},
          {"node_order", chain.node_order},
          {"length", chain.size()},
          {"entries", entries}};
}

std::vector<ChainEntry> chain_entries_from_json(const RootDatum& d, const nlohmann::json& j) {
  const auto& list = j.is_object() && j.contains("entries") ? j.at("entries") : j;
  if (!list.is_array()) throw InvalidInput("chain file must hold a JSON array of (root, level) entries");
  std::vector<ChainEntry> out;
  for (const auto& item : list) {
    std::vector<int> coords;
    int level = 0;
    try {
      if (item.is_array() && item.size() == 2) {
        coords = item[0].get<std::vector<int>>();
        level = item[1].get<int>();
      } else if (item.is_object()) {
        coords = item.at("root").get<std::vector<int>>();
        level = item.at("level").get<int>();
      } else {
        throw InvalidInput("chain entry " + item.dump() + " is not (root, level)");
      }
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidInput("chain entry " + item.dump() + ": " + ex.what());
    }
    if (static_cast<int>(coords.size()) != d.rank())
      throw InvalidInput("chain entry root " + item.dump() + " has the wrong number of coordinates");
    const int idx = d.find_root(coords);
    if (idx < 0) throw InvalidInput("chain entry " + item.dump() + " is not a positive root of " + d.name());
    out.push_back({idx, level});
  }
  return out;
}

Json subset_json(const AlcoveModel& model, const AdmissibleSubset& A) {
  Json positions = Json::array(), path = Json::array(), kinds = Json::array();
  for (int p : A.positions) positions.push_back(p + 1);
  for (WeylElement w : A.path) path.push_back(word_json(model.group(), w));
  for (auto k : A.kinds) kinds.push_back(kind_name(k));
  return {{"positions", positions},
          {"weight", weight_json(model.weight(A))},
          {"height", model.height(A)},
          {"path", path},
          {"edge_kinds", kinds}};
}

Json path_json(const QLSModel& model, const QLSPath& eta) {
  Json dirs = Json::array(), breaks = Json::array();
  for (WeylElement x : eta.directions) dirs.push_back(word_json(model.group(), x));
  for (const auto& b : eta.breaks) breaks.push_back(to_string(b));
  return {{"text", format_path(model.group(), eta)},
          {"directions", dirs},
          {"breaks", breaks},
          {"weight", weight_json(model.weight(eta))},
          {"deg", model.deg(eta)}};
}

Json crystal_json(const CrystalGraph& g) {
  Json vertices = Json::array(), arrows = Json::array();
  for (std::size_t v = 0; v < g.size(); ++v)
    vertices.push_back({{"id", v}, {"label", g.labels[v]}, {"weight", weight_json(g.weights[v])}});
  for (int j = 0; j <= g.rank; ++j)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.f[j][v] >= 0) arrows.push_back({{"from", v}, {"to", g.f[j][v]}, {"j", j}});
  return {{"size", g.size()}, {"highest", g.highest}, {"connected", g.connected()},
          {"vertices", vertices}, {"arrows", arrows}};
}

Json character_json(const GradedCharacter& chi) {
  Json terms = Json::array();
  for (const auto& [k, c] : chi.terms()) terms.push_back({{"weight", weight_json(k.first)}, {"q", k.second}, {"coeff", c}});
  return {{"terms", terms}};
}

Json decomposition_json(const std::map<std::pair<Weight, int>, long long>& dec) {
  Json terms = Json::array();
  for (const auto& [k, c] : dec) terms.push_back({{"highest_weight", weight_json(k.first)}, {"q", k.second}, {"mult", c}});
  return terms;
}

Json report_json(const Report& r) {
  return {{"name", r.name}, {"checked", r.checked}, {"ok", r.ok()}, {"violations", r.violations}};
}

Json px_json(const PXReport& r) {
  return {{"lambda", weight_json(r.lambda)},
          {"X", format_decomposition(r.decomposition)},
          {"decomposition", decomposition_json(r.decomposition)},
          {"checks",
           {{"alcove_equals_qls", r.alcove_equals_qls},
            {"bottom_layer_is_weyl", r.bottom_layer_is_weyl},
            {"weyl_invariant", r.weyl_invariant},
            {"factorizes_at_q_one", r.factorizes_at_q_one}}},
          {"character", character_json(r.alcove)["terms"]},
          {"ok", r.ok()},
          {"failures", r.failures}};
}

Json perfectness_json(const RootDatum& d, const PerfectnessReport& r) {
  Json minimal = Json::array();
  for (std::size_t k = 0; k < r.minimal.size(); ++k)
    minimal.push_back({{"label", r.labels[k]}, {"epsilon", r.epsilon_of_minimal[k]}, {"phi", r.phi_of_minimal[k]}});
  return {{"type", d.name()},
          {"node", r.node},
          {"node_root", d.is_long(d.simple_root(r.node)) ? "long" : "short"},
          {"level", r.level},
          {"c_r", to_string(r.c_r)},
          {"crystal_size", r.crystal_size},
          {"conditions",
           {{"tensor_square_connected", r.tensor_square_connected},
            {"unique_extremal_weight", r.unique_extremal_weight},
            {"extremal_weight", weight_json(r.extremal_weight)},
            {"levels_bounded_below", r.levels_bounded_below},
            {"min_epsilon_level", r.min_epsilon_level},
            {"epsilon_bijective", r.epsilon_bijective},
            {"phi_bijective", r.phi_bijective}}},
          {"dominant_weights", r.dominant_weights},
          {"minimal_elements", minimal},
          {"perfect", r.perfect},
          {"predicted_perfect", r.predicted_perfect}};
}

Json qbg_json(const QuantumBruhatGraph& g) {
  const auto& W = g.group();
  Json vertices = Json::array(), edges = Json::array();
  for (WeylElement w : g.vertices()) {
    vertices.push_back(word_json(W, w));
    for (const auto& e : g.out_edges(w))
      edges.push_back({{"from", word_json(W, e.source)},
                       {"to", word_json(W, e.target)},
                       {"label", format_root(W.datum(), {e.label, 1})},
                       {"kind", kind_name(e.kind)}});
  }
  return {{"parabolic", g.parabolic().nodes(W.rank())}, {"vertices", vertices}, {"edges", edges}};
}

Json roots_json(const RootDatum& d) {
  Json roots = Json::array();
  for (int a = 0; a < d.num_positive_roots(); ++a)
    roots.push_back({{"root", d.root(a).root},
                     {"label", format_root(d, {a, 1})},
                     {"coroot", d.root(a).coroot},
                     {"height", d.root(a).height},
                     {"long", d.is_long(a)}});
  Json cr = Json::array();
  for (int i = 1; i <= d.rank(); ++i) cr.push_back(to_string(d.c_r(i)));
  return {{"type", d.name()},
          {"cartan", d.cartan()},
          {"positive_roots", roots},
          {"highest_root", d.root(d.highest_root()).root},
          {"marks", d.marks()},
          {"comarks", d.comarks()},
          {"omega", d.omega()},
          {"c_r", cr}};
}

}  // namespace qalcove
