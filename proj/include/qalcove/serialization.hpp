#pragma once

// JSON encodings of every exported object. Keys and array orders are fixed so
// identical inputs serialize byte-identically.

#include <json.hpp>

#include "qalcove/alcove_model.hpp"
#include "qalcove/characters.hpp"
#include "qalcove/correspondence.hpp"
#include "qalcove/crystal_graph.hpp"
#include "qalcove/perfectness.hpp"
#include "qalcove/qls_model.hpp"
#include "qalcove/quantum_bruhat.hpp"

namespace qalcove {

using Json = nlohmann::ordered_json;

Json weight_json(const Weight& mu);
Json chain_json(const RootDatum& datum, const LambdaChain& chain);
/// Accepts [{"root": [coords], "level": l}, ...] or [[[coords], l], ...].
std::vector<ChainEntry> chain_entries_from_json(const RootDatum& datum, const nlohmann::json& j);
Json subset_json(const AlcoveModel& model, const AdmissibleSubset& A);
Json path_json(const QLSModel& model, const QLSPath& eta);
Json crystal_json(const CrystalGraph& g);
Json character_json(const GradedCharacter& chi);
Json decomposition_json(const std::map<std::pair<Weight, int>, long long>& dec);
Json report_json(const Report& r);
Json px_json(const PXReport& r);
Json perfectness_json(const RootDatum& datum, const PerfectnessReport& r);
Json qbg_json(const QuantumBruhatGraph& g);
Json roots_json(const RootDatum& datum);

}  // namespace qalcove
