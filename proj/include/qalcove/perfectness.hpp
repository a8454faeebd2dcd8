#pragma once

// Perfectness of the level-zero fundamental crystal QLS(varpi_r) (the model
// of B^{r,1}): conditions (2)-(5) of the definition of a perfect crystal,
// each with a witness, and the c_r prediction.

#include <string>
#include <vector>

#include "qalcove/crystal_graph.hpp"
#include "qalcove/weyl_group.hpp"

namespace qalcove {

/// Affine dominant weight sum_j c_j Lambda_j, indexed by j in I_af.
using AffineWeight = std::vector<int>;

struct PerfectnessReport {
  int node = 0;
  int level = 1;
  std::size_t crystal_size = 0;
  Rational c_r;
  bool tensor_square_connected = false;      // (2)
  bool unique_extremal_weight = false;       // (3)
  Weight extremal_weight;
  bool levels_bounded_below = false;         // (4)
  int min_epsilon_level = 0;
  bool epsilon_bijective = false;            // (5)
  bool phi_bijective = false;
  std::vector<AffineWeight> dominant_weights;  ///< all of level ell
  std::vector<int> minimal;                    ///< B_min as vertex ids
  std::vector<AffineWeight> epsilon_of_minimal;
  std::vector<AffineWeight> phi_of_minimal;
  std::vector<std::string> labels;             ///< labels of B_min
  bool perfect = false;
  bool predicted_perfect = false;

  bool agrees_with_prediction() const { return perfect == predicted_perfect; }
};

AffineWeight epsilon_weight(const CrystalGraph& g, int v);
AffineWeight phi_weight(const CrystalGraph& g, int v);
int affine_level(const RootDatum& datum, const AffineWeight& w);

/// B_min = {b : lev(eps(b)) = ell}.
std::vector<int> minimal_elements(const RootDatum& datum, const CrystalGraph& g, int level);
/// All (c_0, ..., c_r) >= 0 with sum a_j^vee c_j = ell, in lexicographic order.
std::vector<AffineWeight> dominant_weights_of_level(const RootDatum& datum, int level);

PerfectnessReport check_perfect(const WeylGroup& W, int node, int level = 1);

}  // namespace qalcove
