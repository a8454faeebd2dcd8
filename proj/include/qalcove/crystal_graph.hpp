#pragma once

// Finite affine crystals as explicit graphs: vertices carry weights, arrows
// f_j / e_j are indexed by j in I_af = {0..r}. Used for QLS crystals and
// their tensor products.

#include <string>
#include <vector>

#include "qalcove/lie_data.hpp"
#include "qalcove/qls_model.hpp"

namespace qalcove {

struct CrystalGraph {
  int rank = 0;                      ///< classical rank r; colours are 0..r
  std::vector<Weight> weights;       ///< classical weight of each vertex
  std::vector<std::string> labels;
  std::vector<std::vector<int>> f;   ///< f[j][v], or -1
  std::vector<std::vector<int>> e;   ///< e[j][v], or -1
  int highest = 0;                   ///< distinguished element

  std::size_t size() const { return weights.size(); }
  int epsilon(int v, int j) const;
  int phi(int v, int j) const;
  /// Weakly connected through arrows of all colours.
  bool connected() const;
  std::size_t num_arrows() const;
};

/// The crystal graph of QLS(lambda); `paths` receives vertex v's path.
CrystalGraph crystal_from_qls(const QLSModel& model, std::vector<QLSPath>* paths = nullptr);

/// a (x) b under the Kashiwara convention:
///   f_j(b1 (x) b2) = b1 (x) f_j b2 if eps_j(b2) >= phi_j(b1), else f_j b1 (x) b2.
/// Vertex (i, k) has index i * b.size() + k.
CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b);
/// Left-nested tensor product; the empty product is the trivial crystal.
CrystalGraph tensor(const std::vector<const CrystalGraph*>& factors, int rank);

/// Checks e_j f_j = id, f_j e_j = id, wt(f_j b) = wt(b) - alpha~_j and
/// phi_j - eps_j = <alpha~_j^vee, wt>. Returns the failures (empty if none).
std::vector<std::string> check_axioms(const RootDatum& datum, const CrystalGraph& g);

std::string to_dot(const CrystalGraph& g);

}  // namespace qalcove
