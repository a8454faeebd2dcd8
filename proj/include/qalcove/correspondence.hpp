#pragma once

// The forgetful map from admissible subsets (lex chain) to QLS paths, its
// inverse, and exhaustive checks of the bijection, the intertwining of root
// operators, the energy/degree translation, and the isomorphism of QLS(lambda)
// with a tensor product of fundamental QLS crystals.

#include <memory>
#include <string>
#include <vector>

#include "qalcove/alcove_model.hpp"
#include "qalcove/crystal_graph.hpp"
#include "qalcove/qls_model.hpp"
#include "qalcove/report.hpp"

namespace qalcove {

struct CorrespondenceRecord {
  AdmissibleSubset subset;
  std::vector<Rational> breaks;          ///< 0 = b_0 < b_1 < ... < b_p
  std::vector<WeylElement> prefix;       ///< w_0, ..., w_p in W
  QLSPath pi;                            ///< in QLS(-w_o lambda)
  QLSPath pi_star;                       ///< in QLS(lambda)
};

class Correspondence {
 public:
  Correspondence(const WeylGroup& W, const Weight& lambda, std::vector<int> node_order = {});

  const WeylGroup& group() const { return *W_; }
  const AlcoveModel& alcove() const { return alcove_; }
  const QLSModel& qls() const { return *qls_; }         ///< shape lambda
  const QLSModel& dual_qls() const { return *dual_; }   ///< shape -w_o lambda
  const ReflectionOrder& order() const { return *order_; }

  /// Relative heights t = l / <beta^vee, lambda>; the group t = 0 folds into
  /// the initial direction w_0.
  CorrespondenceRecord forgetful(const AdmissibleSubset& A) const;
  /// Inverse on QLS(-w_o lambda): sigma_i = floor(sigma'_i w_o), w_i the tilted
  /// minimum of sigma_i W_J from w_{i-1}, labels placed at level b_i <beta^vee, lambda>.
  AdmissibleSubset inverse(const QLSPath& eta) const;

  const std::vector<AdmissibleSubset>& subsets(int jobs = 1) const;

  Report verify_bijection(int jobs = 1) const;
  Report verify_intertwining(int jobs = 1) const;
  Report verify_energy(int jobs = 1) const;

 private:
  const WeylGroup* W_;
  Weight lambda_;
  AlcoveModel alcove_;
  std::unique_ptr<QLSModel> qls_;
  std::unique_ptr<QLSModel> dual_;
  std::unique_ptr<ReflectionOrder> order_;
  mutable std::unique_ptr<std::vector<AdmissibleSubset>> subsets_;
};

struct TensorIsomorphism {
  std::vector<int> factors;  ///< nodes i_1 <= ... <= i_p with lambda = sum of varpi_{i_k}
  CrystalGraph source;       ///< QLS(lambda)
  CrystalGraph target;       ///< QLS(varpi_{i_1}) (x) ... (x) QLS(varpi_{i_p})
  std::vector<int> map;      ///< source vertex -> target vertex
  Report report;
};

/// Anchored at eta_lambda -> eta_{varpi_{i_1}} (x) ... and propagated along
/// f_j and e_j arrows; totality, bijectivity, weights and all arrows checked.
TensorIsomorphism build_isomorphism_to_tensor(const WeylGroup& W, const Weight& lambda);

}  // namespace qalcove
