#pragma once

// Graded characters sum q^n x^mu, the Weyl character oracle (Freudenthal),
// decomposition into irreducible characters, and the P = X verdict.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qalcove/alcove_model.hpp"
#include "qalcove/correspondence.hpp"
#include "qalcove/qls_model.hpp"

namespace qalcove {

/// (weight, q-exponent) -> coefficient; zero coefficients are never stored.
class GradedCharacter {
 public:
  using Key = std::pair<Weight, int>;

  void add(const Weight& mu, int q, long long coeff = 1);
  long long coefficient(const Weight& mu, int q) const;
  const std::map<Key, long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  GradedCharacter& operator+=(const GradedCharacter& o);
  friend GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b);
  bool operator==(const GradedCharacter&) const = default;

  /// The coefficient of q^n, as a q-free character.
  GradedCharacter layer(int n) const;
  /// Specialization q = 1.
  GradedCharacter at_q_one() const;
  std::vector<int> exponents() const;

 private:
  std::map<Key, long long> terms_;
};

/// sum_A q^height(A) x^wt(A) over the admissible subsets of any lambda-chain.
GradedCharacter character_from_alcove(const AlcoveModel& model, int jobs = 1);
GradedCharacter character_from_alcove(const AlcoveModel& model, const std::vector<AdmissibleSubset>& subsets);
/// sum_eta q^(-Deg eta) x^wt(eta).
GradedCharacter character_from_qls(const QLSModel& model);
/// Character of the irreducible module V(lambda) by Freudenthal's formula.
GradedCharacter weyl_character(const RootDatum& datum, const Weight& lambda);

/// Multiplicities of q^n chi_mu: (mu, n) -> coefficient.
std::map<std::pair<Weight, int>, long long> decompose(const RootDatum& datum, const GradedCharacter& chi);

struct PXReport {
  Weight lambda;
  GradedCharacter alcove;
  GradedCharacter qls;
  std::map<std::pair<Weight, int>, long long> decomposition;
  bool alcove_equals_qls = false;
  bool bottom_layer_is_weyl = false;
  bool weyl_invariant = false;
  bool factorizes_at_q_one = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

PXReport verify_p_equals_x(const WeylGroup& W, const Weight& lambda, int jobs = 1);

/// "chi_{2ϖ1} + qchi_0" written with Greek letters: "χ_{2ϖ1} + qχ_0".
std::string format_decomposition(const std::map<std::pair<Weight, int>, long long>& dec);
/// Sorted monomials, one per line: "q^1 x^{0}  1".
std::string format_character(const GradedCharacter& chi);

}  // namespace qalcove
