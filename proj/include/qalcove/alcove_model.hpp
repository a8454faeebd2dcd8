#pragma once

// lambda-chains and the quantum alcove model: admissible subsets, their
// weights and heights, folded chains, and the combinatorial root operators.
//
// Chain positions are 0-based internally; the serializers print them 1-based.

#include <optional>
#include <string>
#include <vector>

#include "qalcove/quantum_bruhat.hpp"
#include "qalcove/weyl_group.hpp"

namespace qalcove {

/// The lambda-hyperplane H_{beta,-l}.
struct ChainEntry {
  int root = 0;   ///< positive root index of beta
  int level = 0;  ///< l
  bool operator==(const ChainEntry&) const = default;
};

struct LambdaChain {
  Weight lambda;
  std::vector<ChainEntry> entries;
  std::vector<int> node_order;  ///< the total order on I used for a lex chain
  bool lex = false;

  std::size_t size() const { return entries.size(); }
};

/// The lex lambda-chain for a total order on the nodes (default 1 < 2 < ... < r).
LambdaChain lex_chain(const RootDatum& datum, const Weight& lambda, std::vector<int> node_order = {});

/// Accepts an arbitrary user chain after checking that it is a lambda-chain:
/// the heights follow the counting rule l_i = #{j < i : beta_j = beta_i} and
/// the hyperplane sequence is a reduced alcove path from the fundamental
/// alcove to its translate by -lambda. Throws InvalidInput otherwise.
LambdaChain user_chain(const RootDatum& datum, const Weight& lambda, const std::vector<ChainEntry>& entries);

/// Reason the entries fail to form a lambda-chain, or empty when they do.
std::string chain_defect(const RootDatum& datum, const Weight& lambda, const std::vector<ChainEntry>& entries);

struct AdmissibleSubset {
  std::vector<int> positions;     ///< j_1 < ... < j_s
  std::vector<WeylElement> path;  ///< w_0 = e, ..., w_s
  std::vector<EdgeKind> kinds;    ///< kind of w_{h-1} -> w_h

  bool operator==(const AdmissibleSubset& o) const { return positions == o.positions; }
  bool operator<(const AdmissibleSubset& o) const { return positions < o.positions; }
  WeylElement end() const { return path.back(); }
};

struct FoldedChain {
  std::vector<SignedRoot> gamma;  ///< gamma_i
  std::vector<int> level;         ///< l_i^A
  Weight gamma_infinity;          ///< w_s(rho)
  Weight weight;                  ///< wt(A), recomputed from the folding
};

/// Samples of the piecewise-linear graph g_alpha at k - 1/2 for k = 1..n+1,
/// together with the chain positions I_alpha = {i_1 < ... < i_n}.
struct GraphSamples {
  std::vector<int> positions;
  std::vector<int> values;  ///< size n+1; the last one is g(n + 1/2)
  int maximum() const;
};

class AlcoveModel {
 public:
  AlcoveModel(const WeylGroup& W, LambdaChain chain);

  const WeylGroup& group() const { return *W_; }
  const LambdaChain& chain() const { return chain_; }
  const Weight& lambda() const { return chain_.lambda; }
  int pairing_with_lambda(int position) const;  ///< <beta_i^vee, lambda>
  int complementary_height(int position) const;  ///< <beta_i^vee, lambda> - l_i

  /// Builds the subset and its QB(W) path; nullopt if not admissible.
  std::optional<AdmissibleSubset> make_subset(std::vector<int> positions) const;
  AdmissibleSubset empty_subset() const;

  /// All admissible subsets in depth-first (lexicographic) order. With jobs > 1
  /// the enumeration is split by first position across threads.
  std::vector<AdmissibleSubset> enumerate(int jobs = 1, bool bruhat_only = false) const;

  /// wt(A) from the affine reflections; positions need not be admissible.
  Weight weight(const std::vector<int>& positions) const;
  Weight weight(const AdmissibleSubset& A) const { return weight(A.positions); }
  int height(const AdmissibleSubset& A) const;
  FoldedChain fold(const AdmissibleSubset& A) const;
  GraphSamples graph_samples(const AdmissibleSubset& A, int p) const;

  /// Root operators for p in I_af = {0..r}; defined only for lex chains.
  std::optional<AdmissibleSubset> f(const AdmissibleSubset& A, int p) const;
  std::optional<AdmissibleSubset> e(const AdmissibleSubset& A, int p) const;
  int phi(const AdmissibleSubset& A, int p) const;
  int epsilon(const AdmissibleSubset& A, int p) const;

  /// s_p as a Weyl element (r_theta for p = 0) and tilde-alpha_p as a signed root.
  WeylElement s(int p) const;
  SignedRoot tilde_alpha(int p) const;

 private:
  void require_lex() const;
  void check_node(int p) const;

  const WeylGroup* W_;
  LambdaChain chain_;
};

}  // namespace qalcove
