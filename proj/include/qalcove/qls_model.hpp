#pragma once

// Quantum Lakshmibai-Seshadri paths of shape lambda: validation, evaluation,
// root operators, the degree function and the Lusztig involution.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qalcove/quantum_bruhat.hpp"
#include "qalcove/report.hpp"
#include "qalcove/weyl_group.hpp"

namespace qalcove {

/// (x_1, ..., x_s; b_0 = 0, b_1, ..., b_s = 1). Directions are elements of W^J.
struct QLSPath {
  std::vector<WeylElement> directions;
  std::vector<Rational> breaks;

  bool operator==(const QLSPath&) const = default;
  bool operator<(const QLSPath& o) const {
    if (directions != o.directions) return directions < o.directions;
    return breaks < o.breaks;
  }
};

class QLSModel {
 public:
  QLSModel(const WeylGroup& W, Weight lambda);
  QLSModel(const QLSModel&) = delete;
  QLSModel& operator=(const QLSModel&) = delete;

  const WeylGroup& group() const { return *W_; }
  const Weight& lambda() const { return lambda_; }
  NodeSet parabolic() const { return J_; }
  const QuantumBruhatGraph& graph() const { return *graph_; }
  const PathWeights& path_weights() const { return *weights_; }
  /// wt_lambda(x => y).
  int path_weight(WeylElement x, WeylElement y) const { return weights_->weight(x, y, lambda_); }

  /// Why the data fails to be a QLS path of shape lambda, or empty if it is one.
  std::string defect(const QLSPath& eta) const;
  /// Throws InvalidInput naming the first failing condition.
  QLSPath validate(std::vector<WeylElement> directions, std::vector<Rational> breaks) const;
  bool is_valid(const QLSPath& eta) const { return defect(eta).empty(); }

  QLSPath straight(WeylElement x) const;  ///< eta_x = (x; 0, 1)
  QLSPath highest() const { return straight(W_->identity()); }

  Weight direction_weight(WeylElement x) const { return W_->act(x, lambda_); }
  RationalWeight evaluate(const QLSPath& eta, const Rational& t) const;
  Weight weight(const QLSPath& eta) const;
  /// iota(eta) = x_1 lambda.
  Weight initial_direction(const QLSPath& eta) const { return direction_weight(eta.directions.front()); }

  std::optional<QLSPath> e(const QLSPath& eta, int j) const;
  std::optional<QLSPath> f(const QLSPath& eta, int j) const;
  int epsilon(const QLSPath& eta, int j) const;
  int phi(const QLSPath& eta, int j) const;

  /// Deg(eta) = -sum_k (1 - b_k) wt_lambda(x_{k+1} => x_k).
  int deg(const QLSPath& eta) const;
  /// -sum_k b_k wt_lambda(x_{k+1} => x_k), which equals Deg(S(eta)).
  int deg_tail(const QLSPath& eta) const;

  /// The dual path and omega(eta) live in QLS(omega(lambda)); S(eta) in QLS(lambda).
  QLSPath dual(const QLSPath& eta) const;
  QLSPath omega(const QLSPath& eta) const;
  QLSPath lusztig(const QLSPath& eta) const;

  /// QLS(lambda) as the closure of eta_lambda under all e_j, f_j (breadth-first order).
  std::vector<QLSPath> enumerate() const;
  /// Independent enumeration: every direction sequence with candidate breaks
  /// a/d, d ranging over the values <alpha^vee, lambda>, checked by validate.
  std::vector<QLSPath> enumerate_bruteforce() const;

  /// s_j for j in I_af (r_theta for j = 0) and <tilde-alpha_j^vee, mu>.
  WeylElement s(int j) const;
  int tilde_pairing(int j, const Weight& mu) const;
  Weight tilde_alpha_weight(int j) const;

 private:
  struct Piece {
    WeylElement direction;
    Rational from, to;
  };
  std::vector<Rational> heights(const QLSPath& eta, int j) const;
  QLSPath reflect_interval(const QLSPath& eta, const Rational& t0, const Rational& t1, int j) const;
  void check_node(int j) const;

  const WeylGroup* W_;
  Weight lambda_;
  NodeSet J_;
  std::unique_ptr<QuantumBruhatGraph> graph_;
  std::unique_ptr<PathWeights> weights_;
  std::unique_ptr<RestrictedReachability> reach_;
};

std::string format_path(const WeylGroup& W, const QLSPath& eta);  // "(s1, e; 0, 1/2, 1)"
/// Parses "s1s2, e; 0, 1/2, 1" (reduced words or "e", then the break points).
QLSPath parse_path(const WeylGroup& W, const std::string& text);

/// Over every e_j arrow of QLS(lambda): Deg is unchanged for j != 0; for j = 0
/// it drops by 1 if the initial direction is unchanged, and by
/// <alpha~_0^vee, iota(eta)> + 1 otherwise.
Report verify_degree_recursion(const QLSModel& model, const std::vector<QLSPath>& paths);
/// S(e_j eta) = f_{omega(j)} S(eta), S^2 = id, wt(S eta) = w_o wt(eta),
/// and Deg(S eta) agrees with the tail formula.
Report verify_lusztig(const QLSModel& model, const std::vector<QLSPath>& paths);

}  // namespace qalcove
