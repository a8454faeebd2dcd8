#include "qalcove/correspondence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "qalcove/errors.hpp"
#include "qalcove/parallel.hpp"

namespace qalcove {

namespace {

std::vector<int> zero_level_roots(const LambdaChain& chain) {
  std::vector<int> out;
  for (const auto& entry : chain.entries)
    if (entry.level == 0) out.push_back(entry.root);
  return out;
}

// Runs check(k, violations) over [0, n) and concatenates the findings in order.
template <class Check>
void collect(Report& report, std::size_t n, int jobs, Check check) {
  std::vector<std::vector<std::string>> found(n);
  parallel_for(n, jobs, [&](std::size_t k) { check(k, found[k]); });
  for (auto& v : found)
    for (auto& s : v) report.violations.push_back(std::move(s));
}

std::string positions_string(const AdmissibleSubset& A) {
  std::string s = "{";
  for (std::size_t h = 0; h < A.positions.size(); ++h) s += (h ? "," : "") + std::to_string(A.positions[h] + 1);
  return s + "}";
}

}  // namespace

Correspondence::Correspondence(const WeylGroup& W, const Weight& lambda, std::vector<int> node_order)
    : W_(&W),
      lambda_(lambda),
      alcove_(W, lex_chain(W.datum(), lambda, std::move(node_order))) {
  qls_ = std::make_unique<QLSModel>(W, lambda_);
  dual_ = std::make_unique<QLSModel>(W, W.datum().apply_omega(lambda_));
  order_ = std::make_unique<ReflectionOrder>(W, qls_->parabolic(), zero_level_roots(alcove_.chain()));
}

const std::vector<AdmissibleSubset>& Correspondence::subsets(int jobs) const {
  if (!subsets_) subsets_ = std::make_unique<std::vector<AdmissibleSubset>>(alcove_.enumerate(jobs));
  return *subsets_;
}

CorrespondenceRecord Correspondence::forgetful(const AdmissibleSubset& A) const {
  const auto& chain = alcove_.chain();
  CorrespondenceRecord rec;
  rec.subset = A;
  std::vector<Rational> t;
  for (int pos : A.positions) {
    t.emplace_back(chain.entries[pos].level, alcove_.pairing_with_lambda(pos));
    check_internal(t.size() < 2 || t[t.size() - 2] <= t.back(), "relative heights are not monotone along the chain");
  }
  rec.breaks.push_back(Rational(0));
  for (const auto& x : t)
    if (x > rec.breaks.back()) rec.breaks.push_back(x);
  // w_k is the prefix product over all positions with t <= b_k.
  std::size_t count = 0;
  for (const auto& b : rec.breaks) {
    while (count < t.size() && t[count] <= b) ++count;
    rec.prefix.push_back(A.path[count]);
  }
  const NodeSet oj = dual_->parabolic();
  std::vector<WeylElement> dirs;
  for (WeylElement w : rec.prefix) dirs.push_back(W_->min_coset_rep(W_->multiply(w, W_->longest()), oj));
  std::vector<Rational> breaks = rec.breaks;
  breaks.push_back(Rational(1));
  rec.pi = QLSPath{dirs, breaks};
  const auto why = dual_->defect(rec.pi);
  check_internal(why.empty(), "forgetful image of " + positions_string(A) + " is not a QLS path: " + why);
  rec.pi_star = dual_->dual(rec.pi);
  check_internal(qls_->is_valid(rec.pi_star), "dual of the forgetful image is not a QLS path");
  return rec;
}

AdmissibleSubset Correspondence::inverse(const QLSPath& eta) const {
  const auto why = dual_->defect(eta);
  if (!why.empty()) throw InvalidInput("not a QLS path of shape " + format_weight(dual_->lambda()) + ": " + why);
  const auto& d = W_->datum();
  const auto& chain = alcove_.chain();
  std::map<std::pair<int, int>, int> where;
  for (std::size_t pos = 0; pos < chain.size(); ++pos)
    where.emplace(std::pair{chain.entries[pos].root, chain.entries[pos].level}, static_cast<int>(pos));
  const NodeSet J = qls_->parabolic();
  WeylElement prev = W_->identity();
  std::vector<int> positions;
  for (std::size_t i = 0; i < eta.directions.size(); ++i) {
    const WeylElement sigma = W_->min_coset_rep(W_->multiply(eta.directions[i], W_->longest()), J);
    const Rational& b = eta.breaks[i];
    const QBPath path = tilted_minimum_path(*W_, *order_, J, prev, sigma);
    for (int label : path.labels) {
      const Rational level = b * d.pairing(label, lambda_);
      check_internal(is_integer(level), "inverse: label at a non-integral level");
      auto it = where.find({label, static_cast<int>(level.numerator())});
      check_internal(it != where.end(), "inverse: no chain entry for a path label");
      check_internal(positions.empty() || positions.back() < it->second, "inverse: positions not increasing");
      positions.push_back(it->second);
    }
    prev = path.vertices.back();
  }
  auto A = alcove_.make_subset(positions);
  check_internal(A.has_value(), "inverse: positions are not admissible");
  check_internal(A->end() == prev, "inverse: path endpoint mismatch");
  return *A;
}

Report Correspondence::verify_bijection(int jobs) const {
  Report report{"bijection", 0, {}};
  const auto& all = subsets(jobs);
  const auto paths = dual_->enumerate();
  if (all.size() != paths.size())
    report.violations.push_back("|A(lambda)| = " + std::to_string(all.size()) + " but |QLS(-w_o lambda)| = " +
                                std::to_string(paths.size()));
  collect(report, all.size(), jobs, [&](std::size_t k, std::vector<std::string>& bad) {
    const auto& A = all[k];
    try {
      const auto rec = forgetful(A);
      if (qls_->weight(rec.pi_star) != alcove_.weight(A))
        bad.push_back(positions_string(A) + ": wt(Pi*(A)) != wt(A)");
      if (inverse(rec.pi) != A) bad.push_back(positions_string(A) + ": inverse(Pi(A)) != A");
    } catch (const std::exception& ex) {
      bad.push_back(positions_string(A) + ": " + ex.what());
    }
  });
  collect(report, paths.size(), jobs, [&](std::size_t k, std::vector<std::string>& bad) {
    try {
      if (forgetful(inverse(paths[k])).pi != paths[k])
        bad.push_back(format_path(*W_, paths[k]) + ": Pi(inverse(eta)) != eta");
    } catch (const std::exception& ex) {
      bad.push_back(format_path(*W_, paths[k]) + ": " + ex.what());
    }
  });
  report.checked = all.size() + paths.size();
  return report;
}

Report Correspondence::verify_intertwining(int jobs) const {
  Report report{"intertwining", 0, {}};
  const auto& all = subsets(jobs);
  const int r = W_->rank();
  collect(report, all.size(), jobs, [&](std::size_t k, std::vector<std::string>& bad) {
    const auto& A = all[k];
    try {
      const auto pi = forgetful(A).pi;
      for (int p = 0; p <= r; ++p) {
        const auto fA = alcove_.f(A, p);
        const int eps = dual_->epsilon(pi, p);
        const std::string at = positions_string(A) + ", p=" + std::to_string(p);
        if (fA.has_value() != (eps > (p == 0 ? 1 : 0))) {
          bad.push_back(at + ": f_p defined = " + (fA ? "yes" : "no") + " but eps_p(Pi(A)) = " + std::to_string(eps));
          continue;
        }
        if (fA && dual_->e(pi, p) != forgetful(*fA).pi) bad.push_back(at + ": e_p(Pi(A)) != Pi(f_p(A))");
      }
    } catch (const std::exception& ex) {
      bad.push_back(positions_string(A) + ": " + ex.what());
    }
  });
  report.checked = all.size() * static_cast<std::size_t>(r + 1);
  return report;
}

Report Correspondence::verify_energy(int jobs) const {
  Report report{"energy", 0, {}};
  const auto& all = subsets(jobs);
  const NodeSet J = qls_->parabolic();
  collect(report, all.size(), jobs, [&](std::size_t k, std::vector<std::string>& bad) {
    const auto& A = all[k];
    try {
      const auto rec = forgetful(A);
      const int height = alcove_.height(A);
      Rational sum(0);
      for (std::size_t i = 1; i < rec.prefix.size(); ++i) {
        const WeylElement from = W_->min_coset_rep(rec.prefix[i - 1], J);
        const WeylElement to = W_->min_coset_rep(rec.prefix[i], J);
        sum += (1 - rec.breaks[i]) * qls_->path_weight(from, to);
      }
      const int deg_pi = dual_->deg(rec.pi);
      const int deg_s = qls_->deg(qls_->lusztig(rec.pi_star));
      const int deg_tail = qls_->deg_tail(rec.pi_star);
      if (!(sum == height && -deg_pi == height && -deg_s == height && -deg_tail == height))
        bad.push_back(positions_string(A) + ": height " + std::to_string(height) + ", sum " + to_string(sum) +
                      ", -Deg(Pi) " + std::to_string(-deg_pi) + ", -Deg(S(Pi*)) " + std::to_string(-deg_s) +
                      ", tail " + std::to_string(-deg_tail));
    } catch (const std::exception& ex) {
      bad.push_back(positions_string(A) + ": " + ex.what());
    }
  });
  report.checked = all.size();
  return report;
}

TensorIsomorphism build_isomorphism_to_tensor(const WeylGroup& W, const Weight& lambda) {
  const auto& d = W.datum();
  TensorIsomorphism iso;
  iso.report.name = "tensor isomorphism";
  for (int i = 1; i <= d.rank(); ++i) {
    if (lambda[i - 1] < 0) throw InvalidInput("weight " + format_weight(lambda) + " is not dominant");
    for (int c = 0; c < lambda[i - 1]; ++c) iso.factors.push_back(i);
  }
  QLSModel model(W, lambda);
  iso.source = crystal_from_qls(model);
  std::map<int, CrystalGraph> fundamental;
  for (int i : iso.factors)
    if (!fundamental.count(i)) fundamental.emplace(i, crystal_from_qls(QLSModel(W, d.fundamental_weight(i))));
  std::vector<const CrystalGraph*> factors;
  for (int i : iso.factors) factors.push_back(&fundamental.at(i));
  iso.target = tensor(factors, d.rank());

  const auto& S = iso.source;
  const auto& T = iso.target;
  auto& bad = iso.report.violations;
  iso.map.assign(S.size(), -1);
  std::vector<int> back(T.size(), -1);
  iso.map[S.highest] = T.highest;
  back[T.highest] = S.highest;
  std::deque<int> queue{S.highest};
  while (!queue.empty() && bad.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int j = 0; j <= S.rank && bad.empty(); ++j)
      for (int dir = 0; dir < 2; ++dir) {
        const int u = (dir ? S.e : S.f)[j][v];
        const int tu = (dir ? T.e : T.f)[j][iso.map[v]];
        if ((u < 0) != (tu < 0)) {
          bad.push_back("arrow " + std::to_string(j) + " from " + S.labels[v] + " has no partner");
          break;
        }
        if (u < 0) continue;
        if (iso.map[u] < 0 && back[tu] < 0) {
          iso.map[u] = tu;
          back[tu] = u;
          queue.push_back(u);
        } else if (iso.map[u] != tu || back[tu] != u) {
          bad.push_back("conflicting images for " + S.labels[u]);
          break;
        }
      }
  }
  if (S.size() != T.size())
    bad.push_back("|QLS(lambda)| = " + std::to_string(S.size()) + " but the tensor product has " +
                  std::to_string(T.size()) + " elements");
  for (std::size_t v = 0; v < S.size(); ++v) {
    if (iso.map[v] < 0) {
      bad.push_back(S.labels[v] + " is not reached");
      continue;
    }
    if (S.weights[v] != T.weights[iso.map[v]]) bad.push_back(S.labels[v] + ": weight mismatch");
    for (int j = 0; j <= S.rank; ++j) {
      const int fu = S.f[j][v], tf = T.f[j][iso.map[v]];
      if ((fu < 0 ? -1 : iso.map[fu]) != tf) bad.push_back(S.labels[v] + ": f_" + std::to_string(j) + " mismatch");
      const int eu = S.e[j][v], te = T.e[j][iso.map[v]];
      if ((eu < 0 ? -1 : iso.map[eu]) != te) bad.push_back(S.labels[v] + ": e_" + std::to_string(j) + " mismatch");
    }
  }
  iso.report.checked = S.size();
  return iso;
}

}  // namespace qalcove
