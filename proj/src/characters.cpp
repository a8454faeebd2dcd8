#include "qalcove/characters.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "qalcove/errors.hpp"
#include "qalcove/parallel.hpp"

namespace qalcove {

void GradedCharacter::add(const Weight& mu, int q, long long coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(Key{mu, q}, coeff);
  if (!fresh && (it->second += coeff) == 0) terms_.erase(it);
}

long long GradedCharacter::coefficient(const Weight& mu, int q) const {
  auto it = terms_.find({mu, q});
  return it == terms_.end() ? 0 : it->second;
}

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b) {
  GradedCharacter out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

GradedCharacter GradedCharacter::layer(int n) const {
  GradedCharacter out;
  for (const auto& [k, c] : terms_)
    if (k.second == n) out.add(k.first, 0, c);
  return out;
}

GradedCharacter GradedCharacter::at_q_one() const {
  GradedCharacter out;
  for (const auto& [k, c] : terms_) out.add(k.first, 0, c);
  return out;
}

std::vector<int> GradedCharacter::exponents() const {
  std::set<int> s;
  for (const auto& [k, c] : terms_) s.insert(k.second);
  return {s.begin(), s.end()};
}

GradedCharacter character_from_alcove(const AlcoveModel& model, const std::vector<AdmissibleSubset>& subsets) {
  GradedCharacter chi;
  for (const auto& A : subsets) chi.add(model.weight(A), model.height(A));
  return chi;
}

GradedCharacter character_from_alcove(const AlcoveModel& model, int jobs) {
  const auto all = model.enumerate(jobs);
  // Per-worker partial sums, merged in chunk order.
  const std::size_t chunks = std::max(1, jobs) * 4;
  std::vector<GradedCharacter> parts(chunks);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    for (std::size_t k = c; k < all.size(); k += chunks) parts[c].add(model.weight(all[k]), model.height(all[k]));
  });
  GradedCharacter chi;
  for (const auto& p : parts) chi += p;
  return chi;
}

GradedCharacter character_from_qls(const QLSModel& model) {
  GradedCharacter chi;
  for (const auto& eta : model.enumerate()) chi.add(model.weight(eta), -model.deg(eta));
  return chi;
}

GradedCharacter weyl_character(const RootDatum& d, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != d.rank() || !lambda.is_dominant())
    throw InvalidInput("weight " + format_weight(lambda) + " is not a dominant weight of " + d.name());
  // Weights of V(lambda): mu with dom(mu) <= lambda, reached from lambda by
  // subtracting simple roots; processed by depth so every mu + k alpha is done.
  std::map<Weight, int> depth{{lambda, 0}};
  std::vector<std::vector<Weight>> levels{{lambda}};
  for (std::size_t lv = 0; lv < levels.size(); ++lv) {
    std::vector<Weight> next;
    for (const auto& mu : levels[lv])
      for (int i = 1; i <= d.rank(); ++i) {
        Weight nu = mu - d.root(d.simple_root(i)).weight;
        if (depth.count(nu) || !d.dominates(lambda, d.dominant_conjugate(nu))) continue;
        depth.emplace(nu, static_cast<int>(lv) + 1);
        next.push_back(nu);
      }
    if (!next.empty()) levels.push_back(std::move(next));
  }
  const Weight rho = d.rho();
  const Rational norm = d.inner_product(lambda + rho, lambda + rho);
  std::map<Weight, long long> mult{{lambda, 1}};
  for (std::size_t lv = 1; lv < levels.size(); ++lv)
    for (const auto& mu : levels[lv]) {
      Rational rhs(0);
      for (int a = 0; a < d.num_positive_roots(); ++a) {
        const Weight& alpha = d.root(a).weight;
        for (Weight nu = mu + alpha;; nu += alpha) {
          auto it = mult.find(nu);
          if (it == mult.end()) {
            if (!depth.count(nu)) break;
            continue;
          }
          rhs += 2 * d.inner_product(nu, alpha) * Rational(it->second);
        }
      }
      const Rational lhs = norm - d.inner_product(mu + rho, mu + rho);
      check_internal(lhs != 0, "Freudenthal denominator vanished");
      const Rational m = rhs / lhs;
      check_internal(is_integer(m) && m >= 0, "Freudenthal multiplicity is not a nonnegative integer");
      if (m != 0) mult[mu] = m.numerator();
    }
  GradedCharacter chi;
  for (const auto& [mu, m] : mult) chi.add(mu, 0, m);
  return chi;
}

std::map<std::pair<Weight, int>, long long> decompose(const RootDatum& d, const GradedCharacter& chi) {
  std::map<std::pair<Weight, int>, long long> out;
  std::map<Weight, GradedCharacter> cache;
  for (int n : chi.exponents()) {
    GradedCharacter rest = chi.layer(n);
    while (!rest.empty()) {
      // A dominant weight maximal for the dominance order among what remains.
      std::optional<Weight> top;
      for (const auto& [k, c] : rest.terms()) {
        if (!k.first.is_dominant()) continue;
        if (!top || d.dominates(k.first, *top)) top = k.first;
      }
      check_internal(top.has_value(), "character has no dominant weight left to peel");
      const long long c = rest.coefficient(*top, 0);
      auto it = cache.find(*top);
      if (it == cache.end()) it = cache.emplace(*top, weyl_character(d, *top)).first;
      for (const auto& [k, m] : it->second.terms()) rest.add(k.first, 0, -c * m);
      out[{*top, n}] += c;
    }
  }
  return out;
}

PXReport verify_p_equals_x(const WeylGroup& W, const Weight& lambda, int jobs) {
  const auto& d = W.datum();
  PXReport rep;
  rep.lambda = lambda;
  AlcoveModel alcove(W, lex_chain(d, lambda));
  QLSModel qls(W, lambda);
  rep.alcove = character_from_alcove(alcove, jobs);
  rep.qls = character_from_qls(qls);

  rep.alcove_equals_qls = rep.alcove == rep.qls;
  if (!rep.alcove_equals_qls) {
    std::set<GradedCharacter::Key> keys;
    for (const auto& [k, c] : rep.alcove.terms()) keys.insert(k);
    for (const auto& [k, c] : rep.qls.terms()) keys.insert(k);
    for (const auto& k : keys)
      if (rep.alcove.coefficient(k.first, k.second) != rep.qls.coefficient(k.first, k.second))
        rep.failures.push_back("alcove and QLS sums differ at x^" + format_weight(k.first) + " q^" +
                               std::to_string(k.second));
  }

  rep.bottom_layer_is_weyl = rep.alcove.layer(0) == weyl_character(d, lambda);
  if (!rep.bottom_layer_is_weyl) rep.failures.push_back("q^0 layer is not the Weyl character of " + format_weight(lambda));

  rep.weyl_invariant = true;
  for (const auto& [k, c] : rep.alcove.terms())
    for (int i = 1; i <= d.rank(); ++i) {
      const Weight image = d.reflect(k.first, d.simple_root(i));
      if (rep.alcove.coefficient(image, k.second) != c) {
        rep.weyl_invariant = false;
        rep.failures.push_back("not W-invariant: x^" + format_weight(k.first) + " q^" + std::to_string(k.second) +
                               " under s" + std::to_string(i));
      }
    }

  GradedCharacter product;
  product.add(d.zero_weight(), 0);
  for (int i = 1; i <= d.rank(); ++i)
    if (lambda[i - 1] > 0) {
      QLSModel fundamental(W, d.fundamental_weight(i));
      const GradedCharacter one = character_from_qls(fundamental).at_q_one();
      for (int c = 0; c < lambda[i - 1]; ++c) product = product * one;
    }
  rep.factorizes_at_q_one = rep.alcove.at_q_one() == product;
  if (!rep.factorizes_at_q_one)
    rep.failures.push_back("q = 1 specialization is not the product over the fundamental factors");

  rep.decomposition = decompose(d, rep.alcove);
  return rep;
}

std::string format_decomposition(const std::map<std::pair<Weight, int>, long long>& dec) {
  if (dec.empty()) return "0";
  // Ordered by q-exponent, then by weight descending.
  std::vector<std::pair<std::pair<Weight, int>, long long>> terms(dec.begin(), dec.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second < b.first.second;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const auto& [mu, n] = key;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const long long a = c < 0 ? -c : c;
    if (a != 1) os << a;
    if (n == 1) os << "q";
    else if (n != 0) os << "q^" << n;
    const std::string w = format_weight(mu);
    os << "χ_" << (w.size() > 1 ? "{" + w + "}" : w);
  }
  return os.str();
}

std::string format_character(const GradedCharacter& chi) {
  std::ostringstream os;
  for (const auto& [k, c] : chi.terms()) os << "q^" << k.second << " x^{" << format_weight(k.first) << "}  " << c << "\n";
  return os.str();
}

}  // namespace qalcove
