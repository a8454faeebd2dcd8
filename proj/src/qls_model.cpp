#include "qalcove/qls_model.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "qalcove/errors.hpp"

namespace qalcove {

QLSModel::QLSModel(const WeylGroup& W, Weight lambda) : W_(&W), lambda_(std::move(lambda)) {
  const auto& d = W.datum();
  if (static_cast<int>(lambda_.size()) != d.rank())
    throw InvalidInput("weight has " + std::to_string(lambda_.size()) + " coordinates, expected " +
                       std::to_string(d.rank()));
  if (!lambda_.is_dominant()) throw InvalidInput("weight " + format_weight(lambda_) + " is not dominant");
  J_ = d.stabilizer(lambda_);
  graph_ = std::make_unique<QuantumBruhatGraph>(W, J_);
  weights_ = std::make_unique<PathWeights>(*graph_);
  reach_ = std::make_unique<RestrictedReachability>(*graph_, lambda_);
}

void QLSModel::check_node(int j) const {
  if (j < 0 || j > W_->rank()) throw InvalidInput("node " + std::to_string(j) + " is not in I_af");
}

WeylElement QLSModel::s(int j) const {
  check_node(j);
  const auto& d = W_->datum();
  return W_->reflection(j == 0 ? d.highest_root() : d.simple_root(j));
}

int QLSModel::tilde_pairing(int j, const Weight& mu) const {
  check_node(j);
  return j == 0 ? -W_->datum().pairing(W_->datum().highest_root(), mu) : mu[j - 1];
}

Weight QLSModel::tilde_alpha_weight(int j) const {
  check_node(j);
  const auto& d = W_->datum();
  return j == 0 ? -d.root(d.highest_root()).weight : d.root(d.simple_root(j)).weight;
}

std::string QLSModel::defect(const QLSPath& eta) const {
  const auto& x = eta.directions;
  const auto& b = eta.breaks;
  if (x.empty()) return "no directions";
  if (b.size() != x.size() + 1)
    return "expected " + std::to_string(x.size() + 1) + " break points, got " + std::to_string(b.size());
  if (b.front() != 0 || b.back() != 1) return "break points must start at 0 and end at 1";
  for (std::size_t k = 1; k < b.size(); ++k)
    if (!(b[k - 1] < b[k])) return "break points are not strictly increasing at k=" + std::to_string(k);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < 0 || x[k] >= static_cast<WeylElement>(W_->order()) || graph_->vertex_index(x[k]) < 0)
      return "direction x_" + std::to_string(k + 1) + " is not a minimal coset representative";
  }
  for (std::size_t k = 1; k < x.size(); ++k) {
    if (x[k - 1] == x[k]) return "k=" + std::to_string(k) + ": consecutive directions coincide";
    if (!reach_->reachable(x[k], x[k - 1], b[k])) {
      bool any_edge = false;
      for (int a = 0; a < W_->datum().num_positive_roots(); ++a)
        if (!W_->datum().in_parabolic(a, J_) && is_integer(b[k] * W_->datum().pairing(a, lambda_))) any_edge = true;
      return "k=" + std::to_string(k) + ": no directed path from x_" + std::to_string(k + 1) + " to x_" +
             std::to_string(k) + " in the graph restricted at b=" + to_string(b[k]) +
             (any_edge ? "" : " (b<alpha^vee,lambda> is never integral, so it has no edges)");
    }
  }
  return {};
}

QLSPath QLSModel::validate(std::vector<WeylElement> directions, std::vector<Rational> breaks) const {
  QLSPath eta{std::move(directions), std::move(breaks)};
  auto why = defect(eta);
  if (!why.empty()) throw InvalidInput("not a QLS path of shape " + format_weight(lambda_) + ": " + why);
  return eta;
}

QLSPath QLSModel::straight(WeylElement x) const {
  return validate({x}, {Rational(0), Rational(1)});
}

RationalWeight QLSModel::evaluate(const QLSPath& eta, const Rational& t) const {
  if (t < 0 || t > 1) throw InvalidInput("evaluation point " + to_string(t) + " is outside [0,1]");
  RationalWeight out(lambda_.size());
  for (std::size_t k = 0; k < eta.directions.size(); ++k) {
    const Rational lo = eta.breaks[k], hi = eta.breaks[k + 1];
    if (t <= lo) break;
    const Rational len = (t < hi ? t : hi) - lo;
    out += len * direction_weight(eta.directions[k]).to_rational();
  }
  return out;
}

Weight QLSModel::weight(const QLSPath& eta) const {
  auto v = evaluate(eta, Rational(1));
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    check_internal(is_integer(v.coords[i]), "path endpoint is not integral");
    w[i] = static_cast<int>(v.coords[i].numerator());
  }
  return w;
}

std::vector<Rational> QLSModel::heights(const QLSPath& eta, int j) const {
  std::vector<Rational> h{Rational(0)};
  for (std::size_t k = 0; k < eta.directions.size(); ++k)
    h.push_back(h.back() + (eta.breaks[k + 1] - eta.breaks[k]) * tilde_pairing(j, direction_weight(eta.directions[k])));
  return h;
}

QLSPath QLSModel::reflect_interval(const QLSPath& eta, const Rational& t0, const Rational& t1, int j) const {
  const WeylElement sj = s(j);
  std::vector<Piece> pieces;
  for (std::size_t k = 0; k < eta.directions.size(); ++k) {
    // Cut each segment at t0 and t1.
    std::vector<Rational> cuts{eta.breaks[k]};
    for (const auto& c : {t0, t1})
      if (eta.breaks[k] < c && c < eta.breaks[k + 1]) cuts.push_back(c);
    cuts.push_back(eta.breaks[k + 1]);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      WeylElement x = eta.directions[k];
      if (t0 <= cuts[c] && cuts[c + 1] <= t1) x = W_->min_coset_rep(W_->multiply(sj, x), J_);
      pieces.push_back({x, cuts[c], cuts[c + 1]});
    }
  }
  QLSPath out;
  out.breaks.push_back(Rational(0));
  for (const auto& p : pieces) {
    if (p.from == p.to) continue;
    if (!out.directions.empty() && out.directions.back() == p.direction) {
      out.breaks.back() = p.to;
      continue;
    }
    out.directions.push_back(p.direction);
    out.breaks.push_back(p.to);
  }
  auto why = defect(out);
  check_internal(why.empty(), "root operator produced an invalid path " + format_path(*W_, out) + ": " + why);
  return out;
}

namespace {

void check_local_minima(const std::vector<Rational>& h, const std::vector<Rational>& slopes) {
  const std::size_t s = slopes.size();
  for (std::size_t k = 1; k <= s; ++k) {
    const bool falling_in = slopes[k - 1] < 0;
    const bool rising_out = k == s || slopes[k] > 0;
    if (falling_in && rising_out) check_internal(is_integer(h[k]), "H has a non-integral local minimum");
  }
}

}  // namespace

std::optional<QLSPath> QLSModel::e(const QLSPath& eta, int j) const {
  const auto h = heights(eta, j);
  const auto& b = eta.breaks;
  const std::size_t s = eta.directions.size();
  std::vector<Rational> slopes(s);
  for (std::size_t k = 0; k < s; ++k) slopes[k] = tilde_pairing(j, direction_weight(eta.directions[k]));
  check_local_minima(h, slopes);
  const Rational m = *std::min_element(h.begin(), h.end());
  check_internal(is_integer(m) && m <= 0, "minimum of H is not a nonpositive integer");
  if (m > -1) return std::nullopt;
  std::size_t k1 = 0;
  while (h[k1] != m) ++k1;
  const Rational t1 = b[k1];
  std::optional<Rational> t0;
  for (std::size_t seg = k1; seg >= 1 && !t0; --seg) {
    const Rational& sl = slopes[seg - 1];
    if (sl != 0) {
      Rational t = b[seg - 1] + (m + 1 - h[seg - 1]) / sl;
      if (b[seg - 1] <= t && t <= b[seg]) t0 = t;
    } else if (h[seg] == m + 1) {
      t0 = b[seg];
    }
  }
  check_internal(t0.has_value(), "e: no crossing of m+1 before t1");
  for (std::size_t k = 0; k < s; ++k)
    if (b[k] < t1 && *t0 < b[k + 1]) check_internal(slopes[k] < 0, "e: H is not decreasing on [t0,t1]");
  QLSPath out = reflect_interval(eta, *t0, t1, j);
  check_internal(weight(out) == weight(eta) + tilde_alpha_weight(j), "e: weight did not rise by alpha_j");
  return out;
}

std::optional<QLSPath> QLSModel::f(const QLSPath& eta, int j) const {
  const auto h = heights(eta, j);
  const auto& b = eta.breaks;
  const std::size_t s = eta.directions.size();
  std::vector<Rational> slopes(s);
  for (std::size_t k = 0; k < s; ++k) slopes[k] = tilde_pairing(j, direction_weight(eta.directions[k]));
  check_local_minima(h, slopes);
  const Rational m = *std::min_element(h.begin(), h.end());
  check_internal(is_integer(m) && m <= 0, "minimum of H is not a nonpositive integer");
  if (h.back() - m < 1) return std::nullopt;
  std::size_t k0 = s;
  while (h[k0] != m) --k0;
  const Rational t0 = b[k0];
  std::optional<Rational> t1;
  for (std::size_t seg = k0 + 1; seg <= s && !t1; ++seg) {
    const Rational& sl = slopes[seg - 1];
    if (sl != 0) {
      Rational t = b[seg - 1] + (m + 1 - h[seg - 1]) / sl;
      if (b[seg - 1] <= t && t <= b[seg]) t1 = t;
    } else if (h[seg - 1] == m + 1) {
      t1 = b[seg - 1];
    }
  }
  check_internal(t1.has_value(), "f: no crossing of m+1 after t0");
  for (std::size_t k = 0; k < s; ++k)
    if (b[k] < *t1 && t0 < b[k + 1]) check_internal(slopes[k] > 0, "f: H is not increasing on [t0,t1]");
  QLSPath out = reflect_interval(eta, t0, *t1, j);
  check_internal(weight(out) == weight(eta) - tilde_alpha_weight(j), "f: weight did not drop by alpha_j");
  return out;
}

int QLSModel::epsilon(const QLSPath& eta, int j) const {
  int n = 0;
  for (auto cur = e(eta, j); cur; cur = e(*cur, j)) ++n;
  return n;
}

int QLSModel::phi(const QLSPath& eta, int j) const {
  int n = 0;
  for (auto cur = f(eta, j); cur; cur = f(*cur, j)) ++n;
  return n;
}

int QLSModel::deg(const QLSPath& eta) const {
  Rational sum(0);
  for (std::size_t k = 1; k < eta.directions.size(); ++k)
    sum += (1 - eta.breaks[k]) * path_weight(eta.directions[k], eta.directions[k - 1]);
  check_internal(is_integer(sum), "degree sum is not an integer");
  return -static_cast<int>(sum.numerator());
}

int QLSModel::deg_tail(const QLSPath& eta) const {
  Rational sum(0);
  for (std::size_t k = 1; k < eta.directions.size(); ++k)
    sum += eta.breaks[k] * path_weight(eta.directions[k], eta.directions[k - 1]);
  check_internal(is_integer(sum), "tail degree sum is not an integer");
  return -static_cast<int>(sum.numerator());
}

QLSPath QLSModel::dual(const QLSPath& eta) const {
  const NodeSet oj = W_->omega(J_);
  QLSPath out;
  for (auto it = eta.directions.rbegin(); it != eta.directions.rend(); ++it)
    out.directions.push_back(W_->min_coset_rep(W_->multiply(*it, W_->longest()), oj));
  for (auto it = eta.breaks.rbegin(); it != eta.breaks.rend(); ++it) out.breaks.push_back(1 - *it);
  return out;
}

QLSPath QLSModel::omega(const QLSPath& eta) const {
  QLSPath out = eta;
  for (auto& x : out.directions) x = W_->omega(x);
  return out;
}

QLSPath QLSModel::lusztig(const QLSPath& eta) const {
  QLSPath out;
  for (auto it = eta.directions.rbegin(); it != eta.directions.rend(); ++it)
    out.directions.push_back(W_->min_coset_rep(W_->multiply(W_->longest(), *it), J_));
  for (auto it = eta.breaks.rbegin(); it != eta.breaks.rend(); ++it) out.breaks.push_back(1 - *it);
  return out;
}

std::vector<QLSPath> QLSModel::enumerate() const {
  std::vector<QLSPath> order{highest()};
  std::set<QLSPath> seen{order.front()};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const QLSPath cur = order[k];
    for (int j = 0; j <= W_->rank(); ++j)
      for (auto next : {f(cur, j), e(cur, j)})
        if (next && seen.insert(*next).second) order.push_back(*next);
  }
  return order;
}

std::vector<QLSPath> QLSModel::enumerate_bruteforce() const {
  const auto& d = W_->datum();
  std::set<Rational> cand;
  for (int a = 0; a < d.num_positive_roots(); ++a) {
    if (d.in_parabolic(a, J_)) continue;
    const int den = d.pairing(a, lambda_);
    for (int num = 1; num < den; ++num) cand.insert(Rational(num, den));
  }
  const std::vector<Rational> breaks(cand.begin(), cand.end());
  std::vector<QLSPath> out;
  QLSPath cur;
  cur.breaks.push_back(Rational(0));
  auto dfs = [&](auto&& self, std::size_t next_break) -> void {
    cur.breaks.push_back(Rational(1));
    out.push_back(cur);
    cur.breaks.pop_back();
    for (std::size_t bi = next_break; bi < breaks.size(); ++bi) {
      cur.breaks.push_back(breaks[bi]);
      for (WeylElement y : graph_->vertices()) {
        if (y == cur.directions.back() || !reach_->reachable(y, cur.directions.back(), breaks[bi])) continue;
        cur.directions.push_back(y);
        self(self, bi + 1);
        cur.directions.pop_back();
      }
      cur.breaks.pop_back();
    }
  };
  for (WeylElement x : graph_->vertices()) {
    cur.directions = {x};
    dfs(dfs, 0);
  }
  for (const auto& eta : out) check_internal(is_valid(eta), "brute-force enumeration produced an invalid path");
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_path(const WeylGroup& W, const QLSPath& eta) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < eta.directions.size(); ++k) os << (k ? ", " : "") << W.word_string(eta.directions[k]);
  os << ";";
  for (std::size_t k = 0; k < eta.breaks.size(); ++k) os << (k ? ", " : " ") << to_string(eta.breaks[k]);
  os << ")";
  return os.str();
}

}  // namespace qalcove

namespace qalcove {

QLSPath parse_path(const WeylGroup& W, const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw InvalidInput("path '" + text + "' needs 'directions; breaks'");
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (c != ' ' && c != '(' && c != ')') {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  QLSPath eta;
  for (const auto& word : split(text.substr(0, semi))) {
    std::vector<int> letters;
    if (word != "e") {
      std::size_t i = 0;
      while (i < word.size()) {
        if (word[i] != 's') throw InvalidInput("cannot parse Weyl group element '" + word + "'");
        std::size_t j = i + 1;
        while (j < word.size() && std::isdigit(static_cast<unsigned char>(word[j]))) ++j;
        if (j == i + 1) throw InvalidInput("cannot parse Weyl group element '" + word + "'");
        const int node = std::stoi(word.substr(i + 1, j - i - 1));
        if (node < 1 || node > W.rank()) throw InvalidInput("no simple reflection s" + std::to_string(node));
        letters.push_back(node);
        i = j;
      }
    }
    eta.directions.push_back(W.from_word(letters));
  }
  for (const auto& b : split(text.substr(semi + 1))) eta.breaks.push_back(parse_rational(b));
  return eta;
}

Report verify_degree_recursion(const QLSModel& model, const std::vector<QLSPath>& paths) {
  Report report{"degree recursion", 0, {}};
  const auto& W = model.group();
  for (const auto& eta : paths)
    for (int j = 0; j <= W.rank(); ++j) {
      const auto up = model.e(eta, j);
      if (!up) continue;
      ++report.checked;
      const int before = model.deg(eta), after = model.deg(*up);
      int expected = before;
      if (j == 0) {
        const Weight iota = model.initial_direction(eta);
        expected = model.initial_direction(*up) == iota ? before - 1 : before - model.tilde_pairing(0, iota) - 1;
      }
      if (after != expected)
        report.violations.push_back(format_path(W, eta) + ", j=" + std::to_string(j) + ": Deg(e_j eta) = " +
                                    std::to_string(after) + ", expected " + std::to_string(expected));
    }
  return report;
}

Report verify_lusztig(const QLSModel& model, const std::vector<QLSPath>& paths) {
  Report report{"Lusztig involution", 0, {}};
  const auto& W = model.group();
  const auto& omega = W.datum().omega();
  for (const auto& eta : paths) {
    ++report.checked;
    const std::string at = format_path(W, eta);
    const QLSPath s = model.lusztig(eta);
    if (!model.is_valid(s)) {
      report.violations.push_back(at + ": S(eta) is not a QLS path");
      continue;
    }
    if (model.lusztig(s) != eta) report.violations.push_back(at + ": S(S(eta)) != eta");
    if (model.weight(s) != W.act(W.longest(), model.weight(eta))) report.violations.push_back(at + ": wt(S eta) != w_o wt");
    if (model.deg(s) != model.deg_tail(eta)) report.violations.push_back(at + ": Deg(S eta) differs from the tail formula");
    for (int j = 0; j <= W.rank(); ++j) {
      const auto up = model.e(eta, j);
      const auto down = model.f(s, omega[j]);
      if (up.has_value() != down.has_value() || (up && model.lusztig(*up) != *down))
        report.violations.push_back(at + ", j=" + std::to_string(j) + ": S e_j != f_omega(j) S");
    }
  }
  return report;
}

}  // namespace qalcove
