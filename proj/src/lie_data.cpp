#include "qalcove/lie_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "qalcove/errors.hpp"

namespace qalcove {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t pos = 0;
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      long long v = std::stoll(text, &pos);
      if (pos != text.size()) throw InvalidInput("bad rational: " + text);
      return Rational(v);
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    long long p = std::stoll(num, &pos);
    if (pos != num.size()) throw InvalidInput("bad rational: " + text);
    long long q = std::stoll(den, &pos);
    if (pos != den.size() || q == 0) throw InvalidInput("bad rational: " + text);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw InvalidInput("bad rational: " + text);
  }
}

NodeSet NodeSet::from_nodes(const std::vector<int>& nodes) {
  NodeSet s;
  for (int n : nodes) {
    if (n < 1 || n > 31) throw InvalidInput("node out of range: " + std::to_string(n));
    s.insert(n);
  }
  return s;
}

std::vector<int> NodeSet::nodes(int rank) const {
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // simply-laced bond between nodes i and j (1-based)
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (type) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(2, 4);
      for (int i = 5; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

bool valid_type(char type, int n) {
  switch (type) {
    case 'A': return n >= 1 && n <= 8;
    case 'B': return n >= 2 && n <= 8;
    case 'C': return n >= 2 && n <= 8;
    case 'D': return n >= 4 && n <= 8;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

RootDatum RootDatum::build(char type_label, int rank) {
  if (type_label >= 'a' && type_label <= 'g') type_label = static_cast<char>(type_label - 'a' + 'A');
  if (!valid_type(type_label, rank))
    throw InvalidInput("unknown finite type " + std::string(1, type_label) + std::to_string(rank));
  RootDatum d;
  d.type_ = type_label;
  d.rank_ = rank;
  d.cartan_ = cartan_matrix(type_label, rank);
  d.cartan_inverse_ = invert(d.cartan_);
  d.generate_roots();
  d.compute_marks();
  d.compute_symmetrizer();
  d.compute_omega();
  return d;
}

void RootDatum::generate_roots() {
  const int n = rank_;
  // Closure of the simple roots under simple reflections, tracking coroots in
  // parallel: s_i(b) = b - <a_i^vee, b> a_i,  s_i(b^vee) = b^vee - <b^vee, a_i> a_i^vee.
  std::map<std::vector<int>, std::vector<int>> found;
  std::queue<std::vector<int>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    found[e] = e;
    todo.push(e);
  }
  while (!todo.empty()) {
    auto b = todo.front();
    todo.pop();
    const auto bv = found[b];
    for (int i = 0; i < n; ++i) {
      int c = 0, cv = 0;
      for (int j = 0; j < n; ++j) {
        c += cartan_[i][j] * b[j];
        cv += bv[j] * cartan_[j][i];
      }
      if (c == 0) continue;
      auto nb = b;
      auto nbv = bv;
      nb[i] -= c;
      nbv[i] -= cv;
      if (*std::min_element(nb.begin(), nb.end()) < 0) continue;
      if (found.emplace(nb, nbv).second) todo.push(nb);
    }
  }
  for (auto& [b, bv] : found) {
    PositiveRoot r;
    r.root = b;
    r.coroot = bv;
    r.height = std::accumulate(b.begin(), b.end(), 0);
    r.weight = Weight(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.weight[i] += cartan_[i][j] * b[j];
    roots_.push_back(std::move(r));
  }
  std::sort(roots_.begin(), roots_.end(), [](const PositiveRoot& x, const PositiveRoot& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.root > y.root;
  });
  simple_.assign(n, -1);
  for (int k = 0; k < num_positive_roots(); ++k) {
    if (roots_[k].height != 1) continue;
    for (int i = 0; i < n; ++i)
      if (roots_[k].root[i] == 1) simple_[i] = k;
  }
  theta_ = num_positive_roots() - 1;
  check_internal(num_positive_roots() == 1 || roots_[theta_ - 1].height < roots_[theta_].height,
                 "highest root is not unique");
}

void RootDatum::compute_marks() {
  marks_.assign(rank_ + 1, 1);
  comarks_.assign(rank_ + 1, 1);
  for (int i = 0; i < rank_; ++i) {
    marks_[i + 1] = roots_[theta_].root[i];
    comarks_[i + 1] = roots_[theta_].coroot[i];
  }
}

void RootDatum::compute_symmetrizer() {
  // d_i A_ij = d_j A_ji, propagated along the (connected) Dynkin diagram.
  symmetrizer_.assign(rank_, Rational(0));
  symmetrizer_[0] = 1;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    for (int j = 0; j < rank_; ++j) {
      if (j == i || cartan_[i][j] == 0 || symmetrizer_[j] != 0) continue;
      symmetrizer_[j] = symmetrizer_[i] * Rational(cartan_[i][j], cartan_[j][i]);
      todo.push(j);
    }
  }
  Rational lo = *std::min_element(symmetrizer_.begin(), symmetrizer_.end());
  for (auto& s : symmetrizer_) s /= lo;
}

void RootDatum::compute_omega() {
  omega_.assign(rank_ + 1, 0);
  for (int j = 1; j <= rank_; ++j) {
    // w_o varpi_j is the antidominant element of the orbit, equal to -varpi_{omega(j)}.
    Weight mu = fundamental_weight(j);
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < rank_; ++i) {
        if (mu[i] > 0) {
          mu = reflect(mu, simple_[i]);
          moved = true;
        }
      }
    }
    Weight neg = -mu;
    for (int k = 1; k <= rank_; ++k)
      if (neg == fundamental_weight(k)) omega_[j] = k;
    check_internal(omega_[j] != 0, "diagram automorphism not found");
  }
}

int RootDatum::find_root(const std::vector<int>& coords) const {
  auto it = std::find_if(roots_.begin(), roots_.end(),
                         [&](const PositiveRoot& r) { return r.root == coords; });
  return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

SignedRoot RootDatum::signed_root(const std::vector<int>& coords) const {
  int k = find_root(coords);
  if (k >= 0) return {k, 1};
  std::vector<int> neg(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
  k = find_root(neg);
  check_internal(k >= 0, "vector is not a root");
  return {k, -1};
}

bool RootDatum::is_long(int root_index) const {
  // theta is always long.
  const auto& w = roots_[root_index].weight;
  return inner_product(w, w) == inner_product(roots_[theta_].weight, roots_[theta_].weight);
}

Weight RootDatum::fundamental_weight(int node) const {
  Weight w(rank_);
  w[node - 1] = 1;
  return w;
}

Weight RootDatum::rho() const { return Weight(std::vector<int>(rank_, 1)); }

bool RootDatum::in_parabolic(int root_index, NodeSet J) const {
  const auto& b = roots_[root_index].root;
  for (int i = 0; i < rank_; ++i)
    if (b[i] != 0 && !J.contains(i + 1)) return false;
  return true;
}

Weight RootDatum::two_rho(NodeSet J) const {
  Weight w(rank_);
  for (int k = 0; k < num_positive_roots(); ++k)
    if (in_parabolic(k, J)) w += roots_[k].weight;
  return w;
}

int RootDatum::pairing(int root_index, const Weight& mu) const {
  const auto& cv = roots_[root_index].coroot;
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += cv[i] * mu[i];
  return s;
}

Rational RootDatum::pairing(int root_index, const RationalWeight& mu) const {
  const auto& cv = roots_[root_index].coroot;
  Rational s(0);
  for (int i = 0; i < rank_; ++i) s += cv[i] * mu.coords[i];
  return s;
}

Weight RootDatum::reflect(const Weight& mu, int root_index) const {
  return mu - pairing(root_index, mu) * roots_[root_index].weight;
}

Weight RootDatum::affine_reflect(const Weight& mu, int root_index, int level) const {
  return mu - (pairing(root_index, mu) - level) * roots_[root_index].weight;
}

RationalWeight RootDatum::affine_reflect(const RationalWeight& mu, int root_index,
                                         const Rational& level) const {
  return mu - (pairing(root_index, mu) - level) * roots_[root_index].weight.to_rational();
}

SignedRoot RootDatum::reflect_root(SignedRoot gamma, int root_index) const {
  // <beta^vee, gamma> computed from the weight form of gamma.
  const auto& g = roots_[gamma.index];
  int c = gamma.sign * pairing(root_index, g.weight);
  std::vector<int> out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = gamma.sign * g.root[i] - c * roots_[root_index].root[i];
  return signed_root(out);
}

Weight RootDatum::root_weight(SignedRoot beta) const { return beta.sign * roots_[beta.index].weight; }

int RootDatum::level(const std::vector<int>& affine_coeffs) const {
  if (static_cast<int>(affine_coeffs.size()) != rank_ + 1)
    throw InvalidInput("level: expected " + std::to_string(rank_ + 1) + " coefficients");
  int s = 0;
  for (int i = 0; i <= rank_; ++i) s += comarks_[i] * affine_coeffs[i];
  return s;
}

Rational RootDatum::c_r(int node) const {
  if (node < 1 || node > rank_) throw InvalidInput("node out of range");
  Rational ratio(marks_[node], comarks_[node]);
  Rational a0(comarks_[0]);
  return ratio > a0 ? ratio : a0;
}

std::vector<Rational> RootDatum::to_root_coords(const Weight& mu) const {
  std::vector<Rational> c(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += cartan_inverse_[i][j] * mu[j];
  return c;
}

bool RootDatum::dominates(const Weight& mu, const Weight& nu) const {
  for (const auto& c : to_root_coords(mu - nu))
    if (!is_integer(c) || c < 0) return false;
  return true;
}

Rational RootDatum::inner_product(const Weight& mu, const Weight& nu) const {
  // (mu, nu) = sum_j c_j d_j <alpha_j^vee, nu>, with c the root coordinates of mu.
  auto c = to_root_coords(mu);
  Rational s(0);
  for (int j = 0; j < rank_; ++j) s += c[j] * symmetrizer_[j] * nu[j];
  return s;
}

Weight RootDatum::dominant_conjugate(const Weight& mu) const {
  Weight w = mu;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank_; ++i) {
      if (w[i] < 0) {
        w = reflect(w, simple_[i]);
        moved = true;
      }
    }
  }
  return w;
}

Weight RootDatum::apply_omega(const Weight& mu) const {
  Weight out(rank_);
  for (int j = 1; j <= rank_; ++j) out[omega_[j] - 1] = mu[j - 1];
  return out;
}

NodeSet RootDatum::stabilizer(const Weight& lambda) const {
  NodeSet J;
  for (int i = 1; i <= rank_; ++i)
    if (lambda[i - 1] == 0) J.insert(i);
  return J;
}

std::string format_weight(const Weight& mu) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    int c = mu[i];
    if (c == 0) continue;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (c != 1 && c != -1) os << std::abs(c);
    os << "ϖ" << (i + 1);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::string format_root(const RootDatum& datum, SignedRoot beta) {
  const auto& b = datum.root(beta.index).root;
  std::ostringstream os;
  if (beta.sign < 0) os << "-";
  bool first = true;
  if (beta.sign < 0 && datum.root(beta.index).height > 1) os << "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    if (!first) os << "+";
    if (b[i] != 1) os << b[i];
    os << "α" << (i + 1);
    first = false;
  }
  if (beta.sign < 0 && datum.root(beta.index).height > 1) os << ")";
  return os.str();
}

}  // namespace qalcove
