#include "qalcove/crystal_graph.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "qalcove/errors.hpp"

namespace qalcove {

int CrystalGraph::epsilon(int v, int j) const {
  int n = 0;
  for (int u = e[j][v]; u >= 0; u = e[j][u]) {
    ++n;
    check_internal(n <= static_cast<int>(size()), "e-string does not terminate");
  }
  return n;
}

int CrystalGraph::phi(int v, int j) const {
  int n = 0;
  for (int u = f[j][v]; u >= 0; u = f[j][u]) {
    ++n;
    check_internal(n <= static_cast<int>(size()), "f-string does not terminate");
  }
  return n;
}

bool CrystalGraph::connected() const {
  if (size() == 0) return true;
  std::vector<char> seen(size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int j = 0; j <= rank; ++j)
      for (int u : {f[j][v], e[j][v]})
        if (u >= 0 && !seen[u]) {
          seen[u] = 1;
          ++count;
          queue.push_back(u);
        }
  }
  return count == size();
}

std::size_t CrystalGraph::num_arrows() const {
  std::size_t n = 0;
  for (const auto& row : f)
    for (int u : row) n += u >= 0;
  return n;
}

CrystalGraph crystal_from_qls(const QLSModel& model, std::vector<QLSPath>* paths) {
  const auto all = model.enumerate();
  std::map<QLSPath, int> index;
  for (std::size_t v = 0; v < all.size(); ++v) index.emplace(all[v], static_cast<int>(v));
  CrystalGraph g;
  g.rank = model.group().rank();
  g.f.assign(g.rank + 1, std::vector<int>(all.size(), -1));
  g.e.assign(g.rank + 1, std::vector<int>(all.size(), -1));
  for (std::size_t v = 0; v < all.size(); ++v) {
    g.weights.push_back(model.weight(all[v]));
    g.labels.push_back(format_path(model.group(), all[v]));
    for (int j = 0; j <= g.rank; ++j) {
      if (auto t = model.f(all[v], j)) g.f[j][v] = index.at(*t);
      if (auto t = model.e(all[v], j)) g.e[j][v] = index.at(*t);
    }
  }
  g.highest = index.at(model.highest());
  if (paths) *paths = all;
  return g;
}

CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b) {
  check_internal(a.rank == b.rank, "tensor factors of different rank");
  const int nb = static_cast<int>(b.size());
  const std::size_t n = a.size() * b.size();
  CrystalGraph g;
  g.rank = a.rank;
  g.f.assign(g.rank + 1, std::vector<int>(n, -1));
  g.e.assign(g.rank + 1, std::vector<int>(n, -1));
  std::vector<std::vector<int>> phi_a(g.rank + 1), eps_b(g.rank + 1);
  for (int j = 0; j <= g.rank; ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) phi_a[j].push_back(a.phi(static_cast<int>(i), j));
    for (std::size_t k = 0; k < b.size(); ++k) eps_b[j].push_back(b.epsilon(static_cast<int>(k), j));
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      const int v = static_cast<int>(i) * nb + static_cast<int>(k);
      g.weights.push_back(a.weights[i] + b.weights[k]);
      g.labels.push_back(a.labels[i] + " ⊗ " + b.labels[k]);
      for (int j = 0; j <= g.rank; ++j) {
        if (eps_b[j][k] >= phi_a[j][i]) {
          if (b.f[j][k] >= 0) g.f[j][v] = static_cast<int>(i) * nb + b.f[j][k];
        } else if (a.f[j][i] >= 0) {
          g.f[j][v] = a.f[j][i] * nb + static_cast<int>(k);
        }
        if (phi_a[j][i] >= eps_b[j][k]) {
          if (a.e[j][i] >= 0) g.e[j][v] = a.e[j][i] * nb + static_cast<int>(k);
        } else if (b.e[j][k] >= 0) {
          g.e[j][v] = static_cast<int>(i) * nb + b.e[j][k];
        }
      }
    }
  g.highest = a.highest * nb + b.highest;
  return g;
}

CrystalGraph tensor(const std::vector<const CrystalGraph*>& factors, int rank) {
  if (factors.empty()) {
    CrystalGraph g;
    g.rank = rank;
    g.weights = {Weight(static_cast<std::size_t>(rank))};
    g.labels = {"1"};
    g.f.assign(rank + 1, std::vector<int>{-1});
    g.e.assign(rank + 1, std::vector<int>{-1});
    return g;
  }
  CrystalGraph g = *factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) g = tensor(g, *factors[k]);
  return g;
}

std::vector<std::string> check_axioms(const RootDatum& datum, const CrystalGraph& g) {
  std::vector<std::string> bad;
  const int r = g.rank;
  std::vector<Weight> alpha(r + 1);
  alpha[0] = -datum.root(datum.highest_root()).weight;
  for (int j = 1; j <= r; ++j) alpha[j] = datum.root(datum.simple_root(j)).weight;
  auto pairing = [&](int j, const Weight& mu) {
    return j == 0 ? -datum.pairing(datum.highest_root(), mu) : mu[j - 1];
  };
  for (std::size_t v = 0; v < g.size(); ++v)
    for (int j = 0; j <= r; ++j) {
      const std::string where = "vertex " + g.labels[v] + ", j=" + std::to_string(j);
      if (int u = g.f[j][v]; u >= 0) {
        if (g.e[j][u] != static_cast<int>(v)) bad.push_back(where + ": e_j f_j is not the identity");
        if (g.weights[u] != g.weights[v] - alpha[j]) bad.push_back(where + ": f_j does not lower the weight by alpha_j");
      }
      if (int u = g.e[j][v]; u >= 0 && g.f[j][u] != static_cast<int>(v))
        bad.push_back(where + ": f_j e_j is not the identity");
      const int diff = g.phi(static_cast<int>(v), j) - g.epsilon(static_cast<int>(v), j);
      if (diff != pairing(j, g.weights[v])) bad.push_back(where + ": phi_j - eps_j differs from the weight pairing");
    }
  return bad;
}

std::string to_dot(const CrystalGraph& g) {
  static const char* colors[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "  n" << v << " [label=\"" << g.labels[v] << "\\n" << format_weight(g.weights[v]) << "\"];\n";
  for (int j = 0; j <= g.rank; ++j)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.f[j][v] >= 0)
        os << "  n" << v << " -> n" << g.f[j][v] << " [label=\"" << j << "\", color=" << colors[j % 9] << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qalcove
