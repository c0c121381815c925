#include "donut/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "donut/errors.hpp"

namespace donut {

std::string KDonut::label(int v) const {
  if (v == w0) return "w0";
  if (v == w1) return "w1";
  return (is_outer(v) ? "u" : "v") + std::to_string(pair_index(v));
}

int KDonut::vertex_by_label(const std::string& s) const {
  if (s == "w0") return w0;
  if (s == "w1") return w1;
  if (s.size() < 2 || (s[0] != 'u' && s[0] != 'v')) return -1;
  int i = -1;
  try {
    i = std::stoi(s.substr(1));
  } catch (...) {
    return -1;
  }
  if (i < 0 || i >= 2 * k) return -1;
  return s[0] == 'u' ? outer(i) : inner(i);
}

int KDonut::edge_id(int a, int b) const {
  for (int e : adj[a])
    if (other(e, a) == b) return e;
  return -1;
}

nlohmann::ordered_json KDonut::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  auto verts = nlohmann::ordered_json::array();
  for (int v = 0; v < n; ++v) verts.push_back(label(v));
  j["vertices"] = verts;
  auto es = nlohmann::ordered_json::array();
  for (const auto& e : edges) es.push_back({label(e[0]), label(e[1])});
  j["edges"] = es;
  return j;
}

KDonut build_kdonut(int k) {
  if (k < 3) throw std::invalid_argument("k-donut requires k >= 3");
  KDonut g;
  g.k = k;
  g.n = 4 * k + 2;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    g.edges.push_back({a, b});
  };
  for (int i = 0; i < 2 * k; ++i) add(g.outer(i), g.outer(i + 1));
  for (int i = 0; i < 2 * k; ++i) add(g.inner(i), g.inner(i + 1));
  for (int i = 0; i < 2 * k; ++i) add(g.outer(i), g.inner(i));
  add(KDonut::w0, KDonut::w1);
  add(KDonut::w0, g.outer(0));
  add(KDonut::w0, g.inner(0));
  add(KDonut::w1, g.outer(1));
  add(KDonut::w1, g.inner(1));

  g.adj.assign(g.n, {});
  for (int e = 0; e < int(g.edges.size()); ++e) {
    g.adj[g.edges[e][0]].push_back(e);
    g.adj[g.edges[e][1]].push_back(e);
  }
  return g;
}

Metric shortest_path_metric(const KDonut& g) {
  Metric m;
  m.n = g.n;
  m.d.assign(size_t(g.n) * g.n, uint16_t(0xffff));
  std::deque<int> queue;
  for (int s = 0; s < g.n; ++s) {
    uint16_t* row = &m.d[size_t(s) * g.n];
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : g.adj[v]) {
        int u = g.other(e, v);
        if (row[u] == 0xffff) {
          row[u] = uint16_t(row[v] + 1);
          queue.push_back(u);
        }
      }
    }
  }
  return m;
}

std::vector<int> hamiltonian_witness(const KDonut& g) {
  // w0, u0, u_{2k-1}, ..., u_2, v_2, ..., v_{2k-1}, v_0, v_1, u_1, w1.
  std::vector<int> cycle;
  cycle.push_back(KDonut::w0);
  cycle.push_back(g.outer(0));
  for (int i = 2 * g.k - 1; i >= 2; --i) cycle.push_back(g.outer(i));
  for (int i = 2; i <= 2 * g.k - 1; ++i) cycle.push_back(g.inner(i));
  cycle.push_back(g.inner(0));
  cycle.push_back(g.inner(1));
  cycle.push_back(g.outer(1));
  cycle.push_back(KDonut::w1);
  if (int(cycle.size()) != g.n)
    throw claim_violation("hamiltonian-witness", "wrong length", g.k);
  for (size_t i = 0; i < cycle.size(); ++i)
    if (g.edge_id(cycle[i], cycle[(i + 1) % cycle.size()]) < 0)
      throw claim_violation("hamiltonian-witness", "not a cycle edge", g.k);
  return cycle;
}

bool has_hamiltonian_cycle_bruteforce(const KDonut& g) {
  // Held-Karp style reachability DP from vertex 0 over graph edges.
  int n = g.n;
  if (n > 20) throw std::invalid_argument("bruteforce Hamiltonicity is capped at 20 vertices");
  std::vector<std::vector<char>> dp(size_t(1) << n, std::vector<char>(n, 0));
  dp[1][0] = 1;
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
    if (!(mask & 1)) continue;
    for (int v = 0; v < n; ++v) {
      if (!dp[mask][v]) continue;
      for (int e : g.adj[v]) {
        int u = g.other(e, v);
        if (mask & (uint32_t(1) << u)) continue;
        dp[mask | (uint32_t(1) << u)][u] = 1;
      }
    }
  }
  uint32_t full = (uint32_t(1) << n) - 1;
  for (int v = 1; v < n; ++v)
    if (dp[full][v] && g.edge_id(v, 0) >= 0) return true;
  return false;
}

}  // namespace donut
