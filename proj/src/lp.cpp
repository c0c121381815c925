#include "donut/lp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace donut {

nlohmann::ordered_json SubtourSolution::to_json(const KDonut& g) const {
  nlohmann::ordered_json j;
  for (int e = 0; e < int(g.edges.size()); ++e) {
    std::string key = g.label(g.edges[e][0]) + "-" + g.label(g.edges[e][1]);
    j[key] = halves[e];
  }
  return j;
}

SubtourSolution extreme_point(const KDonut& g) {
  SubtourSolution x;
  x.halves.assign(g.edges.size(), 0);
  for (int i = 0; i < 2 * g.k; ++i) {
    x.halves[g.spoke(i)] = 1;
    int h = i % 2 == 1 ? 2 : (i == 0 ? 0 : 1);
    x.halves[g.ring_edge(Ring::Outer, i)] = h;
    x.halves[g.ring_edge(Ring::Inner, i)] = h;
  }
  x.halves[g.eplus()] = 2;
  x.halves[g.wedge_u0()] = 1;
  x.halves[g.wedge_v0()] = 1;
  x.halves[g.wedge_u1()] = 1;
  x.halves[g.wedge_v1()] = 1;
  return x;
}

long long support_min_cut_halves(const SubtourSolution& x, const KDonut& g) {
  // Dense symmetric weight matrix in half-units.
  int n = g.n;
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (int e = 0; e < int(g.edges.size()); ++e) {
    if (x.halves[e] <= 0) continue;
    int a = g.edges[e][0], b = g.edges[e][1];
    w[a][b] += x.halves[e];
    w[b][a] += x.halves[e];
  }

  // Stoer-Wagner with explicit phase order.
  std::vector<int> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  long long best = -1;
  while (alive.size() > 1) {
    int m = int(alive.size());
    std::vector<long long> conn(m, 0);
    std::vector<char> added(m, 0);
    std::vector<int> order;
    order.reserve(m);
    for (int it = 0; it < m; ++it) {
      int sel = -1;
      for (int j = 0; j < m; ++j)
        if (!added[j] && (sel < 0 || conn[j] > conn[sel])) sel = j;
      added[sel] = 1;
      order.push_back(sel);
      for (int j = 0; j < m; ++j)
        if (!added[j]) conn[j] += w[alive[sel]][alive[j]];
    }
    int t = order[m - 1], s = order[m - 2];
    long long cut_of_phase = 0;
    for (int j = 0; j < m; ++j)
      if (j != t) cut_of_phase += w[alive[t]][alive[j]];
    if (best < 0 || cut_of_phase < best) best = cut_of_phase;
    // merge t into s
    int vt = alive[t], vs = alive[s];
    for (int j = 0; j < m; ++j) {
      int vj = alive[j];
      if (vj == vt || vj == vs) continue;
      w[vs][vj] += w[vt][vj];
      w[vj][vs] += w[vj][vt];
    }
    alive.erase(alive.begin() + t);
  }
  return best;
}

bool check_feasible(const SubtourSolution& x, const KDonut& g) {
  if (x.halves.size() != g.edges.size())
    throw std::invalid_argument("solution/graph size mismatch");
  for (int h : x.halves)
    if (h < 0 || h > 2) return false;
  std::vector<long long> deg(g.n, 0);
  for (int e = 0; e < int(g.edges.size()); ++e) {
    deg[g.edges[e][0]] += x.halves[e];
    deg[g.edges[e][1]] += x.halves[e];
  }
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != 4) return false;
  return support_min_cut_halves(x, g) >= 4;
}

namespace {

// Incremental exact rank of integer rows (echelon basis kept fraction-free,
// rows normalized by their gcd).
struct RankTracker {
  int cols;
  std::vector<std::vector<__int128>> basis;
  std::vector<int> lead;

  explicit RankTracker(int c) : cols(c) {}

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static void normalize(std::vector<__int128>& row) {
    __int128 gc = 0;
    for (auto v : row) gc = gcd128(gc, v);
    if (gc > 1)
      for (auto& v : row) v /= gc;
  }

  bool add_row(std::vector<__int128> row) {
    for (size_t r = 0; r < basis.size(); ++r) {
      int c = lead[r];
      if (row[c] == 0) continue;
      __int128 p = basis[r][c], q = row[c];
      for (int j = 0; j < cols; ++j) row[j] = row[j] * p - basis[r][j] * q;
      normalize(row);
    }
    int pivot = -1;
    for (int j = 0; j < cols; ++j)
      if (row[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0) return false;
    if (row[pivot] < 0)
      for (auto& v : row) v = -v;
    basis.push_back(std::move(row));
    lead.push_back(pivot);
    return true;
  }

  int rank() const { return int(basis.size()); }
};

}  // namespace

bool check_extreme(const SubtourSolution& x, const KDonut& g) {
  if (g.k > 5)
    throw std::invalid_argument("check_extreme is capped at k <= 5");
  if (x.halves.size() != g.edges.size())
    throw std::invalid_argument("solution/graph size mismatch");

  std::vector<int> frac;  // edges with 0 < x_e < 1
  for (int e = 0; e < int(g.edges.size()); ++e)
    if (x.halves[e] == 1) frac.push_back(e);
  int f = int(frac.size());
  if (f == 0) return true;  // bound constraints already pin every coordinate

  std::vector<int> slot(g.edges.size(), -1);
  for (int i = 0; i < f; ++i) slot[frac[i]] = i;

  RankTracker rank(f);
  // Degree rows (always tight).
  for (int v = 0; v < g.n; ++v) {
    std::vector<__int128> row(f, 0);
    for (int e : g.adj[v])
      if (slot[e] >= 0) row[slot[e]] += 1;
    rank.add_row(std::move(row));
    if (rank.rank() == f) return true;
  }

  // Proper tight sets: enumerate subsets with vertex 0 pinned inside S.
  int rest = g.n - 1;
  for (uint64_t mask = 0; mask < (uint64_t(1) << rest); ++mask) {
    int size = 1 + __builtin_popcountll(mask);
    if (size < 2 || size > g.n - 2) continue;
    auto in_s = [&](int v) {
      return v == 0 || (mask >> (v - 1)) & 1;
    };
    long long cut = 0;
    for (int e = 0; e < int(g.edges.size()); ++e)
      if (in_s(g.edges[e][0]) != in_s(g.edges[e][1])) cut += x.halves[e];
    if (cut != 4) continue;
    std::vector<__int128> row(f, 0);
    for (int i = 0; i < f; ++i) {
      const auto& ed = g.edges[frac[i]];
      if (in_s(ed[0]) != in_s(ed[1])) row[i] = 1;
    }
    if (rank.add_row(std::move(row)) && rank.rank() == f) return true;
  }
  return false;
}

}  // namespace donut
