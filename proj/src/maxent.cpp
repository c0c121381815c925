#include "donut/maxent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "donut/errors.hpp"

namespace donut {

SupportGraph support_without_eplus(const KDonut& g, const SubtourSolution& x) {
  SupportGraph s;
  s.g = &g;
  s.slot_of_edge.assign(g.edges.size(), -1);
  for (int e = 0; e < int(g.edges.size()); ++e) {
    if (e == g.eplus() || x.halves[e] == 0) continue;
    s.slot_of_edge[e] = int(s.edge_ids.size());
    s.edge_ids.push_back(e);
    s.target.push_back(x.halves[e] / 2.0);
  }
  return s;
}

namespace {

struct DsuState {
  std::vector<int> parent;
  explicit DsuState(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
};

// Deletion/contraction recursion. Contractions are tracked by a vertex-label
// map; an edge whose endpoints share a label is a self-loop and is dropped,
// a bridge is forced into every tree.
struct TreeEnumerator {
  int n;
  std::vector<std::array<int, 2>> edges;
  std::vector<char> removed;
  std::vector<int> vmap;
  std::vector<uint32_t> out;

  bool connected_without(int skip) {
    DsuState dsu(n);
    for (int v = 0; v < n; ++v) {
      int a = dsu.find(v), b = dsu.find(vmap[v]);
      if (a != b) dsu.parent[a] = b;
    }
    for (int e = 0; e < int(edges.size()); ++e) {
      if (removed[e] || e == skip) continue;
      int a = dsu.find(edges[e][0]), b = dsu.find(edges[e][1]);
      if (a != b) dsu.parent[a] = b;
    }
    int root = dsu.find(0);
    for (int v = 1; v < n; ++v)
      if (dsu.find(v) != root) return false;
    return true;
  }

  void run(int vertices_left, uint32_t chosen) {
    if (vertices_left == 1) {
      out.push_back(chosen);
      return;
    }
    int pick = -1;
    for (int e = 0; e < int(edges.size()); ++e) {
      if (removed[e]) continue;
      if (vmap[edges[e][0]] == vmap[edges[e][1]]) {
        removed[e] = 1;
        run(vertices_left, chosen);
        removed[e] = 0;
        return;
      }
      pick = e;
      break;
    }
    if (pick < 0) return;  // disconnected remainder
    bool bridge = !connected_without(pick);
    int a = vmap[edges[pick][0]], b = vmap[edges[pick][1]];
    std::vector<int> saved = vmap;
    for (int v = 0; v < n; ++v)
      if (vmap[v] == b) vmap[v] = a;
    removed[pick] = 1;
    run(vertices_left - 1, chosen | (uint32_t(1) << pick));
    vmap = saved;
    if (!bridge) run(vertices_left, chosen);
    removed[pick] = 0;
  }
};

}  // namespace

std::vector<uint32_t> enumerate_spanning_trees(const SupportGraph& s) {
  const KDonut& g = *s.g;
  if (g.k != 3)
    throw std::invalid_argument("spanning-tree enumeration is capped at k = 3");
  if (s.slots() > 31) throw std::invalid_argument("too many support edges");

  TreeEnumerator rec;
  rec.n = g.n;
  for (int i = 0; i < s.slots(); ++i) rec.edges.push_back(s.endpoints(i));
  rec.removed.assign(rec.edges.size(), 0);
  rec.vmap.resize(g.n);
  std::iota(rec.vmap.begin(), rec.vmap.end(), 0);
  rec.run(g.n, 0);

  std::sort(rec.out.begin(), rec.out.end());
  if (std::adjacent_find(rec.out.begin(), rec.out.end()) != rec.out.end())
    throw claim_violation("tree-enumeration", "duplicate spanning tree");
  return rec.out;
}

long long matrix_tree_count(const SupportGraph& s) {
  const KDonut& g = *s.g;
  int n = g.n;
  // integer Laplacian minor determinant, fraction-free elimination
  std::vector<std::vector<__int128>> lap(n, std::vector<__int128>(n, 0));
  for (int i = 0; i < s.slots(); ++i) {
    auto [a, b] = s.endpoints(i);
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  int m = n - 1;  // delete last row/column
  int sign = 1;
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r)
      if (lap[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(lap[pivot], lap[col]);
      sign = -sign;
    }
    for (int r = col + 1; r < m; ++r) {
      for (int c = col + 1; c < m; ++c)
        lap[r][c] = (lap[r][c] * lap[col][col] - lap[r][col] * lap[col][c]) /
                    (col == 0 ? 1 : lap[col - 1][col - 1]);
      lap[r][col] = 0;
    }
  }
  __int128 det = lap[m - 1][m - 1];
  if (sign < 0) det = -det;
  return (long long)det;
}

double TreeDistribution::entropy() const {
  double h = 0;
  for (double v : p)
    if (v > 0) h -= v * std::log(v);
  return h;
}

std::vector<double> TreeDistribution::marginals(const SupportGraph& s) const {
  std::vector<double> m(s.slots(), 0.0);
  for (size_t t = 0; t < trees.size(); ++t) {
    uint32_t mask = trees[t];
    while (mask) {
      int slot = std::countr_zero(mask);
      m[slot] += p[t];
      mask &= mask - 1;
    }
  }
  return m;
}

TreeDistribution sampler_distribution(const KDonut& g, const SupportGraph& s,
                                      const std::vector<uint32_t>& trees) {
  TreeDistribution d;
  d.trees = trees;
  d.p.assign(trees.size(), 0.0);
  uint64_t total = uint64_t(1) << (2 * g.k + 1);
  double w = 1.0 / double(total);
  for_each_one_tree(g, [&](const OneTree& t) {
    uint32_t mask = 0;
    for (int e : t.edges) {
      if (e == g.eplus()) continue;
      int slot = s.slot_of_edge[e];
      if (slot < 0)
        throw claim_violation("sampler-support",
                              "sampled tree uses a zero-value edge", g.k,
                              t.choice.to_string());
      mask |= uint32_t(1) << slot;
    }
    auto it = std::lower_bound(d.trees.begin(), d.trees.end(), mask);
    if (it == d.trees.end() || *it != mask)
      throw claim_violation("sampler-support",
                            "sampled tree missing from the enumeration", g.k,
                            t.choice.to_string());
    d.p[it - d.trees.begin()] += w;
  });
  return d;
}

namespace {

// Solve the small SPD-ish system (h + ridge I) d = rhs in place.
std::vector<double> solve_linear(std::vector<std::vector<double>> h,
                                 std::vector<double> rhs, double ridge) {
  int n = int(rhs.size());
  for (int i = 0; i < n; ++i) h[i][i] += ridge;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(h[r][c]) > std::abs(h[piv][c])) piv = r;
    std::swap(h[piv], h[c]);
    std::swap(rhs[piv], rhs[c]);
    for (int r = c + 1; r < n; ++r) {
      double f = h[r][c] / h[c][c];
      for (int j = c; j < n; ++j) h[r][j] -= f * h[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<double> d(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double v = rhs[r];
    for (int j = r + 1; j < n; ++j) v -= h[r][j] * d[j];
    d[r] = v / h[r][r];
  }
  return d;
}

}  // namespace

MaxEntResult solve_max_entropy(const SupportGraph& s,
                               const std::vector<uint32_t>& trees,
                               std::optional<uint64_t> perturb_seed) {
  int m = s.slots();
  size_t nt = trees.size();
  if (nt == 0) throw std::invalid_argument("empty tree family");

  // Gibbs weights p_T ∝ exp(Σ_{e∈T} λ_e). The targets sit on the boundary
  // of the marginal polytope, so the optimal multipliers recede to infinity
  // and plain per-edge scaling stalls at a 1/sweeps rate. A few scaling
  // sweeps warm-start damped Newton on the dual logZ(λ) - λ·x, whose steps
  // keep growing the receding multipliers and shrink the residual
  // geometrically.
  std::vector<double> lambda(m, 0.0);
  if (perturb_seed) {
    for (int e = 0; e < m; ++e)
      lambda[e] = (double(mix64(*perturb_seed + e) >> 11) /
                       double(uint64_t(1) << 53) -
                   0.5);
  }

  std::vector<double> lw(nt, 0.0), prob(nt, 0.0);
  auto recompute_lw = [&] {
    for (size_t t = 0; t < nt; ++t) {
      double v = 0;
      uint32_t mask = trees[t];
      while (mask) {
        v += lambda[std::countr_zero(mask)];
        mask &= mask - 1;
      }
      lw[t] = v;
    }
  };
  auto log_partition = [&] {
    double mx = *std::max_element(lw.begin(), lw.end());
    double z = 0;
    for (size_t t = 0; t < nt; ++t) z += std::exp(lw[t] - mx);
    return mx + std::log(z);
  };
  auto refresh_prob = [&] {
    double logz = log_partition();
    for (size_t t = 0; t < nt; ++t) prob[t] = std::exp(lw[t] - logz);
  };
  auto marginals_of_prob = [&](std::vector<double>& marg) {
    std::fill(marg.begin(), marg.end(), 0.0);
    for (size_t t = 0; t < nt; ++t) {
      uint32_t mask = trees[t];
      while (mask) {
        marg[std::countr_zero(mask)] += prob[t];
        mask &= mask - 1;
      }
    }
  };

  const double kResidTol = 1e-8;
  const double kObjTol = 1e-12;
  const int kBudget = 1000000;
  const int kWarmupSweeps = 30;

  MaxEntResult res;
  std::vector<double> marg(m, 0.0);
  recompute_lw();

  // warm start: capped iterative scaling
  for (int sweep = 0; sweep < kWarmupSweeps; ++sweep) {
    for (int e = 0; e < m; ++e) {
      refresh_prob();
      double me = 0;
      for (size_t t = 0; t < nt; ++t)
        if (trees[t] & (uint32_t(1) << e)) me += prob[t];
      double x = s.target[e];
      if (std::abs(me - x) <= 1e-13) continue;
      double step;
      if (x >= 1.0 || me >= 1.0)
        step = x >= 1.0 ? 40.0 : -40.0;
      else if (x <= 0.0 || me <= 0.0)
        step = x <= 0.0 ? -40.0 : 40.0;
      else
        step = std::clamp(std::log(x * (1 - me) / ((1 - x) * me)), -40.0, 40.0);
      lambda[e] += step;
      for (size_t t = 0; t < nt; ++t)
        if (trees[t] & (uint32_t(1) << e)) lw[t] += step;
    }
    ++res.sweeps;
  }

  auto dual_value = [&] {
    double d = 0;
    for (int e = 0; e < m; ++e) d += lambda[e] * s.target[e];
    return log_partition() - d;
  };

  double prev_entropy = -1;
  std::vector<std::vector<double>> hess(m, std::vector<double>(m, 0.0));
  std::vector<double> direction;
  for (int iter = res.sweeps; iter < kBudget; ++iter) {
    refresh_prob();
    marginals_of_prob(marg);
    double max_resid = 0;
    for (int e = 0; e < m; ++e)
      max_resid = std::max(max_resid, std::abs(marg[e] - s.target[e]));
    double entropy = 0;
    for (double v : prob)
      if (v > 0) entropy -= v * std::log(v);
    res.sweeps = iter;
    res.max_residual = max_resid;
    if (max_resid <= kResidTol && prev_entropy >= 0 &&
        std::abs(entropy - prev_entropy) <= kObjTol) {
      res.converged = true;
      break;
    }
    prev_entropy = entropy;

    // Hessian of the dual: covariance of the edge indicators.
    for (auto& row : hess) std::fill(row.begin(), row.end(), 0.0);
    for (size_t t = 0; t < nt; ++t) {
      if (prob[t] <= 0) continue;
      uint32_t mask = trees[t];
      int slots_in[16];
      int cnt = 0;
      while (mask) {
        slots_in[cnt++] = std::countr_zero(mask);
        mask &= mask - 1;
      }
      for (int i = 0; i < cnt; ++i)
        for (int j = i; j < cnt; ++j) hess[slots_in[i]][slots_in[j]] += prob[t];
    }
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        double v = hess[i][j] - marg[i] * marg[j];
        hess[i][j] = v;
        hess[j][i] = v;
      }
    std::vector<double> rhs(m);
    for (int e = 0; e < m; ++e) rhs[e] = s.target[e] - marg[e];
    direction = solve_linear(hess, rhs, 1e-12);
    double cap = 0;
    for (double v : direction) cap = std::max(cap, std::abs(v));
    if (cap > 200.0)
      for (double& v : direction) v *= 200.0 / cap;

    double g0 = dual_value();
    double slope = 0;
    for (int e = 0; e < m; ++e) slope -= rhs[e] * direction[e];  // ∇g·d
    double tau = 1.0;
    std::vector<double> saved = lambda;
    for (int bt = 0; bt < 60; ++bt) {
      for (int e = 0; e < m; ++e) lambda[e] = saved[e] + tau * direction[e];
      recompute_lw();
      if (dual_value() <= g0 + 1e-4 * tau * slope) break;
      tau /= 2;
    }
  }

  refresh_prob();
  res.dist.trees = trees;
  res.dist.p = prob;
  marginals_of_prob(marg);
  double mr = 0;
  for (int e = 0; e < m; ++e)
    mr = std::max(mr, std::abs(marg[e] - s.target[e]));
  res.max_residual = mr;
  return res;
}

double total_variation(const TreeDistribution& p, const TreeDistribution& q) {
  if (p.trees != q.trees)
    throw std::invalid_argument("distributions live on different universes");
  double s = 0;
  for (size_t t = 0; t < p.p.size(); ++t) s += std::abs(p.p[t] - q.p[t]);
  return s / 2;
}

bool check_tight_set_factorization(const SupportGraph& s,
                                   const TreeDistribution& p,
                                   const std::vector<int>& set_vertices,
                                   double tol) {
  const KDonut& g = *s.g;
  std::vector<char> in_set(g.n, 0);
  for (int v : set_vertices) in_set[v] = 1;

  uint32_t inside_mask = 0;
  double xe_inside = 0;
  for (int e = 0; e < s.slots(); ++e) {
    auto [a, b] = s.endpoints(e);
    if (in_set[a] && in_set[b]) {
      inside_mask |= uint32_t(1) << e;
      xe_inside += s.target[e];
    }
  }
  int expect = int(set_vertices.size()) - 1;
  if (std::abs(xe_inside - expect) > 1e-9)
    throw std::invalid_argument("set is not tight: x(E(S)) != |S| - 1");

  // trees with the wrong inside-edge count carry (numerically) no mass
  double bad_mass = 0;
  for (size_t t = 0; t < p.trees.size(); ++t)
    if (std::popcount(p.trees[t] & inside_mask) != expect) bad_mass += p.p[t];
  if (bad_mass > tol) return false;

  // factor the distribution across the split
  std::vector<uint32_t> inner, outer;
  std::vector<double> pin, pout;
  auto accumulate = [](std::vector<uint32_t>& keys, std::vector<double>& vals,
                       uint32_t key, double v) {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    size_t pos = it - keys.begin();
    if (it == keys.end() || *it != key) {
      keys.insert(it, key);
      vals.insert(vals.begin() + pos, v);
    } else {
      vals[pos] += v;
    }
  };
  for (size_t t = 0; t < p.trees.size(); ++t) {
    if (p.p[t] <= 0) continue;
    accumulate(inner, pin, p.trees[t] & inside_mask, p.p[t]);
    accumulate(outer, pout, p.trees[t] & ~inside_mask, p.p[t]);
  }
  // compare every product atom against the joint
  for (size_t i = 0; i < inner.size(); ++i) {
    for (size_t o = 0; o < outer.size(); ++o) {
      uint32_t mask = inner[i] | outer[o];
      auto it = std::lower_bound(p.trees.begin(), p.trees.end(), mask);
      double joint = 0;
      if (it != p.trees.end() && *it == mask) joint = p.p[it - p.trees.begin()];
      if (std::abs(joint - pin[i] * pout[o]) > tol) return false;
    }
  }
  return true;
}

}  // namespace donut
