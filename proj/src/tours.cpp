#include "donut/tours.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "donut/errors.hpp"

namespace donut {

EulerianSubgraph EulerianSubgraph::from_edges(int n, MatchKind kind,
                                              std::vector<EulerEdge> edges) {
  EulerianSubgraph a;
  a.matching_kind = kind;
  a.n = n;
  a.edges = std::move(edges);
  a.adj.assign(n, {});
  a.degree.assign(n, 0);
  for (int e = 0; e < int(a.edges.size()); ++e) {
    a.adj[a.edges[e].a].push_back(e);
    a.adj[a.edges[e].b].push_back(e);
    ++a.degree[a.edges[e].a];
    ++a.degree[a.edges[e].b];
    a.cost += a.edges[e].cost;
  }
  for (int v = 0; v < n; ++v)
    if (a.degree[v] % 2)
      throw claim_violation("parity-violation",
                            "vertex " + std::to_string(v) + " has odd degree");
  // connectivity over vertices with positive degree
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v)
    if (a.degree[v] > 0) start = v;
  if (start >= 0) {
    std::vector<char> seen(n, 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : a.adj[v]) {
        int u = a.other(e, v);
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (a.degree[v] > 0 && !seen[v])
        throw claim_violation("euler-subgraph", "support is disconnected");
  }
  return a;
}

EulerianSubgraph eulerian_subgraph(const KDonut& g, const Metric& m,
                                   const OneTree& t,
                                   const PerfectMatching& pm) {
  std::vector<EulerEdge> edges;
  edges.reserve(t.edges.size() + pm.pairs.size());
  for (int e : t.edges)
    edges.push_back({g.edges[e][0], g.edges[e][1], 1, false, -1});
  for (const auto& p : pm.pairs) {
    EulerEdge ee{p[0], p[1], m(p[0], p[1]), true, -1};
    if (ee.cost == 2) {
      // record a realizing midpoint (lowest-id common neighbor)
      for (int e1 : g.adj[p[0]]) {
        int mid = g.other(e1, p[0]);
        if (g.edge_id(mid, p[1]) >= 0 && (ee.via < 0 || mid < ee.via))
          ee.via = mid;
      }
    }
    edges.push_back(ee);
  }
  auto a = EulerianSubgraph::from_edges(g.n, pm.kind, std::move(edges));
  if (a.cost != t.cost() + pm.cost)
    throw claim_violation("euler-subgraph", "cost mismatch", g.k,
                          t.choice.to_string());
  return a;
}

namespace {

enum class Side { Inc, Dec };  // circuit side by pair index direction

// Which side of vertex x (a u/v vertex) edge e lies on. Ring and matching
// edges join consecutive pair positions; the spoke at an odd position
// belongs to the block ahead of it, at an even position to the block behind;
// the envelope edges sit between positions 0 and 1.
Side edge_side(const KDonut& g, const EulerianSubgraph& a, int e, int x) {
  int y = a.other(e, x);
  int px = g.pair_index(x);
  if (g.is_w(y)) {
    if (px == 0) return Side::Inc;
    if (px == 1) return Side::Dec;
    throw claim_violation("circuit-structure", "w edge at position > 1");
  }
  int py = g.pair_index(y);
  if (px == py) return px % 2 ? Side::Inc : Side::Dec;  // spoke
  if (g.mod_pos(px + 1) == py) return Side::Inc;
  if (g.mod_pos(py + 1) == px) return Side::Dec;
  throw claim_violation("circuit-structure", "edge spans non-adjacent positions");
}

bool is_eplus(const EulerEdge& e) {
  return !e.from_matching && e.a == KDonut::w0 && e.b == KDonut::w1;
}

// Trace the closed walk through e0 given a "next edge" rule.
template <typename NextFn>
Circuit trace_circuit(const EulerianSubgraph& a, int e0,
                      std::vector<char>& used, NextFn next) {
  Circuit c;
  int v = a.edges[e0].a;
  c.vertices.push_back(v);
  int e = e0;
  do {
    used[e] = 1;
    c.edge_ids.push_back(e);
    v = a.other(e, v);
    c.vertices.push_back(v);
    e = next(v, e);
  } while (e != e0);
  if (v != a.edges[e0].a)
    throw claim_violation("circuit-structure", "circuit trace did not close");
  return c;
}

CircuitDecomposition classify_m1(const KDonut& g, const EulerianSubgraph& a) {
  // Pair the four edges at every degree-4 vertex by side; each circuit then
  // follows same-side partners through the junctions.
  std::vector<std::vector<std::pair<int, int>>> partner(a.n);
  for (int v = 0; v < a.n; ++v) {
    if (a.degree[v] != 4) continue;
    if (g.is_w(v))
      throw claim_violation("circuit-structure", "degree-4 w vertex", g.k);
    std::vector<int> inc, dec;
    for (int e : a.adj[v])
      (edge_side(g, a, e, v) == Side::Inc ? inc : dec).push_back(e);
    if (inc.size() != 2 || dec.size() != 2)
      throw claim_violation("circuit-structure",
                            "junction sides do not split 2+2", g.k);
    partner[v] = {{inc[0], inc[1]}, {inc[1], inc[0]},
                  {dec[0], dec[1]}, {dec[1], dec[0]}};
  }
  auto next = [&](int v, int e) {
    if (a.degree[v] == 2)
      return a.adj[v][0] == e ? a.adj[v][1] : a.adj[v][0];
    for (auto& pr : partner[v])
      if (pr.first == e) return pr.second;
    throw claim_violation("circuit-structure", "no partner edge");
  };

  CircuitDecomposition d;
  d.kind = MatchKind::M1;
  d.circuit_of_edge.assign(a.edges.size(), -1);
  std::vector<char> used(a.edges.size(), 0);
  for (int e0 = 0; e0 < int(a.edges.size()); ++e0) {
    if (used[e0]) continue;
    Circuit c = trace_circuit(a, e0, used, next);
    for (int e : c.edge_ids) {
      c.special = c.special || is_eplus(a.edges[e]);
      d.circuit_of_edge[e] = int(d.circuits.size());
    }
    for (size_t i = 0; i + 1 < c.vertices.size(); ++i)
      if (a.degree[c.vertices[i]] == 4) c.junctions.push_back(c.vertices[i]);
    std::sort(c.junctions.begin(), c.junctions.end());
    c.junctions.erase(std::unique(c.junctions.begin(), c.junctions.end()),
                      c.junctions.end());
    d.circuits.push_back(std::move(c));
  }

  int special = -1;
  for (int i = 0; i < int(d.circuits.size()); ++i) {
    const Circuit& c = d.circuits[i];
    if (c.special) {
      if (special >= 0)
        throw claim_violation("circuit-structure", "two special circuits", g.k);
      special = i;
      if (c.length() != 4 && c.length() != 7 && c.length() != 10)
        throw claim_violation("circuit-structure",
                              "special circuit length " +
                                  std::to_string(c.length()), g.k);
    } else if (c.length() != 2 && c.length() != 5 && c.length() != 8) {
      throw claim_violation("circuit-structure",
                            "circuit length " + std::to_string(c.length()), g.k);
    }
    if (c.junctions.size() != 2)
      throw claim_violation("circuit-structure",
                            "circuit does not have exactly 2 junctions", g.k);
  }
  if (special < 0)
    throw claim_violation("circuit-structure", "no special circuit", g.k);

  // Necklace order: start at the special circuit and repeatedly cross the
  // junction where the current circuit lies on the increasing side.
  auto circuit_edge_at = [&](const Circuit& c, int v) {
    for (int e : c.edge_ids)
      if (a.edges[e].a == v || a.edges[e].b == v) return e;
    throw claim_violation("circuit-structure", "junction not on circuit");
  };
  std::vector<Circuit> ordered;
  std::vector<int> order_index(d.circuits.size(), -1);
  int cur = special;
  for (size_t step = 0; step < d.circuits.size(); ++step) {
    if (order_index[cur] >= 0)
      throw claim_violation("circuit-structure", "necklace revisits a circuit",
                            g.k);
    order_index[cur] = int(step);
    ordered.push_back(d.circuits[cur]);
    int exit_junction = -1;
    for (int j : d.circuits[cur].junctions) {
      int e = circuit_edge_at(d.circuits[cur], j);
      if (edge_side(g, a, e, j) == Side::Inc) {
        if (exit_junction >= 0)
          throw claim_violation("circuit-structure",
                                "circuit is on the increasing side of both "
                                "junctions", g.k);
        exit_junction = j;
      }
    }
    if (exit_junction < 0)
      throw claim_violation("circuit-structure", "no exit junction", g.k);
    int nxt = -1;
    for (int e : a.adj[exit_junction])
      if (edge_side(g, a, e, exit_junction) == Side::Dec)
        nxt = d.circuit_of_edge[e];
    cur = nxt;
  }
  if (cur != special)
    throw claim_violation("circuit-structure", "necklace does not close", g.k);

  // Doubled edges are never adjacent on the necklace.
  int r = int(ordered.size());
  for (int i = 0; i < r; ++i)
    if (ordered[i].length() == 2 && ordered[(i + 1) % r].length() == 2)
      throw claim_violation("circuit-structure", "adjacent doubled edges", g.k);

  std::vector<int> remap(d.circuits.size());
  // circuit_of_edge now refers to pre-order indices; rebuild against ordered.
  for (int i = 0; i < int(d.circuits.size()); ++i) remap[i] = order_index[i];
  for (auto& ce : d.circuit_of_edge) ce = remap[ce];
  d.circuits = std::move(ordered);
  return d;
}

CircuitDecomposition classify_m2(const KDonut& g, const EulerianSubgraph& a) {
  CircuitDecomposition d;
  d.kind = MatchKind::M2;
  d.circuit_of_edge.assign(a.edges.size(), -1);
  std::vector<char> hanging(a.edges.size(), 0);
  std::vector<Circuit> hangers;

  for (int v = 0; v < a.n; ++v) {
    if (a.degree[v] != 4) continue;
    if (g.is_w(v))
      throw claim_violation("circuit-structure", "degree-4 w vertex", g.k);
    int match = -1;
    for (int e : a.adj[v])
      if (a.edges[e].from_matching) {
        if (match >= 0)
          throw claim_violation("circuit-structure",
                                "two matching edges at a vertex", g.k);
        match = e;
      }
    if (match < 0)
      throw claim_violation("circuit-structure",
                            "degree-4 vertex without a matching edge", g.k);
    Circuit c;
    c.junctions.push_back(v);
    int y = a.other(match, v);
    c.vertices = {v, y};
    c.edge_ids = {match};
    if (a.edges[match].cost == 1) {
      // doubled edge: the parallel tree copy closes the circuit
      int mate = -1;
      for (int e : a.adj[v])
        if (e != match && !a.edges[e].from_matching && a.other(e, v) == y)
          mate = e;
      if (mate < 0)
        throw claim_violation("circuit-structure",
                              "cost-1 matching edge without a parallel tree "
                              "edge", g.k);
      c.edge_ids.push_back(mate);
      c.vertices.push_back(v);
    } else {
      // triangle: matching edge, a ring edge, and the block's spoke
      if (a.degree[y] != 2)
        throw claim_violation("circuit-structure", "triangle tip has degree 4",
                              g.k);
      int ring = a.adj[y][0] == match ? a.adj[y][1] : a.adj[y][0];
      int mid = a.other(ring, y);
      if (a.degree[mid] != 2)
        throw claim_violation("circuit-structure", "triangle mid has degree 4",
                              g.k);
      int spoke = a.adj[mid][0] == ring ? a.adj[mid][1] : a.adj[mid][0];
      if (a.other(spoke, mid) != v)
        throw claim_violation("circuit-structure", "triangle does not close",
                              g.k);
      c.edge_ids.push_back(ring);
      c.edge_ids.push_back(spoke);
      c.vertices.push_back(mid);
      c.vertices.push_back(v);
    }
    for (int e : c.edge_ids) {
      if (hanging[e])
        throw claim_violation("circuit-structure", "overlapping hanging "
                              "circuits", g.k);
      hanging[e] = 1;
    }
    hangers.push_back(std::move(c));
  }

  // The rest must form one large cycle through every remaining vertex.
  std::vector<char> used(a.edges.size(), 0);
  for (int e = 0; e < int(a.edges.size()); ++e) used[e] = hanging[e];
  auto next = [&](int v, int e) {
    int found = -1, count = 0;
    for (int f : a.adj[v]) {
      if (hanging[f]) continue;
      ++count;
      if (f != e) found = f;
    }
    if (count != 2 || found < 0)
      throw claim_violation("circuit-structure",
                            "large cycle is not 2-regular", g.k);
    return found;
  };
  int e0 = -1;
  for (int e : a.adj[KDonut::w0])
    if (!hanging[e]) e0 = e;
  if (e0 < 0)
    throw claim_violation("circuit-structure", "w0 not on the large cycle",
                          g.k);
  Circuit large = trace_circuit(a, e0, used, next);
  large.special = true;
  for (size_t i = 0; i + 1 < large.vertices.size(); ++i)
    if (a.degree[large.vertices[i]] == 4)
      large.junctions.push_back(large.vertices[i]);
  size_t covered = large.edge_ids.size();
  for (const auto& h : hangers) covered += h.edge_ids.size();
  if (covered != a.edges.size())
    throw claim_violation("circuit-structure",
                          "large cycle plus hanging circuits do not cover the "
                          "multigraph", g.k);
  if (large.junctions.size() != hangers.size())
    throw claim_violation("circuit-structure",
                          "junction off the large cycle", g.k);
  bool has_eplus = false;
  for (int e : large.edge_ids) has_eplus = has_eplus || is_eplus(a.edges[e]);
  if (!has_eplus)
    throw claim_violation("circuit-structure", "{w0,w1} not on the large "
                          "cycle", g.k);

  std::sort(hangers.begin(), hangers.end(),
            [&](const Circuit& x, const Circuit& y) {
              return g.pair_index(x.junctions[0]) <
                     g.pair_index(y.junctions[0]);
            });
  d.circuits.push_back(std::move(large));
  for (auto& h : hangers) d.circuits.push_back(std::move(h));
  for (int i = 0; i < int(d.circuits.size()); ++i)
    for (int e : d.circuits[i].edge_ids) d.circuit_of_edge[e] = i;
  return d;
}

}  // namespace

CircuitDecomposition classify_circuits(const KDonut& g,
                                       const EulerianSubgraph& a) {
  if (a.matching_kind == MatchKind::M1) return classify_m1(g, a);
  if (a.matching_kind == MatchKind::M2) return classify_m2(g, a);
  throw std::invalid_argument("circuit structure is defined for M1/M2 only");
}

Tour Tour::from_walk(std::vector<int> vertices, const Metric& m) {
  if (vertices.size() < 2 || vertices.front() != vertices.back())
    throw std::invalid_argument("tour must be a closed walk");
  Tour t;
  t.vertices = std::move(vertices);
  for (size_t i = 0; i + 1 < t.vertices.size(); ++i)
    t.cost += m(t.vertices[i], t.vertices[i + 1]);
  return t;
}

Tour b_tour_m1(const KDonut& g, const EulerianSubgraph& a) {
  if (a.matching_kind != MatchKind::M1)
    throw std::invalid_argument("b_tour_m1 requires an M1 subgraph");
  CircuitDecomposition d = classify_circuits(g, a);
  const int special = 0;  // necklace order starts at the special circuit

  // t_0: the degree-4 vertex of the special circuit reached from w1.
  int e = -1;
  for (int f : a.adj[KDonut::w1])
    if (!is_eplus(a.edges[f])) e = f;
  int t0 = a.other(e, KDonut::w1);
  while (a.degree[t0] == 2) {
    e = a.adj[t0][0] == e ? a.adj[t0][1] : a.adj[t0][0];
    t0 = a.other(e, t0);
  }

  Ring memory = g.ring(t0);  // side of the last long-circuit edge
  std::vector<char> used(a.edges.size(), 0);
  size_t remaining = a.edges.size();
  std::vector<int> walk{t0};
  int cur = t0;
  auto deadlock = [&](const char* what) {
    return claim_violation("b-tour-m1", what, g.k);
  };
  while (remaining > 0) {
    std::vector<int> cand;
    for (int f : a.adj[cur])
      if (!used[f]) cand.push_back(f);
    int chosen = -1;
    if (cand.empty()) throw deadlock("stuck before covering every edge");
    if (a.degree[cur] == 2 || cand.size() == 1) {
      chosen = cand[0];
      if (cand.size() != 1) throw deadlock("unexpected branching");
    } else if (cur == t0) {
      // rule 1: continue inside the special circuit
      for (int f : cand) {
        if (d.circuit_of_edge[f] != special) continue;
        if (chosen < 0 || a.other(f, cur) < a.other(chosen, cur) ||
            (a.other(f, cur) == a.other(chosen, cur) &&
             !a.edges[f].from_matching && a.edges[chosen].from_matching))
          chosen = f;
      }
      if (chosen < 0) throw deadlock("no special-circuit edge at t0");
    } else {
      if (cand.size() != 3) throw deadlock("first visit with edges missing");
      // C: the circuit on the decreasing side of cur
      int c_idx = -1;
      for (int f : a.adj[cur])
        if (edge_side(g, a, f, cur) == Side::Dec) c_idx = d.circuit_of_edge[f];
      const Circuit& c = d.circuits[c_idx];
      if (c.length() == 2) {
        // rule 2: immediately traverse the doubled edge
        for (int f : cand)
          if (d.circuit_of_edge[f] == c_idx &&
              (chosen < 0 || !a.edges[f].from_matching))
            chosen = f;
        if (chosen < 0) throw deadlock("no doubled edge available");
      } else {
        // rule 3: alternate the visited side of long circuits
        if (c.special || (c.length() != 5 && c.length() != 8))
          throw deadlock("clockwise circuit is not a long circuit");
        int e_outer = -1, e_inner = -1;
        for (int f : cand) {
          if (d.circuit_of_edge[f] != c_idx) continue;
          int y = a.other(f, cur);
          if (g.is_w(y)) throw deadlock("long circuit touches w");
          (g.ring(y) == Ring::Outer ? e_outer : e_inner) = f;
        }
        if (e_outer < 0 || e_inner < 0)
          throw deadlock("long circuit lacks an outer/inner choice");
        chosen = memory == Ring::Outer ? e_inner : e_outer;
      }
    }
    used[chosen] = 1;
    --remaining;
    int len = d.circuits[d.circuit_of_edge[chosen]].length();
    if (len == 5 || len == 8) memory = g.ring(cur);
    cur = a.other(chosen, cur);
    walk.push_back(cur);
  }
  if (cur != t0) throw deadlock("tour did not return to t0");
  Tour r;
  r.vertices = std::move(walk);
  r.cost = a.cost;
  return r;
}

Tour b_tour_m2(const KDonut& g, const EulerianSubgraph& a) {
  if (a.matching_kind != MatchKind::M2)
    throw std::invalid_argument("b_tour_m2 requires an M2 subgraph");
  CircuitDecomposition d = classify_circuits(g, a);
  const Circuit& large = d.circuits[0];

  // Orient the large cycle clockwise (decreasing pair index). Positions get
  // angle 6p, the envelope vertices sit between positions 0 and 1.
  auto phi = [&](int v) {
    if (v == KDonut::w0) return 2;
    if (v == KDonut::w1) return 4;
    return 6 * g.pair_index(v);
  };
  int total = 0, span = 12 * g.k;
  for (size_t i = 0; i + 1 < large.vertices.size(); ++i) {
    int delta = (phi(large.vertices[i + 1]) - phi(large.vertices[i])) % span;
    if (delta <= -span / 2) delta += span;
    if (delta > span / 2) delta -= span;
    total += delta;
  }
  if (total != span && total != -span)
    throw claim_violation("b-tour-m2", "large cycle does not wind once", g.k);
  std::vector<int> cyc(large.vertices.begin(), large.vertices.end() - 1);
  std::vector<int> eds = large.edge_ids;
  if (total > 0) {  // reverse to clockwise
    std::reverse(cyc.begin() + 1, cyc.end());
    std::reverse(eds.begin(), eds.end());
  }

  // Start: lowest-index outer-ring degree-2 vertex on the large cycle
  // (falling back to the inner ring, then w0, for the rare trees whose outer
  // vertices all sit on hanging circuits).
  std::vector<char> on_cycle(a.n, 0);
  for (int v : cyc) on_cycle[v] = 1;
  int t0 = -1;
  for (int i = 0; i < 2 * g.k && t0 < 0; ++i)
    if (on_cycle[g.outer(i)] && a.degree[g.outer(i)] == 2) t0 = g.outer(i);
  for (int i = 0; i < 2 * g.k && t0 < 0; ++i)
    if (on_cycle[g.inner(i)] && a.degree[g.inner(i)] == 2) t0 = g.inner(i);
  if (t0 < 0) t0 = KDonut::w0;

  size_t r0 = std::find(cyc.begin(), cyc.end(), t0) - cyc.begin();
  std::rotate(cyc.begin(), cyc.begin() + r0, cyc.end());
  std::rotate(eds.begin(), eds.begin() + r0, eds.end());

  std::vector<char> used(a.edges.size(), 0);
  std::vector<char> visited(a.n, 0);
  std::vector<int> walk{t0};
  size_t L = cyc.size();
  for (size_t i = 0; i < L; ++i) {
    int v = cyc[i];
    if (a.degree[v] == 4 && !visited[v]) {
      // the single rule: take the adjacent matching edge first
      int match = -1;
      for (int f : a.adj[v])
        if (a.edges[f].from_matching) match = f;
      if (match < 0)
        throw claim_violation("b-tour-m2", "junction without matching edge",
                              g.k);
      const Circuit& h = d.circuits[d.circuit_of_edge[match]];
      // h's stored walk starts at the junction via the matching edge
      if (h.vertices.front() != v || h.edge_ids.front() != match)
        throw claim_violation("b-tour-m2", "hanging circuit walk misaligned",
                              g.k);
      for (size_t j = 0; j < h.edge_ids.size(); ++j) {
        used[h.edge_ids[j]] = 1;
        walk.push_back(h.vertices[j + 1]);
      }
    }
    visited[v] = 1;
    used[eds[i]] = 1;
    walk.push_back(cyc[(i + 1) % L]);
  }
  for (char u : used)
    if (!u) throw claim_violation("b-tour-m2", "edge left untraversed", g.k);
  if (walk.back() != t0)
    throw claim_violation("b-tour-m2", "tour did not close", g.k);
  Tour r;
  r.vertices = std::move(walk);
  r.cost = a.cost;
  return r;
}

Tour hierholzer_tour(const EulerianSubgraph& a, uint64_t seed) {
  uint64_t key = mix64(seed ^ 0x7045317cull);
  uint64_t counter = 0;
  auto rnd = [&](uint64_t bound) {
    return mix64(key + 0x9e3779b97f4a7c15ULL * ++counter) % bound;
  };
  int start = -1;
  for (int v = 0; v < a.n && start < 0; ++v)
    if (a.degree[v] > 0) start = v;
  if (start < 0) throw std::invalid_argument("empty multigraph");

  std::vector<char> used(a.edges.size(), 0);
  std::vector<int> stack{start}, path;
  std::vector<int> cand;
  while (!stack.empty()) {
    int v = stack.back();
    cand.clear();
    for (int f : a.adj[v])
      if (!used[f]) cand.push_back(f);
    if (cand.empty()) {
      path.push_back(v);
      stack.pop_back();
    } else {
      int f = cand[cand.size() == 1 ? 0 : rnd(cand.size())];
      used[f] = 1;
      stack.push_back(a.other(f, v));
    }
  }
  std::reverse(path.begin(), path.end());
  if (path.size() != a.edges.size() + 1)
    throw claim_violation("hierholzer", "multigraph is not Eulerian");
  Tour r;
  r.vertices = std::move(path);
  r.cost = a.cost;
  return r;
}

HamiltonianCycle shortcut(const Tour& r, const Metric& m) {
  if (r.vertices.size() < 2 || r.vertices.front() != r.vertices.back())
    throw std::invalid_argument("tour must be a closed walk");
  std::vector<char> seen(m.n, 0);
  HamiltonianCycle h;
  for (size_t i = 0; i + 1 < r.vertices.size(); ++i) {
    int v = r.vertices[i];
    if (!seen[v]) {
      seen[v] = 1;
      h.vertices.push_back(v);
    }
  }
  for (int v = 0; v < m.n; ++v)
    if (!seen[v])
      throw std::invalid_argument("tour does not cover every vertex");
  for (size_t i = 0; i < h.vertices.size(); ++i)
    h.cost += m(h.vertices[i], h.vertices[(i + 1) % h.vertices.size()]);
  if (h.cost > r.cost)
    throw claim_violation("shortcut", "cost increased under the metric");
  return h;
}

std::vector<int> shortcut_skip_runs(const Tour& r) {
  std::vector<int> runs;
  std::vector<char> seen;
  int maxv = 0;
  for (int v : r.vertices) maxv = std::max(maxv, v);
  seen.assign(maxv + 1, 0);
  seen[r.vertices[0]] = 1;
  int run = 0;
  for (size_t i = 1; i + 1 < r.vertices.size(); ++i) {
    int v = r.vertices[i];
    if (seen[v]) {
      ++run;
    } else {
      if (run) runs.push_back(run);
      run = 0;
      seen[v] = 1;
    }
  }
  if (run) runs.push_back(run);
  return runs;
}

}  // namespace donut
