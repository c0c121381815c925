#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "donut/graph.hpp"
#include "donut/matching.hpp"
#include "donut/sampler.hpp"

namespace donut {

// One edge instance of the Eulerian multigraph T ⊎ M. Matching pairs at
// metric distance 2 stay single cost-2 edges (so degrees match the circuit
// pictures); `via` records a realizing midpoint for such pairs.
struct EulerEdge {
  int a = 0, b = 0;
  int cost = 1;
  bool from_matching = false;
  int via = -1;  // midpoint of a 2-edge realization, -1 if direct
};

struct EulerianSubgraph {
  MatchKind matching_kind = MatchKind::Oracle;
  int n = 0;
  std::vector<EulerEdge> edges;
  std::vector<std::vector<int>> adj;  // vertex -> edge instance ids
  std::vector<int> degree;
  long long cost = 0;

  int other(int e, int v) const {
    return edges[e].a == v ? edges[e].b : edges[e].a;
  }

  // Validates even degrees (parity violation otherwise) and connectivity.
  static EulerianSubgraph from_edges(int n, MatchKind kind,
                                     std::vector<EulerEdge> edges);
};

EulerianSubgraph eulerian_subgraph(const KDonut& g, const Metric& m,
                                   const OneTree& t, const PerfectMatching& pm);

struct Circuit {
  std::vector<int> edge_ids;   // instances, in walk order
  std::vector<int> vertices;   // closed walk, vertices[0] repeated at end
  bool special = false;        // contains {w0,w1}
  std::vector<int> junctions;  // degree-4 vertices on this circuit
  int length() const { return int(edge_ids.size()); }
};

// For M1: the circuits arranged around the donut, necklace order starting at
// the special circuit. For M2: circuits[0] is the one large cycle, followed
// by the hanging circuits in donut order. Shape violations (a circuit length
// outside the claimed sets, adjacent doubled edges, a malformed necklace)
// throw claim_violation: this decomposition is a test oracle.
struct CircuitDecomposition {
  MatchKind kind = MatchKind::M1;
  std::vector<Circuit> circuits;
  std::vector<int> circuit_of_edge;  // edge instance -> circuit index
};

CircuitDecomposition classify_circuits(const KDonut& g,
                                       const EulerianSubgraph& a);

// A closed walk using every multigraph edge exactly once.
struct Tour {
  std::vector<int> vertices;  // front() == back()
  long long cost = 0;

  static Tour from_walk(std::vector<int> vertices, const Metric& m);
};

// Adversarial Eulerian tours of §4-style: the M1 tour alternates circuit
// sides and never runs counterclockwise; the M2 tour takes the matching edge
// at every first visit to a degree-4 vertex. Orientation follows the paper's
// figures: "clockwise" is the direction of decreasing pair index, and the M1
// tour starts at the special-circuit junction reached from w1.
Tour b_tour_m1(const KDonut& g, const EulerianSubgraph& a);
Tour b_tour_m2(const KDonut& g, const EulerianSubgraph& a);

// Baseline seeded Eulerian tour (circuit-merging construction).
Tour hierholzer_tour(const EulerianSubgraph& a, uint64_t seed);

struct HamiltonianCycle {
  std::vector<int> vertices;  // each vertex exactly once
  long long cost = 0;
};

// Keep the first occurrence of every vertex except the final return.
HamiltonianCycle shortcut(const Tour& r, const Metric& m);

// Lengths of the maximal runs of skipped (already-visited) vertices during
// shortcutting; the B-tour analyses bound these by 2.
std::vector<int> shortcut_skip_runs(const Tour& r);

}  // namespace donut
