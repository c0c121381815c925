#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "donut/graph.hpp"
#include "donut/lp.hpp"
#include "donut/sampler.hpp"

namespace donut {

// The support of the LP point with e+ removed, as a small indexed edge list.
// Spanning trees of this graph are stored as bitmasks over the slots.
struct SupportGraph {
  const KDonut* g = nullptr;
  std::vector<int> edge_ids;        // graph edge ids, ascending
  std::vector<double> target;      // x_e per slot
  std::vector<int> slot_of_edge;   // graph edge id -> slot, -1 if absent

  int slots() const { return int(edge_ids.size()); }
  std::array<int, 2> endpoints(int slot) const {
    return (*g).edges[edge_ids[slot]];
  }
};

SupportGraph support_without_eplus(const KDonut& g, const SubtourSolution& x);

// Every spanning tree of the support graph, by recursive
// deletion/contraction with bridge forcing. Capped at k = 3.
std::vector<uint32_t> enumerate_spanning_trees(const SupportGraph& s);

// Kirchhoff count for the same graph (exact integer determinant).
long long matrix_tree_count(const SupportGraph& s);

struct TreeDistribution {
  std::vector<uint32_t> trees;  // shared universe, sorted
  std::vector<double> p;

  double entropy() const;                                  // nats
  std::vector<double> marginals(const SupportGraph& s) const;
};

// Uniform over the trees reachable by the sampler's choice vectors
// (exactly the trees containing every x_e = 1 edge).
TreeDistribution sampler_distribution(const KDonut& g, const SupportGraph& s,
                                      const std::vector<uint32_t>& trees);

struct MaxEntResult {
  TreeDistribution dist;
  double max_residual = 0;  // max |marginal - target|
  int sweeps = 0;
  bool converged = false;
};

// Entropy maximization subject to exact per-edge marginals, by coordinate
// ascent on the edge multipliers (iterative scaling with capped steps, so
// marginals pinned at 1 are driven onto the face instead of fitting a
// lambda-uniform form). Converges when the largest marginal residual is at
// most 1e-8 and the objective moves less than 1e-12 per sweep.
MaxEntResult solve_max_entropy(const SupportGraph& s,
                               const std::vector<uint32_t>& trees,
                               std::optional<uint64_t> perturb_seed = {});

double total_variation(const TreeDistribution& p, const TreeDistribution& q);

// Product factorization across a tight set S (x(E(S)) = |S| - 1): checks
// that every support tree has exactly |S|-1 edges inside S and that the
// distribution equals the product of its inner restriction and outer
// projection, within tol per atom. Throws if S is not tight.
bool check_tight_set_factorization(const SupportGraph& s,
                                   const TreeDistribution& p,
                                   const std::vector<int>& set_vertices,
                                   double tol = 1e-6);

}  // namespace donut
