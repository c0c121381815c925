#pragma once

#include <array>
#include <vector>

#include "donut/graph.hpp"
#include "donut/sampler.hpp"

namespace donut {

enum class MatchKind { M1, M2, Oracle };

const char* to_string(MatchKind kind);

struct PerfectMatching {
  MatchKind kind = MatchKind::Oracle;
  std::vector<std::array<int, 2>> pairs;  // vertex ids
  long long cost = 0;
};

// The odd-degree vertices o_0..o_{2k-1} of a 1-tree, ordered by pair index.
// Signals a structural violation if w0 or w1 is odd.
std::vector<int> odd_vertices(const KDonut& g, const OneTree& t);

struct StructuralMatchings {
  PerfectMatching m1;    // (o_0,o_1), (o_2,o_3), ...
  PerfectMatching m2;    // (o_1,o_2), ..., (o_{2k-1},o_0)
  const PerfectMatching& best() const {  // ties go to m1
    return m1.cost <= m2.cost ? m1 : m2;
  }
};

StructuralMatchings structural_matchings(const std::vector<int>& odds,
                                         const Metric& m);

// True minimum-cost perfect matching over the metric, by subset DP
// (lowest-unmatched-first). Rejects more than 24 vertices.
PerfectMatching oracle_min_matching(const std::vector<int>& odds,
                                    const Metric& m);

}  // namespace donut
