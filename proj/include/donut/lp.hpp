#pragma once

#include <vector>

#include "donut/graph.hpp"
#include "json.hpp"

namespace donut {

// A Subtour-LP point over the k-donut edge set, stored exactly in half-units:
// halves[e] = 2 * x_e, so the paper's values 0, 1/2, 1 become 0, 1, 2.
struct SubtourSolution {
  std::vector<int> halves;

  long long objective_halves() const {  // unit edge costs: 2 * c(x)
    long long s = 0;
    for (int h : halves) s += h;
    return s;
  }
  nlohmann::ordered_json to_json(const KDonut& g) const;
};

// The half-integral extreme point: all spokes 1/2, odd ring edges 1, even
// ring edges 1/2 except index 0 which gets 0, {w0,w1} = 1, and the four
// envelope half-edges 1/2.
SubtourSolution extreme_point(const KDonut& g);

// Global min cut of the support graph weighted by x, in half-units
// (Stoer-Wagner, exact integer arithmetic). 0 when the support is
// disconnected.
long long support_min_cut_halves(const SubtourSolution& x, const KDonut& g);

// Degree constraints, bounds, and all cut constraints (via the min cut).
bool check_feasible(const SubtourSolution& x, const KDonut& g);

// Extreme-point test: the incidence matrix of tight constraints (all degree
// rows plus every proper tight set), restricted to fractional-support
// columns, must have full column rank. Exact integer elimination; tight sets
// found by enumeration with one vertex pinned inside S. Rejects k > 5.
bool check_extreme(const SubtourSolution& x, const KDonut& g);

}  // namespace donut
