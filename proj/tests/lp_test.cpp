#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "donut/graph.hpp"
#include "donut/lp.hpp"

using namespace donut;

namespace {

// incidence vector of a Hamiltonian cycle, in half-units
SubtourSolution cycle_solution(const KDonut& g, const std::vector<int>& cyc) {
  SubtourSolution x;
  x.halves.assign(g.edges.size(), 0);
  for (size_t i = 0; i < cyc.size(); ++i)
    x.halves[g.edge_id(cyc[i], cyc[(i + 1) % cyc.size()])] = 2;
  return x;
}

// the witness cycle with the roles of the two rings swapped
std::vector<int> swapped_witness(const KDonut& g) {
  std::vector<int> cyc;
  cyc.push_back(KDonut::w0);
  cyc.push_back(g.inner(0));
  for (int i = 2 * g.k - 1; i >= 2; --i) cyc.push_back(g.inner(i));
  for (int i = 2; i <= 2 * g.k - 1; ++i) cyc.push_back(g.outer(i));
  cyc.push_back(g.outer(0));
  cyc.push_back(g.outer(1));
  cyc.push_back(g.inner(1));
  cyc.push_back(KDonut::w1);
  return cyc;
}

}  // namespace

TEST_CASE("extreme point values and objective") {
  KDonut g = build_kdonut(3);
  SubtourSolution x = extreme_point(g);
  CHECK(x.objective_halves() == 2 * 14);  // c(x) = 4k+2
  CHECK(x.halves[g.eplus()] == 2);
  CHECK(x.halves[g.ring_edge(Ring::Outer, 0)] == 0);
  CHECK(x.halves[g.ring_edge(Ring::Inner, 0)] == 0);
  for (int i = 0; i < 6; ++i) CHECK(x.halves[g.spoke(i)] == 1);
  CHECK(x.halves[g.ring_edge(Ring::Outer, 1)] == 2);
  CHECK(x.halves[g.ring_edge(Ring::Outer, 2)] == 1);
  CHECK(x.halves[g.wedge_u0()] == 1);
}

TEST_CASE("extreme point is feasible for k=3..10") {
  for (int k = 3; k <= 10; ++k) {
    KDonut g = build_kdonut(k);
    SubtourSolution x = extreme_point(g);
    CHECK(x.objective_halves() == 2 * (4 * k + 2));
    CHECK(check_feasible(x, g));
  }
}

TEST_CASE("degree violation is caught") {
  KDonut g = build_kdonut(3);
  SubtourSolution x = extreme_point(g);
  x.halves[g.spoke(2)] = 2;  // raise one spoke to 1
  CHECK_FALSE(check_feasible(x, g));
}

TEST_CASE("gadget half-edges zeroed is infeasible") {
  KDonut g = build_kdonut(3);
  SubtourSolution x = extreme_point(g);
  x.halves[g.wedge_u0()] = 0;
  x.halves[g.wedge_v0()] = 0;
  CHECK_FALSE(check_feasible(x, g));
  CHECK(support_min_cut_halves(x, g) < 4);
}

TEST_CASE("cut violation with intact degrees is caught by the min cut") {
  KDonut g = build_kdonut(3);
  SubtourSolution x = extreme_point(g);
  // shift the square at the even boundary i=2: spokes up, rings down
  x.halves[g.spoke(2)] = 2;
  x.halves[g.spoke(3)] = 2;
  x.halves[g.ring_edge(Ring::Outer, 2)] = 0;
  x.halves[g.ring_edge(Ring::Inner, 2)] = 0;
  // degrees still hold...
  std::vector<int> deg(g.n, 0);
  for (int e = 0; e < int(g.edges.size()); ++e) {
    deg[g.edges[e][0]] += x.halves[e];
    deg[g.edges[e][1]] += x.halves[e];
  }
  for (int v = 0; v < g.n; ++v) CHECK(deg[v] == 4);
  // ...but the cross cut through the square and the envelope drops to 1
  CHECK(support_min_cut_halves(x, g) == 2);
  CHECK_FALSE(check_feasible(x, g));
}

TEST_CASE("extreme point passes the rank test for k=3..5") {
  for (int k = 3; k <= 5; ++k) {
    KDonut g = build_kdonut(k);
    CHECK(check_extreme(extreme_point(g), g));
  }
}

TEST_CASE("rank test rejects k > 5") {
  KDonut g = build_kdonut(6);
  CHECK_THROWS_AS(check_extreme(extreme_point(g), g), std::invalid_argument);
}

TEST_CASE("integral tour solution is vacuously extreme") {
  KDonut g = build_kdonut(3);
  SubtourSolution x = cycle_solution(g, hamiltonian_witness(g));
  CHECK(check_feasible(x, g));
  CHECK(check_extreme(x, g));
}

TEST_CASE("midpoint of two tours is feasible but not extreme") {
  for (int k : {3, 4}) {
    KDonut g = build_kdonut(k);
    std::vector<int> h1 = hamiltonian_witness(g);
    std::vector<int> h2 = swapped_witness(g);
    SubtourSolution a = cycle_solution(g, h1);
    SubtourSolution b = cycle_solution(g, h2);
    CHECK(check_feasible(b, g));
    SubtourSolution mid;
    mid.halves.resize(g.edges.size());
    bool differ = false;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      mid.halves[e] = (a.halves[e] + b.halves[e]) / 2;
      differ = differ || a.halves[e] != b.halves[e];
    }
    CHECK(differ);
    CHECK(check_feasible(mid, g));
    CHECK_FALSE(check_extreme(mid, g));
  }
}

TEST_CASE("solution serializes per edge") {
  KDonut g = build_kdonut(3);
  auto j = extreme_point(g).to_json(g);
  CHECK(j.size() == 23);
  CHECK(j["w0-w1"] == 2);
  CHECK(j["u0-u1"] == 0);
}
