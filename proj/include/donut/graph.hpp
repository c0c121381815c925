#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace donut {

enum class Ring { Outer, Inner };

// The k-donut: two concentric 2k-cycles (outer u_i, inner v_i) joined by a
// spoke at every index, plus the two envelope vertices w0, w1 attached to
// index 0 and index 1 respectively. Every edge has cost 1.
//
// Vertex ids are dense: w0 = 0, w1 = 1, u_i = 2 + 2i, v_i = 3 + 2i, so the
// natural ordering is w0 < w1 < u0 < v0 < u1 < v1 < ...
struct KDonut {
  int k = 0;
  int n = 0;                                 // 4k + 2
  std::vector<std::array<int, 2>> edges;     // 6k + 5, endpoints sorted
  std::vector<std::vector<int>> adj;         // vertex -> incident edge ids

  static constexpr int w0 = 0;
  static constexpr int w1 = 1;

  int positions() const { return 2 * k; }
  int outer(int i) const { return 2 + 2 * mod_pos(i); }
  int inner(int i) const { return 3 + 2 * mod_pos(i); }
  int mod_pos(int i) const {
    int m = i % (2 * k);
    return m < 0 ? m + 2 * k : m;
  }

  bool is_w(int v) const { return v < 2; }
  bool is_outer(int v) const { return v >= 2 && v % 2 == 0; }
  Ring ring(int v) const { return is_outer(v) ? Ring::Outer : Ring::Inner; }
  int pair_index(int v) const { return (v - 2) / 2; }  // !is_w(v)

  std::string label(int v) const;
  int vertex_by_label(const std::string& s) const;  // -1 if unknown

  // Canonical edge ids: outer ring i, inner ring 2k+i, spoke 4k+i,
  // then {w0,w1}, {w0,u0}, {w0,v0}, {w1,u1}, {w1,v1}.
  int ring_edge(Ring r, int i) const {
    return (r == Ring::Outer ? 0 : 2 * k) + mod_pos(i);
  }
  int spoke(int i) const { return 4 * k + mod_pos(i); }
  int eplus() const { return 6 * k; }
  int wedge_u0() const { return 6 * k + 1; }
  int wedge_v0() const { return 6 * k + 2; }
  int wedge_u1() const { return 6 * k + 3; }
  int wedge_v1() const { return 6 * k + 4; }

  int edge_id(int a, int b) const;  // -1 if not a graph edge
  int other(int edge, int v) const {
    const auto& e = edges[edge];
    return e[0] == v ? e[1] : e[0];
  }

  nlohmann::ordered_json to_json() const;
};

// Rejects k < 3.
KDonut build_kdonut(int k);

// All-pairs shortest-path distances (BFS from every vertex, unit costs).
struct Metric {
  int n = 0;
  std::vector<uint16_t> d;
  int operator()(int a, int b) const { return d[size_t(a) * n + b]; }
};

Metric shortest_path_metric(const KDonut& g);

// An explicit Hamiltonian cycle of cost 4k+2, witnessing that the optimal
// tour equals the LP value.
std::vector<int> hamiltonian_witness(const KDonut& g);

// Exhaustive Hamiltonicity check over the graph edges (used at k=3 to guard
// the OPT = 4k+2 constant independently of the witness construction).
bool has_hamiltonian_cycle_bruteforce(const KDonut& g);

}  // namespace donut
