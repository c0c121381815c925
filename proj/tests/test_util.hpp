#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "donut/graph.hpp"
#include "donut/sampler.hpp"

namespace testutil {

inline donut::ChoiceVector cv_from_bits(int k, const std::string& bits) {
  donut::ChoiceVector cv;
  cv.k = k;
  for (char c : bits) cv.bits.push_back(c == '1');
  return cv;
}

inline std::vector<int> verts(const donut::KDonut& g,
                              const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& s : labels) out.push_back(g.vertex_by_label(s));
  return out;
}

// Rotate a cyclic vertex sequence so it starts at `start` (sequence must not
// carry the closing repeat).
inline std::vector<int> rotate_cycle(std::vector<int> cycle, int start) {
  auto it = std::find(cycle.begin(), cycle.end(), start);
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

}  // namespace testutil
