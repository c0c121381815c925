#include "donut/matching.hpp"

#include <limits>
#include <stdexcept>

#include "donut/errors.hpp"

namespace donut {

const char* to_string(MatchKind kind) {
  switch (kind) {
    case MatchKind::M1: return "m1";
    case MatchKind::M2: return "m2";
    default: return "oracle";
  }
}

std::vector<int> odd_vertices(const KDonut& g, const OneTree& t) {
  if (t.degree[KDonut::w0] % 2 || t.degree[KDonut::w1] % 2)
    throw claim_violation("odd-vertices", "w vertex has odd degree", g.k,
                          t.choice.to_string());
  std::vector<uint8_t> o = parity_vector(g, t);
  std::vector<int> odds(2 * g.k);
  for (int i = 0; i < 2 * g.k; ++i)
    odds[i] = o[i] ? g.outer(i) : g.inner(i);
  return odds;
}

StructuralMatchings structural_matchings(const std::vector<int>& odds,
                                         const Metric& m) {
  int n = int(odds.size());
  if (n < 2 || n % 2)
    throw std::invalid_argument("odd-vertex list must have even size");
  StructuralMatchings s;
  s.m1.kind = MatchKind::M1;
  s.m2.kind = MatchKind::M2;
  for (int j = 0; j < n / 2; ++j) {
    int a = odds[2 * j], b = odds[2 * j + 1];
    s.m1.pairs.push_back({a, b});
    s.m1.cost += m(a, b);
    int c = odds[2 * j + 1], d = odds[(2 * j + 2) % n];
    s.m2.pairs.push_back({c, d});
    s.m2.cost += m(c, d);
  }
  return s;
}

PerfectMatching oracle_min_matching(const std::vector<int>& odds,
                                    const Metric& m) {
  int n = int(odds.size());
  if (n % 2) throw std::invalid_argument("odd number of vertices to match");
  if (n > 24) throw std::invalid_argument("matching oracle is capped at 24 vertices");
  PerfectMatching pm;
  pm.kind = MatchKind::Oracle;
  if (n == 0) return pm;

  // dp[mask] = min cost of a perfect matching on the vertices in mask; the
  // lowest set bit is matched against every other set bit.
  const int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> dp(size_t(1) << n, kInf);
  dp[0] = 0;
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    int i = __builtin_ctz(mask);
    for (int j = i + 1; j < n; ++j) {
      if (!(mask & (uint32_t(1) << j))) continue;
      uint32_t prev = mask ^ (uint32_t(1) << i) ^ (uint32_t(1) << j);
      if (dp[prev] >= kInf) continue;
      int c = dp[prev] + m(odds[i], odds[j]);
      if (c < dp[mask]) dp[mask] = c;
    }
  }
  uint32_t full = (uint32_t(1) << n) - 1;
  pm.cost = dp[full];

  uint32_t mask = full;
  while (mask) {
    int i = __builtin_ctz(mask);
    for (int j = i + 1; j < n; ++j) {
      if (!(mask & (uint32_t(1) << j))) continue;
      uint32_t prev = mask ^ (uint32_t(1) << i) ^ (uint32_t(1) << j);
      if (dp[prev] < kInf && dp[prev] + m(odds[i], odds[j]) == dp[mask]) {
        pm.pairs.push_back({odds[i], odds[j]});
        mask = prev;
        break;
      }
    }
  }
  return pm;
}

}  // namespace donut
