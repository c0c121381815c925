#include "donut/sampler.hpp"

#include <numeric>
#include <stdexcept>

#include "donut/errors.hpp"

namespace donut {

namespace {
constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
}

uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

BitSource BitSource::from_seed(uint64_t seed, uint64_t stream) {
  BitSource s;
  s.key = mix64(seed + kGamma * stream + 1);
  return s;
}

bool BitSource::bit(uint64_t index) const {
  return mix64(key + kGamma * (index + 1)) >> 63;
}

ChoiceVector ChoiceVector::from_index(int k, uint64_t index) {
  if (k > 10) throw std::invalid_argument("choice enumeration is capped at k <= 10");
  ChoiceVector cv;
  cv.k = k;
  cv.bits.resize(2 * k + 1);
  for (int j = 0; j < 2 * k + 1; ++j) cv.bits[j] = (index >> j) & 1;
  return cv;
}

ChoiceVector ChoiceVector::draw(int k, const BitSource& rng) {
  ChoiceVector cv;
  cv.k = k;
  cv.bits.resize(2 * k + 1);
  for (int j = 0; j < 2 * k + 1; ++j) cv.bits[j] = rng.bit(j);
  return cv;
}

std::string ChoiceVector::to_string() const {
  std::string s(bits.size(), '0');
  for (size_t j = 0; j < bits.size(); ++j) s[j] = bits[j] ? '1' : '0';
  return s;
}

OneTree build_one_tree(const KDonut& g, ChoiceVector cv) {
  int k = g.k;
  if (cv.k != k || int(cv.bits.size()) != 2 * k + 1)
    throw std::invalid_argument("choice vector does not match the instance");
  OneTree t;
  t.edges.reserve(4 * k + 2);
  t.edges.push_back(g.eplus());
  for (int i = 1; i < 2 * k; i += 2) {
    t.edges.push_back(g.ring_edge(Ring::Outer, i));
    t.edges.push_back(g.ring_edge(Ring::Inner, i));
  }
  for (int j = 0; j < k; ++j) {
    int i = 2 * j + 1;
    t.edges.push_back(g.spoke(cv.block_bit(j) == 0 ? i : i + 1));
  }
  for (int j = 0; j + 1 < k; ++j) {
    int i = 2 * j + 2;
    t.edges.push_back(g.ring_edge(cv.join_bit(j) == 0 ? Ring::Outer : Ring::Inner, i));
  }
  t.edges.push_back(cv.w0_bit() == 0 ? g.wedge_u0() : g.wedge_v0());
  t.edges.push_back(cv.w1_bit() == 0 ? g.wedge_u1() : g.wedge_v1());
  t.choice = std::move(cv);

  t.degree.assign(g.n, 0);
  for (int e : t.edges) {
    ++t.degree[g.edges[e][0]];
    ++t.degree[g.edges[e][1]];
  }

  auto fail = [&](const char* what) {
    throw claim_violation("one-tree-structure", what, k, t.choice.to_string());
  };
  if (int(t.edges.size()) != 4 * k + 2) fail("edge count != 4k+2");
  if (t.degree[KDonut::w0] != 2 || t.degree[KDonut::w1] != 2) fail("w degree != 2");
  // Removing e+ must leave a spanning tree: 4k+1 edges, acyclic, spanning.
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e : t.edges) {
    if (e == g.eplus()) continue;
    int a = find(g.edges[e][0]), b = find(g.edges[e][1]);
    if (a == b) fail("cycle without e+");
    parent[a] = b;
  }
  for (int v = 1; v < g.n; ++v)
    if (find(v) != find(0)) fail("not spanning");
  return t;
}

OneTree sample_one_tree(const KDonut& g, const BitSource& rng) {
  return build_one_tree(g, ChoiceVector::draw(g.k, rng));
}

void for_each_one_tree(const KDonut& g,
                       const std::function<void(const OneTree&)>& fn) {
  if (g.k > 10) throw std::invalid_argument("tree enumeration is capped at k <= 10");
  uint64_t total = uint64_t(1) << (2 * g.k + 1);
  for (uint64_t idx = 0; idx < total; ++idx)
    fn(build_one_tree(g, ChoiceVector::from_index(g.k, idx)));
}

std::vector<OneTree> enumerate_one_trees(const KDonut& g) {
  std::vector<OneTree> trees;
  trees.reserve(size_t(1) << (2 * g.k + 1));
  for_each_one_tree(g, [&](const OneTree& t) { trees.push_back(t); });
  return trees;
}

std::vector<uint8_t> parity_vector(const KDonut& g, const OneTree& t) {
  std::vector<uint8_t> o(2 * g.k);
  for (int i = 0; i < 2 * g.k; ++i) {
    int du = t.degree[g.outer(i)], dv = t.degree[g.inner(i)];
    if ((du + dv) % 2 == 0)
      throw claim_violation("pair-parity", "pair " + std::to_string(i) +
                            " does not have exactly one odd vertex",
                            g.k, t.choice.to_string());
    o[i] = uint8_t(du % 2);
  }
  return o;
}

}  // namespace donut
