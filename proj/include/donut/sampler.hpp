#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "donut/graph.hpp"

namespace donut {

uint64_t mix64(uint64_t z);  // splitmix64 finalizer

// Counter-based source of fair bits: bit(i) is the top bit of the i-th
// splitmix64 output under this key, so identical (seed, stream) pairs give
// identical bits on every platform and bits can be consumed in any order.
struct BitSource {
  uint64_t key = 0;

  static BitSource from_seed(uint64_t seed, uint64_t stream = 0);
  bool bit(uint64_t index) const;
};

// The 2k+1 fair-bit choices of the sampler, in fixed order: the k odd-block
// spoke choices (ascending odd i), the k-1 even join choices (ascending even
// i != 0), then the w0 and w1 attachments. Bit 0 always selects the
// first-listed edge of the pair.
struct ChoiceVector {
  int k = 0;
  std::vector<uint8_t> bits;  // size 2k+1

  static ChoiceVector from_index(int k, uint64_t index);  // k <= 10
  static ChoiceVector draw(int k, const BitSource& rng);

  int size() const { return 2 * k + 1; }
  uint8_t block_bit(int j) const { return bits[j]; }           // odd i = 2j+1
  uint8_t join_bit(int j) const { return bits[k + j]; }        // even i = 2j+2
  uint8_t w0_bit() const { return bits[2 * k - 1]; }
  uint8_t w1_bit() const { return bits[2 * k]; }
  std::string to_string() const;
};

// A sampled 1-tree: the spanning tree chosen by the 2k+1 choices plus the
// edge e+ = {w0,w1}. Cost is always 4k+2 (unit edges).
struct OneTree {
  ChoiceVector choice;
  std::vector<int> edges;   // 4k+2 graph edge ids, e+ included
  std::vector<int> degree;  // per vertex

  long long cost() const { return static_cast<long long>(edges.size()); }
};

OneTree build_one_tree(const KDonut& g, ChoiceVector cv);
OneTree sample_one_tree(const KDonut& g, const BitSource& rng);

// One tree per choice vector, 2^{2k+1} in total. Rejects k > 10.
std::vector<OneTree> enumerate_one_trees(const KDonut& g);
void for_each_one_tree(const KDonut& g,
                       const std::function<void(const OneTree&)>& fn);

// O_i = 1 iff u_i has odd degree in the tree; exactly one of u_i, v_i is odd
// in every pair (signals a structural violation otherwise).
std::vector<uint8_t> parity_vector(const KDonut& g, const OneTree& t);

}  // namespace donut
