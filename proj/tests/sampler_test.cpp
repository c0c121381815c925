#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "donut/errors.hpp"
#include "donut/lp.hpp"
#include "donut/sampler.hpp"
#include "test_util.hpp"

using namespace donut;

TEST_CASE("any seed yields a 14-edge connected 1-tree at k=3") {
  KDonut g = build_kdonut(3);
  for (uint64_t seed : {0ull, 1ull, 42ull, 0xdeadbeefull}) {
    OneTree t = sample_one_tree(g, BitSource::from_seed(seed, 0));
    CHECK(t.edges.size() == 14);
    CHECK(t.cost() == 14);
    CHECK(t.degree[KDonut::w0] == 2);
    CHECK(t.degree[KDonut::w1] == 2);
  }
}

TEST_CASE("identical seeds give identical trees") {
  KDonut g = build_kdonut(7);
  OneTree a = sample_one_tree(g, BitSource::from_seed(123, 5));
  OneTree b = sample_one_tree(g, BitSource::from_seed(123, 5));
  OneTree c = sample_one_tree(g, BitSource::from_seed(123, 6));
  CHECK(a.edges == b.edges);
  CHECK(a.edges != c.edges);
}

TEST_CASE("all-zeros choice picks the first-listed edges") {
  KDonut g = build_kdonut(3);
  OneTree t = build_one_tree(g, testutil::cv_from_bits(3, "0000000"));
  std::set<int> edges(t.edges.begin(), t.edges.end());
  for (int i : {1, 3, 5}) CHECK(edges.count(g.spoke(i)));
  for (int i : {2, 4}) CHECK(edges.count(g.ring_edge(Ring::Outer, i)));
  CHECK(edges.count(g.wedge_u0()));
  CHECK(edges.count(g.wedge_u1()));
  // and its parity vector, computed by hand from the degrees
  auto o = parity_vector(g, t);
  CHECK(std::vector<uint8_t>{0, 1, 0, 1, 0, 1} == o);
}

TEST_CASE("enumeration counts are 2^(2k+1) and trees are distinct") {
  for (int k : {3, 4}) {
    KDonut g = build_kdonut(k);
    auto trees = enumerate_one_trees(g);
    CHECK(trees.size() == size_t(1) << (2 * k + 1));
    std::set<std::vector<int>> keys;
    for (auto& t : trees) {
      auto e = t.edges;
      std::sort(e.begin(), e.end());
      keys.insert(e);
    }
    CHECK(keys.size() == trees.size());
  }
}

TEST_CASE("enumeration rejects k > 10") {
  KDonut g = build_kdonut(11);
  CHECK_THROWS_AS(enumerate_one_trees(g), std::invalid_argument);
}

TEST_CASE("every tree respects the LP support") {
  KDonut g = build_kdonut(3);
  SubtourSolution x = extreme_point(g);
  for_each_one_tree(g, [&](const OneTree& t) {
    std::set<int> edges(t.edges.begin(), t.edges.end());
    for (int e = 0; e < int(g.edges.size()); ++e) {
      if (x.halves[e] == 2 ) CHECK(edges.count(e));
      if (x.halves[e] == 0) CHECK_FALSE(edges.count(e));
    }
  });
}

TEST_CASE("claim 1 exhaustively: one odd vertex per pair, parities uniform") {
  for (int k : {3, 4}) {
    KDonut g = build_kdonut(k);
    std::map<std::vector<uint8_t>, int> histogram;
    for_each_one_tree(g, [&](const OneTree& t) {
      ++histogram[parity_vector(g, t)];  // parity_vector asserts the pairs
    });
    CHECK(histogram.size() == size_t(1) << (2 * k));
    for (auto& [key, count] : histogram) CHECK(count == 2);
  }
}

TEST_CASE("sampler uniformity: chi-square over the 128 trees at k=3") {
  KDonut g = build_kdonut(3);
  const int cells = 128;
  const long long samples = 100000;
  std::vector<long long> counts(cells, 0);
  for (long long s = 0; s < samples; ++s) {
    ChoiceVector cv = ChoiceVector::draw(3, BitSource::from_seed(2024, s));
    int idx = 0;
    for (int j = 0; j < cv.size(); ++j) idx |= int(cv.bits[j]) << j;
    ++counts[idx];
  }
  double expect = double(samples) / cells;
  double stat = 0;
  for (long long c : counts) stat += (c - expect) * (c - expect) / expect;
  // chi-square(127) quantile at p = 0.001 (Wilson-Hilferty): 182.05
  CHECK(stat < 182.05);
}

TEST_CASE("bits consumed in fixed order match the choice layout") {
  KDonut g = build_kdonut(5);
  BitSource src = BitSource::from_seed(77, 3);
  ChoiceVector cv = ChoiceVector::draw(5, src);
  OneTree t = sample_one_tree(g, src);
  CHECK(t.choice.bits == cv.bits);
  for (int j = 0; j < cv.size(); ++j) CHECK(cv.bits[j] == src.bit(j));
}
