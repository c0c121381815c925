#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>

#include "donut/lp.hpp"
#include "donut/maxent.hpp"

using namespace donut;

namespace {

struct Fixture {
  KDonut g = build_kdonut(3);
  SubtourSolution x = extreme_point(g);
  SupportGraph s = support_without_eplus(g, x);
  std::vector<uint32_t> trees = enumerate_spanning_trees(s);
};

const Fixture& fixture() {
  static Fixture f;
  return f;
}

}  // namespace

TEST_CASE("enumeration count equals the Kirchhoff determinant") {
  const auto& f = fixture();
  CHECK((long long)f.trees.size() == matrix_tree_count(f.s));
  for (uint32_t t : f.trees) CHECK(std::popcount(t) == f.g.n - 1);
}

TEST_CASE("exactly 128 trees carry all the value-1 edges") {
  const auto& f = fixture();
  uint32_t mandatory = 0;
  for (int e = 0; e < f.s.slots(); ++e)
    if (f.s.target[e] == 1.0) mandatory |= uint32_t(1) << e;
  int with_all = 0;
  for (uint32_t t : f.trees)
    if ((t & mandatory) == mandatory) ++with_all;
  CHECK(with_all == 128);
}

TEST_CASE("sampler distribution is uniform 2^-7 on its support") {
  const auto& f = fixture();
  TreeDistribution alg = sampler_distribution(f.g, f.s, f.trees);
  int support = 0;
  for (double p : alg.p) {
    if (p > 0) {
      ++support;
      CHECK(p == doctest::Approx(1.0 / 128).epsilon(1e-12));
    }
  }
  CHECK(support == 128);
  // its marginals are exactly the LP values
  auto marg = alg.marginals(f.s);
  for (int e = 0; e < f.s.slots(); ++e)
    CHECK(marg[e] == doctest::Approx(f.s.target[e]).epsilon(1e-12));
}

TEST_CASE("solver matches the sampler distribution") {
  const auto& f = fixture();
  TreeDistribution alg = sampler_distribution(f.g, f.s, f.trees);
  MaxEntResult res = solve_max_entropy(f.s, f.trees);
  CHECK(res.converged);
  CHECK(res.max_residual <= 1e-8);
  CHECK(total_variation(res.dist, alg) <= 1e-4);
  CHECK(res.dist.entropy() >= alg.entropy() - 1e-6);
  CHECK(std::abs(res.dist.entropy() - alg.entropy()) <= 1e-6);
  // zero off-support (the trees are subsets of support edges by build)
  auto marg = res.dist.marginals(f.s);
  for (int e = 0; e < f.s.slots(); ++e)
    CHECK(std::abs(marg[e] - f.s.target[e]) <= 1e-8);
}

TEST_CASE("perturbed starts land on the same distribution") {
  const auto& f = fixture();
  MaxEntResult a = solve_max_entropy(f.s, f.trees);
  MaxEntResult b = solve_max_entropy(f.s, f.trees, 12345);
  CHECK(b.converged);
  CHECK(total_variation(a.dist, b.dist) <= 1e-6);
}

TEST_CASE("single-tree support forces probability 1") {
  const auto& f = fixture();
  // restrict to one tree; its own indicator marginals are the only target
  std::vector<uint32_t> one{f.trees[0]};
  SupportGraph s1 = f.s;
  for (int e = 0; e < s1.slots(); ++e)
    s1.target[e] = (one[0] >> e) & 1 ? 1.0 : 0.0;
  MaxEntResult res = solve_max_entropy(s1, one);
  CHECK(res.dist.p[0] == doctest::Approx(1.0));
}

TEST_CASE("two-tree support with balanced marginals splits evenly") {
  const auto& f = fixture();
  // find two trees differing in at least one edge
  std::vector<uint32_t> two{f.trees[0], f.trees[1]};
  SupportGraph s2 = f.s;
  for (int e = 0; e < s2.slots(); ++e) {
    double m = 0;
    for (uint32_t t : two)
      if ((t >> e) & 1) m += 0.5;
    s2.target[e] = m;
  }
  MaxEntResult res = solve_max_entropy(s2, two);
  CHECK(res.dist.p[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(res.dist.p[1] == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("tight-set factorization holds for every odd block") {
  const auto& f = fixture();
  MaxEntResult res = solve_max_entropy(f.s, f.trees);
  for (int i = 1; i < 2 * f.g.k; i += 2) {
    std::vector<int> set_vertices = {f.g.outer(i), f.g.inner(i),
                                     f.g.outer(i + 1), f.g.inner(i + 1)};
    CHECK(check_tight_set_factorization(f.s, res.dist, set_vertices));
  }
}

TEST_CASE("factorization is vacuous on the whole vertex set") {
  const auto& f = fixture();
  MaxEntResult res = solve_max_entropy(f.s, f.trees);
  std::vector<int> all;
  for (int v = 0; v < f.g.n; ++v) all.push_back(v);
  CHECK(check_tight_set_factorization(f.s, res.dist, all));
}

TEST_CASE("a correlated reweighting breaks the factorization") {
  const auto& f = fixture();
  MaxEntResult res = solve_max_entropy(f.s, f.trees);
  std::vector<int> set_vertices = {f.g.outer(1), f.g.inner(1), f.g.outer(2),
                                   f.g.inner(2)};
  uint32_t inside = 0;
  for (int e = 0; e < f.s.slots(); ++e) {
    auto [a, b] = f.s.endpoints(e);
    auto in = [&](int v) {
      return v == f.g.outer(1) || v == f.g.inner(1) || v == f.g.outer(2) ||
             v == f.g.inner(2);
    };
    if (in(a) && in(b)) inside |= uint32_t(1) << e;
  }
  // move mass between two support trees with different inner and outer parts
  TreeDistribution warped = res.dist;
  int i1 = -1, i2 = -1;
  for (int t = 0; t < int(warped.trees.size()); ++t) {
    if (warped.p[t] < 1e-3) continue;
    if (i1 < 0) {
      i1 = t;
    } else if ((warped.trees[t] & inside) != (warped.trees[i1] & inside) &&
               (warped.trees[t] & ~inside) != (warped.trees[i1] & ~inside)) {
      i2 = t;
      break;
    }
  }
  REQUIRE(i1 >= 0);
  REQUIRE(i2 >= 0);
  double delta = warped.p[i2] / 2;
  warped.p[i1] += delta;
  warped.p[i2] -= delta;
  CHECK_FALSE(check_tight_set_factorization(f.s, warped, set_vertices));
}

TEST_CASE("non-tight sets are rejected") {
  const auto& f = fixture();
  MaxEntResult res = solve_max_entropy(f.s, f.trees);
  std::vector<int> not_tight = {f.g.outer(0), f.g.outer(1), f.g.outer(2)};
  CHECK_THROWS_AS(
      check_tight_set_factorization(f.s, res.dist, not_tight),
      std::invalid_argument);
}

TEST_CASE("total variation endpoints") {
  const auto& f = fixture();
  TreeDistribution alg = sampler_distribution(f.g, f.s, f.trees);
  CHECK(total_variation(alg, alg) == 0.0);
  TreeDistribution other = alg;
  // shift all mass onto trees outside the sampler support
  std::fill(other.p.begin(), other.p.end(), 0.0);
  int moved = 0;
  for (size_t t = 0; t < alg.p.size() && moved < 128; ++t)
    if (alg.p[t] == 0.0) {
      other.p[t] = 1.0 / 128;
      ++moved;
    }
  CHECK(total_variation(alg, other) == doctest::Approx(1.0));
}

TEST_CASE("enumeration is capped at k=3") {
  KDonut g4 = build_kdonut(4);
  SubtourSolution x4 = extreme_point(g4);
  SupportGraph s4 = support_without_eplus(g4, x4);
  CHECK_THROWS_AS(enumerate_spanning_trees(s4), std::invalid_argument);
}
