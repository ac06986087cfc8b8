#include "asymclust/methods.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

#include "asymclust/harness.hpp"
#include "asymclust/paths.hpp"
#include "asymclust/values.hpp"
#include "fixtures.hpp"

using namespace asymclust;

namespace {

Ultrametric revalidated(const Ultrametric& u) {
  return Ultrametric::validate(u.labels(), u.values());
}

}  // namespace

TEST_CASE("single linkage equals the symmetric closure") {
  const Network sym = max_symmetrize(fixtures::golden_net());
  const Ultrametric u = single_linkage(sym);
  CHECK(u.at(0, 1) == 2.0);
  CHECK(u.at(1, 2) == 3.0);
  CHECK(u.at(0, 2) == 3.0);

  CHECK(single_linkage(canonical_network({2, 4.0, 4.0, {}})).at(0, 1) == 4.0);

  CHECK_THROWS_AS(single_linkage(fixtures::golden_net()), Error);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Network net = random_symmetric_network(2 + seed % 6, 4000 + seed);
    CHECK(single_linkage(net).values() == brute_force_min_chain_cost(net));
  }
}

TEST_CASE("reciprocal clustering on the golden network") {
  const Ultrametric u = reciprocal(fixtures::golden_net());
  CHECK(u.at(0, 1) == 2.0);
  CHECK(u.at(1, 2) == 3.0);
  CHECK(u.at(0, 2) == 3.0);

  SUBCASE("two-node networks merge at the larger dissimilarity") {
    CHECK(reciprocal(canonical_network({2, 1.0, 3.0, {}})).at(0, 1) == 3.0);
    CHECK(reciprocal(canonical_network({2, 5.0, 0.5, {}})).at(0, 1) == 5.0);
  }
  SUBCASE("on symmetric networks reciprocal is single linkage") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Network net = random_symmetric_network(5, 4100 + seed);
      CHECK(reciprocal(net) == single_linkage(net));
    }
  }
}

TEST_CASE("nonreciprocal clustering on the golden network") {
  const Ultrametric u = nonreciprocal(fixtures::golden_net());
  CHECK(u.at(0, 1) == 1.0);
  CHECK(u.at(1, 2) == 1.0);
  CHECK(u.at(0, 2) == 1.0);

  SUBCASE("two-node networks have only direct chains") {
    CHECK(nonreciprocal(canonical_network({2, 1.0, 3.0, {}})).at(0, 1) == 3.0);
  }
  SUBCASE("matches the directed oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Network net = random_network(2 + seed % 6, 1.0, 4200 + seed);
      const MinChainCostMatrix oracle = brute_force_min_chain_cost(net);
      const Ultrametric got = nonreciprocal(net);
      for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t j = 0; j < net.size(); ++j)
          CHECK(got.at(i, j) == std::max(oracle(i, j), oracle(j, i)));
    }
  }
}

TEST_CASE("unilateral clustering on the golden network") {
  const Ultrametric u = unilateral(fixtures::golden_net());
  CHECK(u.at(0, 1) == 0.5);
  CHECK(u.at(1, 2) == 0.5);
  CHECK(u.at(0, 2) == 0.5);

  SUBCASE("two-node networks merge at the smaller dissimilarity") {
    CHECK(unilateral(canonical_network({2, 1.0, 3.0, {}})).at(0, 1) == 1.0);
  }
  SUBCASE("on symmetric networks unilateral is single linkage") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Network net = random_symmetric_network(5, 4300 + seed);
      CHECK(unilateral(net) == single_linkage(net));
    }
  }
}

TEST_CASE("method dispatch") {
  CHECK(cluster(MethodId::reciprocal, fixtures::golden_net()) == reciprocal(fixtures::golden_net()));
  CHECK(cluster(MethodId::nonreciprocal, fixtures::golden_net()) == nonreciprocal(fixtures::golden_net()));

  const Network single = Network::validate({"s"}, SquareMatrix(1, 0.0));
  const Ultrametric u = cluster(MethodId::unilateral, single);
  CHECK(u.size() == 1);
  CHECK(u.values() == SquareMatrix(1, 0.0));

  CHECK_THROWS_AS(cluster(MethodId::single_linkage, fixtures::golden_net()), Error);

  CHECK(parse_method("single-linkage") == MethodId::single_linkage);
  CHECK(parse_method("nonreciprocal") == MethodId::nonreciprocal);
  CHECK_FALSE(parse_method("other").has_value());
  CHECK(method_name(MethodId::unilateral) == "unilateral");
}

TEST_CASE("every method output is a valid ultrametric built from input values") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Network net = random_network(2 + seed % 6, seed % 3 ? 1.0 : 0.6, 4400 + seed);
    std::set<Value> inputs;
    for (std::size_t i = 0; i < net.size(); ++i)
      for (std::size_t j = 0; j < net.size(); ++j)
        if (i != j) inputs.insert(net.at(i, j));

    for (MethodId method :
         {MethodId::reciprocal, MethodId::nonreciprocal, MethodId::unilateral}) {
      const Ultrametric u = cluster(method, net);
      CHECK_NOTHROW(revalidated(u));
      for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t j = i + 1; j < net.size(); ++j)
          if (!std::isinf(u.at(i, j))) CHECK(inputs.count(u.at(i, j)) == 1);
    }
  }
}

TEST_CASE("symmetrize-then-closure matches direct chain minimization") {
  // The shipped implementations run one closure over a symmetrized
  // matrix; the oracle enumerates chains explicitly over the same
  // pairwise maxima/minima.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Network net = random_network(2 + seed % 5, seed % 3 ? 1.0 : 0.7, 4800 + seed);
    CHECK(reciprocal(net).values() == brute_force_min_chain_cost(max_symmetrize(net)));
    CHECK(unilateral(net).values() == brute_force_min_chain_cost(min_symmetrize(net)));
  }
}

TEST_CASE("nonreciprocal and unilateral never exceed reciprocal") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Network net = random_network(2 + seed % 6, 1.0, 4500 + seed);
    const Ultrametric lower = nonreciprocal(net);
    const Ultrametric side = unilateral(net);
    const Ultrametric upper = reciprocal(net);
    for (std::size_t i = 0; i < net.size(); ++i)
      for (std::size_t j = i + 1; j < net.size(); ++j) {
        CHECK(lower.at(i, j) <= upper.at(i, j));
        CHECK(side.at(i, j) <= upper.at(i, j));
      }
  }
}

TEST_CASE("merge values respect the influence bounds") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Network net = random_network(2 + seed % 6, 1.0, 4600 + seed);
    const Value mlc = min_loop_cost(net);
    const Value sep = separation(net);
    const Ultrametric nr = nonreciprocal(net);
    const Ultrametric r = reciprocal(net);
    const Ultrametric uni = unilateral(net);
    for (std::size_t i = 0; i < net.size(); ++i)
      for (std::size_t j = i + 1; j < net.size(); ++j) {
        CHECK(nr.at(i, j) >= mlc);
        CHECK(r.at(i, j) >= mlc);
        CHECK(uni.at(i, j) >= sep);
      }
  }
}

TEST_CASE("all four methods coincide on symmetric networks") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Network net = random_symmetric_network(2 + seed % 6, 4700 + seed);
    const Ultrametric sl = single_linkage(net);
    CHECK(reciprocal(net) == sl);
    CHECK(nonreciprocal(net) == sl);
    CHECK(unilateral(net) == sl);
  }
}
