#include "asymclust/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

#include "asymclust/values.hpp"
#include "fixtures.hpp"

using namespace asymclust;

namespace {

NodeMap identity_map(std::size_t n) {
  NodeMap map;
  map.to.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.to[i] = i;
  return map;
}

}  // namespace

TEST_CASE("dissimilarity-reducing predicate") {
  SUBCASE("the worked map example passes") {
    const auto report =
        is_dissimilarity_reducing(identity_map(3), fixtures::map_source(), fixtures::map_target());
    CHECK(report.pass);
    CHECK(report.witness.empty());
  }
  SUBCASE("identity maps pass") {
    const Network net = fixtures::golden_net();
    CHECK(is_dissimilarity_reducing(identity_map(3), net, net).pass);
  }
  SUBCASE("inflating a two-node network fails with the offending pair") {
    const Network small = canonical_network({2, 1.0, 1.0, {}});
    const Network large = canonical_network({2, 2.0, 2.0, {}});
    const auto report = is_dissimilarity_reducing(identity_map(2), small, large);
    REQUIRE_FALSE(report.pass);
    CHECK(report.witness_nodes == std::vector<std::size_t>{0, 1});
    CHECK(report.witness_values == std::vector<Value>{1.0, 2.0});
    // The structured witness reproduces the violation.
    CHECK(small.at(report.witness_nodes[0], report.witness_nodes[1]) <
          large.at(report.witness_nodes[0], report.witness_nodes[1]));
  }
  SUBCASE("a short or out-of-range map is rejected") {
    const Network net = fixtures::golden_net();
    CHECK_THROWS_AS(is_dissimilarity_reducing(identity_map(2), net, net), Error);
    NodeMap bad = identity_map(3);
    bad.to[2] = 9;
    CHECK_THROWS_AS(is_dissimilarity_reducing(bad, net, net), Error);
  }
}

TEST_CASE("two-node value axioms") {
  SUBCASE("reciprocal merges at the max") {
    const auto report = check_value_axiom(MethodId::reciprocal, ValueAxiom::max_valued, 1.0, 3.0);
    CHECK(report.pass);
  }
  SUBCASE("unilateral merges at the min") {
    CHECK(check_value_axiom(MethodId::unilateral, ValueAxiom::min_valued, 1.0, 3.0).pass);
  }
  SUBCASE("unilateral fails the max-valued axiom, witnessing its value") {
    const auto report = check_value_axiom(MethodId::unilateral, ValueAxiom::max_valued, 1.0, 3.0);
    REQUIRE_FALSE(report.pass);
    CHECK(report.witness_values == std::vector<Value>{1.0});
  }
  SUBCASE("everything passes the agnostic variant") {
    for (MethodId method :
         {MethodId::reciprocal, MethodId::nonreciprocal, MethodId::unilateral}) {
      CHECK(check_value_axiom(method, ValueAxiom::agnostic, 2.0, 5.0).pass);
    }
  }
}

TEST_CASE("extended value axiom on canonical networks") {
  const std::vector<std::size_t> identity;
  CHECK(check_extended_value(MethodId::nonreciprocal, 5, 1.0, 3.0, identity).pass);
  CHECK(check_extended_value(MethodId::reciprocal, 4, 2.0, 2.0, random_permutation(4, 7)).pass);

  const auto report = check_extended_value(MethodId::unilateral, 3, 1.0, 3.0, identity);
  REQUIRE_FALSE(report.pass);
  CHECK(report.witness_values[0] == 1.0);
}

TEST_CASE("transformation axiom") {
  SUBCASE("the worked map example passes for all three asymmetric methods") {
    for (MethodId method :
         {MethodId::reciprocal, MethodId::nonreciprocal, MethodId::unilateral}) {
      CHECK(check_transformation(method, fixtures::map_source(), fixtures::map_target(),
                                 identity_map(3))
                .pass);
    }
  }
  SUBCASE("identity maps pass") {
    const Network net = fixtures::golden_net();
    CHECK(check_transformation(MethodId::reciprocal, net, net, identity_map(3)).pass);
  }
  SUBCASE("non-reducing maps are gated") {
    const Network small = canonical_network({2, 1.0, 1.0, {}});
    const Network large = canonical_network({2, 2.0, 2.0, {}});
    CHECK_THROWS_AS(check_transformation(MethodId::reciprocal, small, large, identity_map(2)),
                    Error);
  }
  SUBCASE("randomized quotient and injection maps pass") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Network net = random_network(2 + seed % 5, seed % 4 ? 1.0 : 0.7, 5000 + seed);
      const MappedInstance q = random_quotient_instance(net, seed);
      const MappedInstance inj = random_injection_instance(net, seed);
      for (MethodId method :
           {MethodId::reciprocal, MethodId::nonreciprocal, MethodId::unilateral}) {
        CHECK(check_transformation(method, net, q.target, q.map).pass);
        CHECK(check_transformation(method, net, inj.target, inj.map).pass);
      }
    }
  }
}

TEST_CASE("influence properties") {
  const Network influence = fixtures::influence_net();

  SUBCASE("nonreciprocal output respects the loop-cost bound") {
    CHECK(check_influence(nonreciprocal(influence), influence, InfluenceVariant::loop_cost).pass);
  }
  SUBCASE("clustering a,b below the minimum loop cost is flagged") {
    const Ultrametric premature =
        Ultrametric::validate(influence.labels(), SquareMatrix::from_rows({
                                                 {0.0, 0.7, 3.0},
                                                 {0.7, 0.0, 3.0},
                                                 {3.0, 3.0, 0.0},
                                             }));
    const auto report = check_influence(premature, influence, InfluenceVariant::loop_cost);
    REQUIRE_FALSE(report.pass);
    CHECK(report.witness_nodes == std::vector<std::size_t>{0, 1});
    CHECK(report.witness_values == std::vector<Value>{0.7, 1.0});
    CHECK(report.witness.find("0.7") != std::string::npos);
  }
  SUBCASE("unilateral output respects the separation bound") {
    const Network golden = fixtures::golden_net();
    CHECK(check_influence(unilateral(golden), golden, InfluenceVariant::separation).pass);
  }
  SUBCASE("mismatched node sets are rejected") {
    CHECK_THROWS_AS(check_influence(nonreciprocal(influence), fixtures::map_source(),
                                    InfluenceVariant::loop_cost),
                    Error);
  }
}

TEST_CASE("sandwich checks") {
  const Network golden = fixtures::golden_net();

  CHECK(check_sandwich(nonreciprocal(golden), golden, SandwichVariant::nonreciprocal_reciprocal).pass);
  CHECK(check_sandwich(reciprocal(golden), golden, SandwichVariant::nonreciprocal_reciprocal).pass);
  CHECK(check_sandwich(unilateral(golden), golden, SandwichVariant::unilateral_reciprocal).pass);
  CHECK(check_sandwich(reciprocal(golden), golden, SandwichVariant::unilateral_reciprocal).pass);

  SUBCASE("a value below the nonreciprocal floor is flagged") {
    const Ultrametric low = Ultrametric::validate(golden.labels(), SquareMatrix::from_rows({
                                                      {0.0, 0.6, 1.0},
                                                      {0.6, 0.0, 1.0},
                                                      {1.0, 1.0, 0.0},
                                                  }));
    const auto report = check_sandwich(low, golden, SandwichVariant::nonreciprocal_reciprocal);
    REQUIRE_FALSE(report.pass);
    CHECK(report.witness_values == std::vector<Value>{0.6, 1.0});
  }
  SUBCASE("a value above the reciprocal ceiling is flagged") {
    const Ultrametric high = Ultrametric::validate(golden.labels(), SquareMatrix::from_rows({
                                                       {0.0, 9.0, 9.0},
                                                       {9.0, 0.0, 9.0},
                                                       {9.0, 9.0, 0.0},
                                                   }));
    CHECK_FALSE(check_sandwich(high, golden, SandwichVariant::nonreciprocal_reciprocal).pass);
  }
}

TEST_CASE("report rendering") {
  const AxiomReport ok{"some-predicate", true, "", {}, {}};
  CHECK(report_line(ok) == "PASS some-predicate");
  CHECK(report_json(ok) == R"({"predicate":"some-predicate","verdict":"pass"})");

  const AxiomReport bad{"some-predicate", false, "u(a,b) = 0.5 < 1", {0, 1}, {0.5, 1.0}};
  CHECK(report_line(bad) == "FAIL some-predicate: u(a,b) = 0.5 < 1");
  CHECK(report_json(bad).find("\"verdict\":\"fail\"") != std::string::npos);
  CHECK(report_json(bad).find("\"witness_nodes\":[0,1]") != std::string::npos);
}

TEST_CASE("random network generation") {
  SUBCASE("deterministic per seed") {
    CHECK(random_network(5, 1.0, 42) == random_network(5, 1.0, 42));
    CHECK(random_network(5, 1.0, 42) != random_network(5, 1.0, 43));
  }
  SUBCASE("single node") { CHECK(random_network(1, 1.0, 0).size() == 1); }
  SUBCASE("grid-valued entries") {
    const Network net = random_network(6, 1.0, 9);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if (i != j)
          CHECK(std::count(kValueGrid.begin(), kValueGrid.end(), net.at(i, j)) == 1);
  }
  SUBCASE("density controls the infinite fraction") {
    std::size_t finite = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Network net = random_network(6, 0.5, 6000 + seed);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
          if (i != j) {
            ++total;
            finite += std::isinf(net.at(i, j)) ? 0 : 1;
          }
    }
    const double fraction = static_cast<double>(finite) / static_cast<double>(total);
    CHECK(fraction > 0.45);
    CHECK(fraction < 0.55);
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(random_network(0, 1.0, 0), Error);
    CHECK_THROWS_AS(random_network(3, 0.0, 0), Error);
    CHECK_THROWS_AS(random_network(3, 1.5, 0), Error);
  }
  SUBCASE("symmetric generator is symmetric") {
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      CHECK(is_symmetric(random_symmetric_network(6, seed)));
  }
}

TEST_CASE("coincident bounds pin down the method") {
  // On symmetric networks the unilateral and reciprocal ultrametrics
  // coincide, so the two-sided bound admits exactly one matrix: any
  // perturbation falls out of the sandwich.
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Network net = random_symmetric_network(5, 6100 + seed);
    const Ultrametric lower = unilateral(net);
    const Ultrametric upper = reciprocal(net);
    CHECK(lower == upper);
    CHECK(check_sandwich(lower, net, SandwichVariant::unilateral_reciprocal).pass);
    CHECK(check_value_axiom(MethodId::unilateral, ValueAxiom::min_valued, 2.0, 2.0).pass);

    SquareMatrix bumped = lower.values();
    bumped(0, 1) = bumped(1, 0) = bumped(0, 1) + 1.0;
    if (bumped.is_symmetric()) {
      try {
        const Ultrametric other = Ultrametric::validate(net.labels(), bumped);
        CHECK_FALSE(check_sandwich(other, net, SandwichVariant::unilateral_reciprocal).pass);
      } catch (const Error&) {
        // The bump may already break the strong triangle inequality,
        // which excludes the candidate just as well.
      }
    }
  }
}

TEST_CASE("min-valued axiom plus transformation implies the separation bound") {
  // Implication structure: unilateral satisfies the min-valued two-node
  // axiom and the transformation axiom on sampled maps, and on those
  // same instances its output never dips below the separation.
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Network net = random_network(2 + seed % 5, 1.0, 6200 + seed);
    CHECK(check_value_axiom(MethodId::unilateral, ValueAxiom::min_valued, 1.0, 4.0).pass);
    const MappedInstance q = random_quotient_instance(net, seed);
    CHECK(check_transformation(MethodId::unilateral, net, q.target, q.map).pass);
    CHECK(check_influence(unilateral(net), net, InfluenceVariant::separation).pass);
  }
}
