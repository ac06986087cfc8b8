#include "asymclust/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "asymclust/values.hpp"

namespace asymclust {

const std::vector<Value> kValueGrid = {0.5, 1.0, 2.0, 3.0, 4.0, 5.0};

std::string report_line(const AxiomReport& report) {
  if (report.pass) return "PASS " + report.predicate;
  return "FAIL " + report.predicate + ": " + report.witness;
}

std::string report_json(const AxiomReport& report) {
  nlohmann::json record{
      {"predicate", report.predicate},
      {"verdict", report.pass ? "pass" : "fail"},
  };
  if (!report.pass) {
    record["witness"] = report.witness;
    record["witness_nodes"] = report.witness_nodes;
    nlohmann::json values = nlohmann::json::array();
    for (Value v : report.witness_values) {
      if (std::isinf(v)) {
        values.push_back("inf");
      } else {
        values.push_back(v);
      }
    }
    record["witness_values"] = values;
  }
  return record.dump();
}

namespace {

AxiomReport passed(std::string predicate) { return {std::move(predicate), true, "", {}, {}}; }

AxiomReport failed(std::string predicate, std::string witness, std::vector<std::size_t> nodes,
                   std::vector<Value> values) {
  return {std::move(predicate), false, std::move(witness), std::move(nodes), std::move(values)};
}

void require_same_nodes(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a != b) {
    throw Error(errc::dimension_mismatch, "node sets differ");
  }
}

}  // namespace

AxiomReport is_dissimilarity_reducing(const NodeMap& map, const Network& src,
                                      const Network& dst) {
  if (map.to.size() != src.size()) {
    throw Error(errc::dimension_mismatch, "map covers " + std::to_string(map.to.size()) +
                                              " nodes, source has " + std::to_string(src.size()));
  }
  for (std::size_t t : map.to) {
    if (t >= dst.size()) {
      throw Error(errc::dimension_mismatch,
                  "map target " + std::to_string(t) + " out of range");
    }
  }
  for (std::size_t x = 0; x < src.size(); ++x) {
    for (std::size_t xp = 0; xp < src.size(); ++xp) {
      const Value before = src.at(x, xp);
      const Value after = dst.at(map.to[x], map.to[xp]);
      if (before < after) {
        return failed("dissimilarity-reducing",
                      "A_src(" + src.labels()[x] + "," + src.labels()[xp] + ") = " +
                          format_value(before) + " < A_dst(" + dst.labels()[map.to[x]] + "," +
                          dst.labels()[map.to[xp]] + ") = " + format_value(after),
                      {x, xp}, {before, after});
      }
    }
  }
  return passed("dissimilarity-reducing");
}

AxiomReport check_value_axiom(MethodId method, ValueAxiom variant, Value alpha, Value beta) {
  const Network two = canonical_network({2, alpha, beta, {}});
  const Ultrametric u = cluster(method, two);
  const Value got = u.at(0, 1);
  const Value lo = std::min(alpha, beta);
  const Value hi = std::max(alpha, beta);

  std::string name;
  bool ok = false;
  switch (variant) {
    case ValueAxiom::max_valued:
      name = "value-axiom-max";
      ok = got == hi;
      break;
    case ValueAxiom::min_valued:
      name = "value-axiom-min";
      ok = got == lo;
      break;
    case ValueAxiom::agnostic:
      name = "value-axiom-agnostic";
      ok = lo <= got && got <= hi;
      break;
  }
  name += "(" + method_name(method) + ")";
  if (ok) return passed(name);
  return failed(name,
                "u(p,q) = " + format_value(got) + " for alpha=" + format_value(alpha) +
                    ", beta=" + format_value(beta),
                {0, 1}, {got});
}

AxiomReport check_extended_value(MethodId method, std::size_t n, Value alpha, Value beta,
                                 const std::vector<std::size_t>& perm) {
  const Network canon = canonical_network({n, alpha, beta, perm});
  const Ultrametric u = cluster(method, canon);
  const Value expected = std::max(alpha, beta);
  const std::string name = "extended-value-axiom(" + method_name(method) + ")";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (u.at(i, j) != expected) {
        return failed(name,
                      "u(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                          format_value(u.at(i, j)) + " != max(alpha,beta) = " +
                          format_value(expected),
                      {i, j}, {u.at(i, j), expected});
      }
    }
  }
  return passed(name);
}

AxiomReport check_transformation(MethodId method, const Network& src, const Network& dst,
                                 const NodeMap& map) {
  const AxiomReport gate = is_dissimilarity_reducing(map, src, dst);
  if (!gate.pass) {
    throw Error(errc::not_dissimilarity_reducing, gate.witness);
  }
  const Ultrametric u_src = cluster(method, src);
  const Ultrametric u_dst = cluster(method, dst);
  const std::string name = "transformation-axiom(" + method_name(method) + ")";
  for (std::size_t x = 0; x < src.size(); ++x) {
    for (std::size_t xp = x + 1; xp < src.size(); ++xp) {
      const Value before = u_src.at(x, xp);
      const Value after = u_dst.at(map.to[x], map.to[xp]);
      if (before < after) {
        return failed(name,
                      "u_src(" + src.labels()[x] + "," + src.labels()[xp] + ") = " +
                          format_value(before) + " < u_dst(" + dst.labels()[map.to[x]] + "," +
                          dst.labels()[map.to[xp]] + ") = " + format_value(after),
                      {x, xp}, {before, after});
      }
    }
  }
  return passed(name);
}

AxiomReport check_influence(const Ultrametric& u, const Network& net, InfluenceVariant variant) {
  require_same_nodes(u.labels(), net.labels());
  const bool strict = variant == InfluenceVariant::loop_cost;
  const Value bound = strict ? min_loop_cost(net) : separation(net);
  const std::string name = strict ? "influence-property" : "influence-property-alt";
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u.at(i, j) < bound) {
        return failed(name,
                      "u(" + net.labels()[i] + "," + net.labels()[j] + ") = " +
                          format_value(u.at(i, j)) + " < " + (strict ? "mlc" : "sep") + " = " +
                          format_value(bound),
                      {i, j}, {u.at(i, j), bound});
      }
    }
  }
  return passed(name);
}

AxiomReport check_sandwich(const Ultrametric& u, const Network& net, SandwichVariant variant) {
  require_same_nodes(u.labels(), net.labels());
  const bool from_below = variant == SandwichVariant::nonreciprocal_reciprocal;
  const Ultrametric lower = from_below ? nonreciprocal(net) : unilateral(net);
  const Ultrametric upper = reciprocal(net);
  const std::string name = from_below ? "sandwich-nonreciprocal-reciprocal"
                                      : "sandwich-unilateral-reciprocal";
  const std::string lower_name = from_below ? "nonreciprocal" : "unilateral";
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u.at(i, j) < lower.at(i, j)) {
        return failed(name,
                      "u(" + net.labels()[i] + "," + net.labels()[j] + ") = " +
                          format_value(u.at(i, j)) + " < " + lower_name + " = " +
                          format_value(lower.at(i, j)),
                      {i, j}, {u.at(i, j), lower.at(i, j)});
      }
      if (u.at(i, j) > upper.at(i, j)) {
        return failed(name,
                      "u(" + net.labels()[i] + "," + net.labels()[j] + ") = " +
                          format_value(u.at(i, j)) + " > reciprocal = " +
                          format_value(upper.at(i, j)),
                      {i, j}, {u.at(i, j), upper.at(i, j)});
      }
    }
  }
  return passed(name);
}

namespace {

// All suite randomness goes through the raw engine (no distribution
// adapters) so byte-identical output is reproducible per seed.
std::size_t pick_index(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

Value pick_grid_value(std::mt19937_64& rng) { return kValueGrid[pick_index(rng, kValueGrid.size())]; }

std::vector<std::string> index_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i);
  return labels;
}

}  // namespace

Network random_network(std::size_t n, double density, std::uint64_t seed) {
  if (n < 1 || !(density > 0.0) || density > 1.0) {
    throw Error(errc::bad_params, "need n >= 1 and density in (0,1]");
  }
  std::mt19937_64 rng(seed);
  SquareMatrix m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool finite =
          density >= 1.0 || (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density);
      m(i, j) = finite ? pick_grid_value(rng) : kInf;
    }
  }
  return Network::validate(index_labels(n, "x"), std::move(m));
}

Network random_symmetric_network(std::size_t n, std::uint64_t seed) {
  if (n < 1) {
    throw Error(errc::bad_params, "need n >= 1");
  }
  std::mt19937_64 rng(seed);
  SquareMatrix m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Value v = pick_grid_value(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return Network::validate(index_labels(n, "x"), std::move(m));
}

std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[pick_index(rng, i)]);
  }
  return perm;
}

MappedInstance random_quotient_instance(const Network& net, std::uint64_t seed) {
  const std::size_t n = net.size();
  std::mt19937_64 rng(seed);
  const std::size_t block_count = 1 + pick_index(rng, n);

  // Shuffle the nodes, seed one node per block, then scatter the rest.
  std::vector<std::size_t> order = random_permutation(n, rng());
  std::vector<std::vector<std::size_t>> blocks(block_count);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t b = i < block_count ? i : pick_index(rng, block_count);
    blocks[b].push_back(order[i]);
  }
  const Partition part = Partition::validate(std::move(blocks), n);

  NodeMap map;
  map.to.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.to[i] = part.block_of(i);
  return {quotient(net, part), std::move(map)};
}

MappedInstance random_injection_instance(const Network& net, std::uint64_t seed) {
  const std::size_t n = net.size();
  std::mt19937_64 rng(seed);
  const std::size_t m = n + 1 + pick_index(rng, 3);

  // Image entries copy the source (occasionally shrunk); everything else
  // is free grid noise.
  const std::vector<std::size_t> slots = random_permutation(m, rng());
  SquareMatrix target(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) target(i, j) = pick_grid_value(rng);

  NodeMap map;
  map.to.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.to[i] = slots[i];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Value v = net.at(i, j);
      if (rng() % 4 == 0) {
        // Shrink to a random grid value not above the source value.
        std::vector<Value> smaller;
        for (Value g : kValueGrid)
          if (g <= v) smaller.push_back(g);
        if (!smaller.empty()) v = smaller[pick_index(rng, smaller.size())];
      }
      target(map.to[i], map.to[j]) = v;
    }
  }
  return {Network::validate(index_labels(m, "y"), std::move(target)), std::move(map)};
}

}  // namespace asymclust
