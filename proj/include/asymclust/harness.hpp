#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "asymclust/methods.hpp"
#include "asymclust/network.hpp"
#include "asymclust/ultrametric.hpp"

namespace asymclust {

/// Total function from the node indices of a source network into the
/// node indices of a target network.
struct NodeMap {
  std::vector<std::size_t> to;
};

/// Verdict of one machine-checkable predicate. A failed report always
/// carries a concrete witness: the offending node indices and values in
/// structured form plus a human-readable rendering.
struct AxiomReport {
  std::string predicate;
  bool pass = false;
  std::string witness;                       // empty iff pass
  std::vector<std::size_t> witness_nodes;    // offending indices, if any
  std::vector<Value> witness_values;         // offending values, if any
};

/// One line: "PASS <predicate>" or "FAIL <predicate>: <witness>".
std::string report_line(const AxiomReport& report);

/// One JSON record per report: {"predicate":..., "verdict":"pass"|"fail",
/// "witness":...}.
std::string report_json(const AxiomReport& report);

/// Pass iff A_src(x,x') >= A_dst(map(x), map(x')) for every ordered
/// pair. Throws Error(dimension_mismatch) if the map does not cover the
/// source or lands outside the target.
AxiomReport is_dissimilarity_reducing(const NodeMap& map, const Network& src,
                                      const Network& dst);

/// Two-node value axioms: the required merge value of the two-node
/// network with dissimilarities (alpha, beta).
enum class ValueAxiom {
  max_valued,  // u = max(alpha, beta)
  min_valued,  // u = min(alpha, beta)
  agnostic,    // min <= u <= max
};

AxiomReport check_value_axiom(MethodId method, ValueAxiom variant, Value alpha, Value beta);

/// Extended value axiom: on the canonical network with any node
/// permutation, every off-diagonal output value equals max(alpha, beta).
AxiomReport check_extended_value(MethodId method, std::size_t n, Value alpha, Value beta,
                                 const std::vector<std::size_t>& perm);

/// Transformation axiom on one instance: given a dissimilarity-reducing
/// map, u_src(x,x') >= u_dst(map(x), map(x')) for all source pairs.
/// Throws Error(not_dissimilarity_reducing) when the map precondition
/// fails.
AxiomReport check_transformation(MethodId method, const Network& src, const Network& dst,
                                 const NodeMap& map);

enum class InfluenceVariant {
  loop_cost,   // min off-diagonal u >= min_loop_cost(net)
  separation,  // min off-diagonal u >= separation(net)
};

AxiomReport check_influence(const Ultrametric& u, const Network& net, InfluenceVariant variant);

enum class SandwichVariant {
  nonreciprocal_reciprocal,  // nonreciprocal <= u <= reciprocal, entrywise
  unilateral_reciprocal,     // unilateral    <= u <= reciprocal, entrywise
};

AxiomReport check_sandwich(const Ultrametric& u, const Network& net, SandwichVariant variant);

/// Grid the randomized suites draw dissimilarities from; small on
/// purpose so that ties are frequent.
extern const std::vector<Value> kValueGrid;

/// Deterministic-by-seed network with grid-valued dissimilarities.
/// density < 1 turns the complementary fraction of off-diagonal entries
/// into +inf. Throws Error(bad_params) for n < 1 or density outside
/// (0, 1].
Network random_network(std::size_t n, double density, std::uint64_t seed);

/// Symmetric variant of random_network (entries mirrored).
Network random_symmetric_network(std::size_t n, std::uint64_t seed);

std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed);

/// A target network plus a dissimilarity-reducing map onto it.
struct MappedInstance {
  Network target;
  NodeMap map;
};

/// Random quotient instance: collapse a random partition of net's nodes;
/// the block map is dissimilarity-reducing by construction.
MappedInstance random_quotient_instance(const Network& net, std::uint64_t seed);

/// Random injection instance: embed net into a larger random network
/// whose image entries do not exceed the source entries.
MappedInstance random_injection_instance(const Network& net, std::uint64_t seed);

}  // namespace asymclust
