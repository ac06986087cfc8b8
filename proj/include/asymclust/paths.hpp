#pragma once

#include <cstddef>
#include <vector>

#include "asymclust/network.hpp"

namespace asymclust {

/// An ordered node sequence, endpoints inclusive, repetitions allowed.
/// At least two entries; a loop additionally needs an intermediate node
/// distinct from its endpoint.
using Chain = std::vector<std::size_t>;

/// All-pairs directed minimum chain costs: entry (x,x') is the minimum
/// over chains from x to x' of the chain's maximum link dissimilarity.
/// Zero diagonal; closed under the (min,max) relaxation
/// m(i,k) <= max(m(i,j), m(j,k)); entrywise <= the input dissimilarity.
using MinChainCostMatrix = SquareMatrix;

/// Maximum dissimilarity over the chain's consecutive links.
Value chain_cost(const Network& net, const Chain& chain);

/// The (min,max)-semiring closure of the dissimilarity matrix, a
/// Floyd-Warshall-shaped triple loop. O(n^3) time, O(n^2) space.
MinChainCostMatrix min_chain_cost(const Network& net);

/// Independent oracle for min_chain_cost: per ordered pair, enumerate
/// every simple chain by depth-first search and take the cheapest
/// maximum link. Simple chains suffice because deleting a repeated-node
/// excursion never increases a chain's maximum link. Capped at 8 nodes.
MinChainCostMatrix brute_force_min_chain_cost(const Network& net);

/// One chain from x to xp whose cost equals the closure entry,
/// reconstructed by predecessor tracking. Minimizing chains are not
/// unique; this returns an arbitrary one.
Chain bottleneck_chain(const Network& net, std::size_t x, std::size_t xp);

/// Two-block partition {B(x), B(xp)} with every dissimilarity from
/// B(x) into B(xp) at least delta. B(x) is x plus everything reachable
/// from x by chains of cost strictly below delta; B(xp) is the rest.
/// Requires mcc(x,xp) >= delta (else Error(precondition_violated)).
/// The returned partition is re-checked against the cross-dissimilarity
/// bound before returning.
Partition delta_partition(const Network& net, std::size_t x, std::size_t xp, Value delta);

/// Bijection phi onto canonical positions 0..n-1 such that
/// A(x,x') >= A_canon(phi[x], phi[x']) where the canonical network has
/// parameters (alpha, beta = min_loop_cost(net)). Built by repeatedly
/// picking the lowest-index node all of whose sub-beta predecessors were
/// already picked. Requires 0 < alpha <= separation(net) (else
/// Error(bad_alpha)) and at least two nodes. The dissimilarity-reducing
/// guarantee is verified over all pairs before returning.
std::vector<std::size_t> canonical_embedding(const Network& net, Value alpha);

}  // namespace asymclust
