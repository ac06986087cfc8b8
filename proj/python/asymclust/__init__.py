"""Hierarchical clustering of directed dissimilarity networks.

A network is a set of labeled nodes with a square nonnegative
dissimilarity matrix: zero exactly on the diagonal, possibly asymmetric,
with ``inf`` marking absent edges. Every clustering method maps a
network to an ultrametric (equivalently, a dendrogram):

- ``reciprocal``: single linkage over max-symmetrized dissimilarities;
  merges need mutual influence along one chain.
- ``nonreciprocal``: max of the two directed minimum chain costs; the
  two directions may use different chains.
- ``unilateral``: single linkage over min-symmetrized dissimilarities;
  one direction suffices.
- ``single-linkage``: for symmetric networks only.

>>> import numpy as np, asymclust as ac
>>> net = ac.Network(["a", "b", "c"], np.array([[0, 0.5, 4], [2, 0, 0.5], [1, 3, 0]]))
>>> ac.cluster("nonreciprocal", net).values()[0, 1]
1.0
"""

from ._asymclust import (
    AxiomReport,
    Dendrogram,
    Merge,
    Network,
    ParseError,
    Ultrametric,
    ValidationError,
    brute_force_min_chain_cost,
    canonical_embedding,
    canonical_network,
    check_influence,
    check_sandwich,
    cluster,
    delta_partition,
    is_dissimilarity_reducing,
    is_symmetric,
    max_symmetrize,
    min_chain_cost,
    min_loop_cost,
    min_symmetrize,
    parse_network_csv,
    parse_network_edges,
    permute,
    quotient,
    random_network,
    separation,
    to_dendrogram,
    write_network_csv,
)

__all__ = [
    "AxiomReport",
    "Dendrogram",
    "Merge",
    "Network",
    "ParseError",
    "Ultrametric",
    "ValidationError",
    "brute_force_min_chain_cost",
    "canonical_embedding",
    "canonical_network",
    "check_influence",
    "check_sandwich",
    "cluster",
    "delta_partition",
    "is_dissimilarity_reducing",
    "is_symmetric",
    "max_symmetrize",
    "min_chain_cost",
    "min_loop_cost",
    "min_symmetrize",
    "parse_network_csv",
    "parse_network_edges",
    "permute",
    "quotient",
    "random_network",
    "separation",
    "to_dendrogram",
    "write_network_csv",
]
