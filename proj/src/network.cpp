#include "asymclust/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "asymclust/paths.hpp"
#include "asymclust/values.hpp"

namespace asymclust {

Network Network::validate(std::vector<std::string> labels, SquareMatrix dissim) {
  const std::size_t n = dissim.size();
  if (labels.size() != n) {
    throw Error(errc::dimension_mismatch, std::to_string(labels.size()) + " labels for a " +
                                              std::to_string(n) + "x" + std::to_string(n) +
                                              " matrix");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(errc::duplicate_label, "'" + label + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dissim(i, i) != 0.0) {
      throw Error(errc::non_zero_diagonal,
                  "dissim(" + labels[i] + "," + labels[i] + ") = " + format_value(dissim(i, i)));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Value v = dissim(i, j);
      if (std::isnan(v) || v < 0.0) {
        throw Error(errc::negative_entry,
                    "dissim(" + labels[i] + "," + labels[j] + ") = " + format_value(v));
      }
      if (v == 0.0) {
        throw Error(errc::zero_off_diagonal, "dissim(" + labels[i] + "," + labels[j] + ") = 0");
      }
    }
  }
  return Network(std::move(labels), std::move(dissim));
}

std::size_t Network::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(errc::index_out_of_range, "no node labeled '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

Partition Partition::validate(std::vector<std::vector<std::size_t>> blocks, std::size_t n) {
  std::vector<std::size_t> block_of(n, static_cast<std::size_t>(-1));
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw Error(errc::invalid_partition, "block " + std::to_string(b) + " is empty");
    }
    for (std::size_t node : blocks[b]) {
      if (node >= n) {
        throw Error(errc::invalid_partition, "node index " + std::to_string(node) +
                                                 " out of range for n=" + std::to_string(n));
      }
      if (block_of[node] != static_cast<std::size_t>(-1)) {
        throw Error(errc::invalid_partition,
                    "node " + std::to_string(node) + " appears in two blocks");
      }
      block_of[node] = b;
      ++covered;
    }
    std::sort(blocks[b].begin(), blocks[b].end());
  }
  if (covered != n) {
    throw Error(errc::invalid_partition, "blocks cover " + std::to_string(covered) + " of " +
                                             std::to_string(n) + " nodes");
  }
  return Partition(std::move(blocks), std::move(block_of), n);
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.node_count() != n_) return false;
  for (const auto& block : blocks_) {
    const std::size_t target = coarser.block_of(block.front());
    for (std::size_t node : block) {
      if (coarser.block_of(node) != target) return false;
    }
  }
  return true;
}

Value separation(const Network& net) {
  const std::size_t n = net.size();
  if (n < 2) {
    throw Error(errc::too_few_nodes, "separation needs at least 2 nodes");
  }
  Value best = kInf;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) best = std::min(best, net.at(i, j));
  return best;
}

Value min_loop_cost(const Network& net) {
  const std::size_t n = net.size();
  if (n < 2) {
    throw Error(errc::too_few_nodes, "min_loop_cost needs at least 2 nodes");
  }
  // A loop through x and x' != x is two chains; its cost is the max of
  // the two chain costs, minimized by taking both chains optimal.
  const MinChainCostMatrix costs = min_chain_cost(net);
  Value best = kInf;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      best = std::min(best, std::max(costs(i, j), costs(j, i)));
  return best;
}

namespace {

Network symmetrize(const Network& net, bool take_max) {
  const std::size_t n = net.size();
  SquareMatrix out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Value v = take_max ? std::max(net.at(i, j), net.at(j, i))
                               : std::min(net.at(i, j), net.at(j, i));
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return Network::validate(net.labels(), std::move(out));
}

}  // namespace

Network max_symmetrize(const Network& net) { return symmetrize(net, true); }

Network min_symmetrize(const Network& net) { return symmetrize(net, false); }

bool is_symmetric(const Network& net) { return net.dissim().is_symmetric(); }

Network canonical_network(const CanonicalSpec& spec) {
  if (spec.n < 1) {
    throw Error(errc::bad_params, "canonical network needs n >= 1");
  }
  if (!(spec.alpha > 0.0) || !(spec.beta > 0.0) || std::isinf(spec.alpha) ||
      std::isinf(spec.beta)) {
    throw Error(errc::bad_params, "alpha and beta must be finite and positive");
  }
  std::vector<std::size_t> perm = spec.perm;
  if (perm.empty()) {
    perm.resize(spec.n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
  }
  if (perm.size() != spec.n) {
    throw Error(errc::bad_permutation, "permutation length " + std::to_string(perm.size()) +
                                           " for n=" + std::to_string(spec.n));
  }

  SquareMatrix base(spec.n, 0.0);
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t j = 0; j < spec.n; ++j)
      if (i != j) base(i, j) = i < j ? spec.alpha : spec.beta;

  std::vector<std::string> labels(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) labels[i] = std::to_string(i + 1);
  return permute(Network::validate(std::move(labels), std::move(base)), perm);
}

Network permute(const Network& net, const std::vector<std::size_t>& perm) {
  const std::size_t n = net.size();
  if (perm.size() != n) {
    throw Error(errc::bad_permutation,
                "length " + std::to_string(perm.size()) + " for n=" + std::to_string(n));
  }
  std::vector<bool> hit(n, false);
  for (std::size_t p : perm) {
    if (p >= n || hit[p]) {
      throw Error(errc::bad_permutation, "not a bijection on {0.." + std::to_string(n - 1) + "}");
    }
    hit[p] = true;
  }

  // The action transports the dissimilarity function over a fixed node
  // set; labels keep their positions.
  SquareMatrix out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = net.at(perm[i], perm[j]);
  return Network::validate(net.labels(), std::move(out));
}

Network quotient(const Network& net, const Partition& part) {
  if (part.node_count() != net.size()) {
    throw Error(errc::invalid_partition, "partition covers " + std::to_string(part.node_count()) +
                                             " nodes, network has " + std::to_string(net.size()));
  }
  const auto& blocks = part.blocks();
  const std::size_t m = blocks.size();

  SquareMatrix out(m, kInf);
  for (std::size_t z = 0; z < m; ++z) out(z, z) = 0.0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (i == j) continue;
      const std::size_t zi = part.block_of(i);
      const std::size_t zj = part.block_of(j);
      if (zi == zj) continue;
      out(zi, zj) = std::min(out(zi, zj), net.at(i, j));
    }
  }

  std::vector<std::string> labels(m);
  for (std::size_t z = 0; z < m; ++z) {
    std::string joined;
    for (std::size_t node : blocks[z]) {
      if (!joined.empty()) joined += '+';
      joined += net.labels()[node];
    }
    labels[z] = std::move(joined);
  }
  return Network::validate(std::move(labels), std::move(out));
}

}  // namespace asymclust
