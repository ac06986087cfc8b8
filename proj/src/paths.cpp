#include "asymclust/paths.hpp"

#include <algorithm>
#include <cmath>

#include "asymclust/values.hpp"

namespace asymclust {

Value chain_cost(const Network& net, const Chain& chain) {
  if (chain.size() < 2) {
    throw Error(errc::chain_too_short,
                "chain has " + std::to_string(chain.size()) + " nodes, needs at least 2");
  }
  for (std::size_t node : chain) {
    if (node >= net.size()) {
      throw Error(errc::index_out_of_range, "chain node " + std::to_string(node) +
                                                " out of range for n=" +
                                                std::to_string(net.size()));
    }
  }
  Value cost = 0.0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    cost = std::max(cost, net.at(chain[i], chain[i + 1]));
  }
  return cost;
}

MinChainCostMatrix min_chain_cost(const Network& net) {
  const std::size_t n = net.size();
  MinChainCostMatrix m = net.dissim();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Value via_k = m(i, k);
      if (std::isinf(via_k)) continue;
      Value* row_i = m.row(i);
      const Value* row_k = m.row(k);
      for (std::size_t j = 0; j < n; ++j) {
        const Value relaxed = std::max(via_k, row_k[j]);
        if (relaxed < row_i[j]) row_i[j] = relaxed;
      }
    }
  }
  return m;
}

namespace {

// Exhaustive DFS over simple chains from `current` to `goal`, keeping
// the running maximum link. Deliberately plain: this is the oracle the
// closure is checked against.
void search_simple_chains(const Network& net, std::size_t current, std::size_t goal,
                          Value cost_so_far, std::vector<bool>& visited, Value& best) {
  if (current == goal) {
    best = std::min(best, cost_so_far);
    return;
  }
  for (std::size_t next = 0; next < net.size(); ++next) {
    if (visited[next]) continue;
    visited[next] = true;
    search_simple_chains(net, next, goal, std::max(cost_so_far, net.at(current, next)), visited,
                         best);
    visited[next] = false;
  }
}

}  // namespace

MinChainCostMatrix brute_force_min_chain_cost(const Network& net) {
  const std::size_t n = net.size();
  if (n > 8) {
    throw Error(errc::too_large,
                "brute-force oracle capped at 8 nodes, got " + std::to_string(n));
  }
  MinChainCostMatrix m(n, 0.0);
  std::vector<bool> visited(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Value best = kInf;
      visited.assign(n, false);
      visited[i] = true;
      // First hop out of i; the DFS may not revisit i.
      for (std::size_t next = 0; next < n; ++next) {
        if (next == i) continue;
        visited[next] = true;
        search_simple_chains(net, next, j, net.at(i, next), visited, best);
        visited[next] = false;
      }
      m(i, j) = best;
    }
  }
  return m;
}

Chain bottleneck_chain(const Network& net, std::size_t x, std::size_t xp) {
  const std::size_t n = net.size();
  if (x >= n || xp >= n) {
    throw Error(errc::index_out_of_range, "node index out of range");
  }
  if (x == xp) return Chain{x, xp};

  // Any chain built from links not exceeding the closure value is
  // optimal, so BFS over that link subgraph with parent tracking.
  const Value bound = min_chain_cost(net)(x, xp);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, unset);
  std::vector<std::size_t> queue{x};
  parent[x] = x;
  for (std::size_t head = 0; head < queue.size() && parent[xp] == unset; ++head) {
    const std::size_t current = queue[head];
    for (std::size_t next = 0; next < n; ++next) {
      if (parent[next] != unset || net.at(current, next) > bound) continue;
      parent[next] = current;
      queue.push_back(next);
    }
  }

  Chain chain;
  for (std::size_t node = xp; node != x; node = parent[node]) chain.push_back(node);
  chain.push_back(x);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Partition delta_partition(const Network& net, std::size_t x, std::size_t xp, Value delta) {
  const std::size_t n = net.size();
  if (x >= n || xp >= n || x == xp) {
    throw Error(errc::index_out_of_range, "need two distinct valid node indices");
  }
  if (!(delta > 0.0)) {
    throw Error(errc::bad_params, "delta must be positive");
  }
  const MinChainCostMatrix costs = min_chain_cost(net);
  if (costs(x, xp) < delta) {
    throw Error(errc::precondition_violated,
                "min chain cost " + format_value(costs(x, xp)) + " from '" + net.labels()[x] +
                    "' to '" + net.labels()[xp] + "' is below delta=" + format_value(delta));
  }

  std::vector<std::vector<std::size_t>> blocks(2);
  for (std::size_t i = 0; i < n; ++i) {
    const bool near_x = i == x || costs(x, i) < delta;
    blocks[near_x ? 0 : 1].push_back(i);
  }
  Partition part = Partition::validate(std::move(blocks), n);

  // The reachability construction makes the bound hold; re-check it
  // anyway so a violated return is impossible.
  for (std::size_t b : part.blocks()[0]) {
    for (std::size_t bp : part.blocks()[1]) {
      if (net.at(b, bp) < delta) {
        throw Error(errc::precondition_violated,
                    "cross dissimilarity " + format_value(net.at(b, bp)) + " from '" +
                        net.labels()[b] + "' to '" + net.labels()[bp] + "' is below delta");
      }
    }
  }
  return part;
}

std::vector<std::size_t> canonical_embedding(const Network& net, Value alpha) {
  const std::size_t n = net.size();
  if (n < 2) {
    throw Error(errc::too_few_nodes, "canonical embedding needs at least 2 nodes");
  }
  const Value sep = separation(net);
  if (!(alpha > 0.0) || alpha > sep) {
    throw Error(errc::bad_alpha,
                "alpha=" + format_value(alpha) + " outside (0, sep=" + format_value(sep) + "]");
  }
  const Value beta = min_loop_cost(net);

  // Repeatedly pick the lowest-index node whose sub-beta predecessors
  // all have positions already. A pick always exists: otherwise every
  // unpicked node keeps an unpicked predecessor at cost < beta, and
  // following those backwards n+1 steps closes a loop cheaper than the
  // minimum loop cost.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(n, unset);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t picked = unset;
    for (std::size_t candidate = 0; candidate < n && picked == unset; ++candidate) {
      if (position[candidate] != unset) continue;
      bool eligible = true;
      for (std::size_t pred = 0; pred < n; ++pred) {
        if (pred == candidate || position[pred] != unset) continue;
        if (net.at(pred, candidate) < beta) {
          eligible = false;
          break;
        }
      }
      if (eligible) picked = candidate;
    }
    if (picked == unset) {
      throw Error(errc::precondition_violated, "no eligible node; min loop cost inconsistent");
    }
    position[picked] = step;
  }

  // Exhaustive self-check of the dissimilarity-reducing guarantee.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Value canon = position[i] < position[j] ? alpha : beta;
      if (net.at(i, j) < canon) {
        throw Error(errc::precondition_violated,
                    "embedding not dissimilarity-reducing at (" + net.labels()[i] + "," +
                        net.labels()[j] + "): " + format_value(net.at(i, j)) + " < " +
                        format_value(canon));
      }
    }
  }
  return position;
}

}  // namespace asymclust
