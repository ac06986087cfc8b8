#include "asymclust/ultrametric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "asymclust/errors.hpp"
#include "asymclust/values.hpp"

namespace asymclust {

Ultrametric Ultrametric::validate(std::vector<std::string> labels, SquareMatrix values) {
  const std::size_t n = values.size();
  if (labels.size() != n) {
    throw Error(errc::dimension_mismatch, std::to_string(labels.size()) + " labels for a " +
                                              std::to_string(n) + "x" + std::to_string(n) +
                                              " matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (values(i, i) != 0.0) {
      throw Error(errc::bad_diagonal,
                  "u(" + labels[i] + "," + labels[i] + ") = " + format_value(values(i, i)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Value v = values(i, j);
      if (std::isnan(v) || v < 0.0) {
        throw Error(errc::negative_entry,
                    "u(" + labels[i] + "," + labels[j] + ") = " + format_value(v));
      }
      if (v == 0.0) {
        throw Error(errc::zero_off_diagonal, "u(" + labels[i] + "," + labels[j] + ") = 0");
      }
      if (v != values(j, i)) {
        throw Error(errc::not_symmetric, "u(" + labels[i] + "," + labels[j] + ") = " +
                                             format_value(v) + " but u(" + labels[j] + "," +
                                             labels[i] + ") = " + format_value(values(j, i)));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (values(i, k) > std::max(values(i, j), values(j, k))) {
          throw Error(errc::strong_triangle_violated,
                      "u(" + labels[i] + "," + labels[k] + ") = " + format_value(values(i, k)) +
                          " > max(u(" + labels[i] + "," + labels[j] + ") = " +
                          format_value(values(i, j)) + ", u(" + labels[j] + "," + labels[k] +
                          ") = " + format_value(values(j, k)) + ")");
        }
      }
    }
  }
  return Ultrametric(std::move(labels), std::move(values));
}

Ultrametric Ultrametric::unchecked(std::vector<std::string> labels, SquareMatrix values) {
  return Ultrametric(std::move(labels), std::move(values));
}

Dendrogram Dendrogram::validate(std::vector<std::string> leaves, std::vector<Merge> merges) {
  const std::size_t n = leaves.size();
  if (n == 0) {
    throw Error(errc::bad_merge, "dendrogram needs at least one leaf");
  }
  if (merges.size() > n - 1) {
    throw Error(errc::bad_merge, std::to_string(merges.size()) + " merges for " +
                                     std::to_string(n) + " leaves");
  }
  // alive[c]: cluster id c exists and has not yet been absorbed.
  std::vector<bool> alive(n + merges.size(), false);
  for (std::size_t i = 0; i < n; ++i) alive[i] = true;
  Value prev_height = 0.0;
  for (std::size_t k = 0; k < merges.size(); ++k) {
    const Merge& merge = merges[k];
    if (merge.id != n + k) {
      throw Error(errc::bad_merge, "merge " + std::to_string(k) + " creates cluster " +
                                       std::to_string(merge.id) + ", expected " +
                                       std::to_string(n + k));
    }
    if (!(merge.height > 0.0) || std::isinf(merge.height)) {
      throw Error(errc::bad_merge,
                  "merge height " + format_value(merge.height) + " not finite positive");
    }
    if (merge.height < prev_height) {
      throw Error(errc::bad_merge, "merge heights decrease at " + format_value(merge.height));
    }
    prev_height = merge.height;
    if (merge.left == merge.right || merge.left >= merge.id || merge.right >= merge.id ||
        !alive[merge.left] || !alive[merge.right]) {
      throw Error(errc::bad_merge, "merge " + std::to_string(k) + " joins unavailable clusters " +
                                       std::to_string(merge.left) + " and " +
                                       std::to_string(merge.right));
    }
    alive[merge.left] = false;
    alive[merge.right] = false;
    alive[merge.id] = true;
  }
  return Dendrogram(std::move(leaves), std::move(merges));
}

namespace {

// Union-find over cluster ids with per-root metadata used by the
// dendrogram builder.
class ClusterForest {
 public:
  explicit ClusterForest(std::size_t n) : parent_(n), cluster_id_(n), min_leaf_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    std::iota(cluster_id_.begin(), cluster_id_.end(), std::size_t{0});
    std::iota(min_leaf_.begin(), min_leaf_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  std::size_t cluster_id(std::size_t root) const { return cluster_id_[root]; }
  std::size_t min_leaf(std::size_t root) const { return min_leaf_[root]; }

  // Joins two roots into a new cluster id; returns the surviving root.
  std::size_t unite(std::size_t ra, std::size_t rb, std::size_t new_id) {
    parent_[rb] = ra;
    cluster_id_[ra] = new_id;
    min_leaf_[ra] = std::min(min_leaf_[ra], min_leaf_[rb]);
    return ra;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> cluster_id_;
  std::vector<std::size_t> min_leaf_;
};

}  // namespace

Dendrogram to_dendrogram(const Ultrametric& u) {
  const std::size_t n = u.size();

  // Heights ascend through the distinct finite off-diagonal values; at
  // each height every group of blocks connected by pairs at that value
  // collapses, smallest-leaf group first.
  std::map<Value, std::vector<std::pair<std::size_t, std::size_t>>> by_value;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!std::isinf(u.at(i, j))) by_value[u.at(i, j)].push_back({i, j});
    }
  }

  ClusterForest forest(n);
  std::vector<Merge> merges;
  std::size_t next_id = n;
  for (const auto& [height, pairs] : by_value) {
    // Group the blocks linked at this height.
    std::map<std::size_t, std::vector<std::size_t>> adjacency;  // root -> roots
    for (const auto& [i, j] : pairs) {
      const std::size_t ri = forest.find(i);
      const std::size_t rj = forest.find(j);
      if (ri == rj) continue;
      adjacency[ri].push_back(rj);
      adjacency[rj].push_back(ri);
    }
    // Connected components of the block graph, each a set of roots.
    std::map<std::size_t, bool> seen;
    std::vector<std::vector<std::size_t>> groups;
    for (const auto& [root, _] : adjacency) {
      if (seen[root]) continue;
      std::vector<std::size_t> group{root};
      seen[root] = true;
      for (std::size_t head = 0; head < group.size(); ++head) {
        for (std::size_t next : adjacency[group[head]]) {
          if (!seen[next]) {
            seen[next] = true;
            group.push_back(next);
          }
        }
      }
      groups.push_back(std::move(group));
    }
    // Deterministic order: groups by smallest contained leaf, and the
    // blocks inside a group likewise.
    for (auto& group : groups) {
      std::sort(group.begin(), group.end(), [&](std::size_t a, std::size_t b) {
        return forest.min_leaf(a) < forest.min_leaf(b);
      });
    }
    std::sort(groups.begin(), groups.end(),
              [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                return forest.min_leaf(a.front()) < forest.min_leaf(b.front());
              });
    for (const auto& group : groups) {
      std::size_t acc = group.front();
      for (std::size_t k = 1; k < group.size(); ++k) {
        const std::size_t left = forest.cluster_id(acc);
        const std::size_t right = forest.cluster_id(group[k]);
        merges.push_back({height, left, right, next_id});
        acc = forest.unite(acc, group[k], next_id);
        ++next_id;
      }
    }
  }
  return Dendrogram::validate(u.labels(), std::move(merges));
}

Ultrametric to_ultrametric(const Dendrogram& d) {
  const std::size_t n = d.leaf_count();
  SquareMatrix values(n, kInf);
  for (std::size_t i = 0; i < n; ++i) values(i, i) = 0.0;

  // Replay the merges, keeping the member list of each live cluster.
  std::vector<std::vector<std::size_t>> members(n + d.merges().size());
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  for (const Merge& merge : d.merges()) {
    for (std::size_t a : members[merge.left]) {
      for (std::size_t b : members[merge.right]) {
        values(a, b) = merge.height;
        values(b, a) = merge.height;
      }
    }
    members[merge.id] = std::move(members[merge.left]);
    members[merge.id].insert(members[merge.id].end(), members[merge.right].begin(),
                             members[merge.right].end());
    members[merge.left].clear();
    members[merge.right].clear();
  }
  return Ultrametric::unchecked(d.leaves(), std::move(values));
}

Partition cut(const Dendrogram& d, Value delta) {
  const std::size_t n = d.leaf_count();
  ClusterForest forest(n);
  std::vector<std::vector<std::size_t>> members(n + d.merges().size());
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  for (const Merge& merge : d.merges()) {
    if (merge.height > delta) break;
    members[merge.id] = std::move(members[merge.left]);
    members[merge.id].insert(members[merge.id].end(), members[merge.right].begin(),
                             members[merge.right].end());
    members[merge.left].clear();
    members[merge.right].clear();
  }
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& m : members) {
    if (!m.empty()) {
      std::sort(m.begin(), m.end());
      blocks.push_back(std::move(m));
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition::validate(std::move(blocks), n);
}

std::string to_merge_list(const Dendrogram& d) {
  std::ostringstream out;
  for (const Merge& merge : d.merges()) {
    out << format_value(merge.height) << '\t' << merge.left << '\t' << merge.right << '\t'
        << merge.id << '\n';
  }
  return out.str();
}

namespace {

struct TreeNode {
  Value height = 0.0;
  std::size_t left = static_cast<std::size_t>(-1);
  std::size_t right = static_cast<std::size_t>(-1);
};

void write_newick(std::ostringstream& out, const std::vector<TreeNode>& nodes,
                  const std::vector<std::string>& leaves, std::size_t id, Value parent_height) {
  if (id < leaves.size()) {
    out << leaves[id];
  } else {
    const TreeNode& node = nodes[id];
    out << '(';
    write_newick(out, nodes, leaves, node.left, node.height);
    out << ',';
    write_newick(out, nodes, leaves, node.right, node.height);
    out << ')';
  }
  if (!std::isnan(parent_height)) {
    const Value own = id < leaves.size() ? 0.0 : nodes[id].height;
    out << ':' << format_value(parent_height - own);
  }
}

}  // namespace

std::string to_newick(const Dendrogram& d) {
  const std::size_t total = d.leaf_count() + d.merges().size();
  std::vector<TreeNode> nodes(total);
  std::vector<bool> is_root(total, true);
  for (const Merge& merge : d.merges()) {
    nodes[merge.id] = {merge.height, merge.left, merge.right};
    is_root[merge.left] = false;
    is_root[merge.right] = false;
  }
  std::ostringstream out;
  for (std::size_t id = 0; id < total; ++id) {
    if (!is_root[id]) continue;
    write_newick(out, nodes, d.leaves(), id, std::numeric_limits<Value>::quiet_NaN());
    out << ";\n";
  }
  return out.str();
}

}  // namespace asymclust
