#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "asymclust/matrix.hpp"
#include "asymclust/network.hpp"

namespace asymclust {

/// A symmetric matrix with zero diagonal, positive off-diagonal entries
/// and the strong triangle inequality
///   u(x,x'') <= max(u(x,x'), u(x',x''))
/// for all triples. Equivalent to a dendrogram; the output type of every
/// clustering method. Entries may be +inf when two nodes never merge.
class Ultrametric {
 public:
  /// Validating factory; throws Error with a witness on the first
  /// violation: bad_diagonal(i), zero_off_diagonal/negative_entry(i,j),
  /// not_symmetric(i,j), strong_triangle_violated(i,j,k).
  static Ultrametric validate(std::vector<std::string> labels, SquareMatrix values);

  /// Trusted constructor for values already known to be ultrametric
  /// (method outputs: min/max closures of valid networks).
  static Ultrametric unchecked(std::vector<std::string> labels, SquareMatrix values);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const SquareMatrix& values() const noexcept { return values_; }
  Value at(std::size_t i, std::size_t j) const { return values_(i, j); }

  friend bool operator==(const Ultrametric&, const Ultrametric&) = default;

 private:
  Ultrametric(std::vector<std::string> labels, SquareMatrix values)
      : labels_(std::move(labels)), values_(std::move(values)) {}

  std::vector<std::string> labels_;
  SquareMatrix values_;
};

/// One agglomeration step: clusters `left` and `right` join at `height`
/// into a new cluster `id`. Leaves are clusters 0..n-1; internal
/// clusters are numbered n, n+1, ... in merge order (the usual linkage
/// convention).
struct Merge {
  Value height;
  std::size_t left;
  std::size_t right;
  std::size_t id;

  friend bool operator==(const Merge&, const Merge&) = default;
};

/// A merge tree over labeled leaves. Heights are strictly positive,
/// finite and non-decreasing; clusters never split. With n-1 merges the
/// tree is complete (single root); fewer merges leave a forest, which
/// arises only from ultrametrics with +inf entries.
class Dendrogram {
 public:
  /// Validating factory; enforces the structural conditions above and
  /// throws Error(bad_merge) with a witness otherwise.
  static Dendrogram validate(std::vector<std::string> leaves, std::vector<Merge> merges);

  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  const std::vector<std::string>& leaves() const noexcept { return leaves_; }
  const std::vector<Merge>& merges() const noexcept { return merges_; }

  std::size_t root_count() const noexcept { return leaves_.size() - merges_.size(); }
  bool complete() const noexcept { return root_count() == 1; }

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;

 private:
  Dendrogram(std::vector<std::string> leaves, std::vector<Merge> merges)
      : leaves_(std::move(leaves)), merges_(std::move(merges)) {}

  std::vector<std::string> leaves_;
  std::vector<Merge> merges_;
};

/// Merge tree of an ultrametric: walk the distinct finite off-diagonal
/// values in ascending order and join, at each value, the groups of
/// blocks whose cross value equals it. Groups merging at one height are
/// emitted as chained binary merges at that height; ordering among equal
/// heights (and within a group) is by smallest contained leaf index.
/// Infinite values yield a forest (root_count() > 1) rather than a
/// fabricated top merge.
Dendrogram to_dendrogram(const Ultrametric& u);

/// Inverse map: u(x,x') is the height of the lowest merge containing
/// both; +inf for leaves in different trees of a forest.
Ultrametric to_ultrametric(const Dendrogram& d);

/// Partition at resolution delta: apply every merge of height <= delta.
/// Blocks are ordered by smallest member index.
Partition cut(const Dendrogram& d, Value delta);

/// One merge per line: height<TAB>left<TAB>right<TAB>new_id.
/// Numbers use shortest round-trip decimals.
std::string to_merge_list(const Dendrogram& d);

/// Newick string with branch lengths equal to the height difference
/// between a cluster and its parent merge. A forest emits one tree per
/// line. Lengths use shortest round-trip decimals.
std::string to_newick(const Dendrogram& d);

}  // namespace asymclust
