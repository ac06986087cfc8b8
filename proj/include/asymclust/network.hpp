#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "asymclust/errors.hpp"
#include "asymclust/matrix.hpp"

namespace asymclust {

/// A finite directed dissimilarity network: labeled nodes and a square
/// matrix of extended nonnegative reals with exactly-zero diagonal and
/// strictly positive (possibly infinite) off-diagonal entries. The matrix
/// need not be symmetric and need not satisfy any triangle inequality.
///
/// Networks are immutable after construction and safe to share across
/// threads for reads.
class Network {
 public:
  /// Validating factory. Throws Error naming the first violated
  /// invariant: dimension_mismatch, duplicate_label, non_zero_diagonal,
  /// negative_entry, zero_off_diagonal.
  static Network validate(std::vector<std::string> labels, SquareMatrix dissim);

  std::size_t size() const noexcept { return dissim_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const SquareMatrix& dissim() const noexcept { return dissim_; }
  Value at(std::size_t i, std::size_t j) const { return dissim_(i, j); }

  /// Index of a label, or throws Error(index_out_of_range).
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  Network(std::vector<std::string> labels, SquareMatrix dissim)
      : labels_(std::move(labels)), dissim_(std::move(dissim)) {}

  std::vector<std::string> labels_;
  SquareMatrix dissim_;
};

/// Parameters for the canonical asymmetric networks: n nodes, value
/// `alpha` from lower to higher index, `beta` from higher to lower, with
/// an optional node permutation applied. An empty perm means identity.
struct CanonicalSpec {
  std::size_t n = 2;
  Value alpha = 1.0;
  Value beta = 1.0;
  std::vector<std::size_t> perm;
};

/// Disjoint nonempty index blocks covering {0..n-1}.
class Partition {
 public:
  static Partition validate(std::vector<std::vector<std::size_t>> blocks, std::size_t n);

  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t node_count() const noexcept { return n_; }

  /// Block index containing node i.
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }

  /// True iff every block of this partition is contained in one block
  /// of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  Partition(std::vector<std::vector<std::size_t>> blocks, std::vector<std::size_t> block_of,
            std::size_t n)
      : blocks_(std::move(blocks)), block_of_(std::move(block_of)), n_(n) {}

  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
  std::size_t n_ = 0;
};

/// Minimum positive dissimilarity of the network (its separation).
/// Requires at least two nodes.
Value separation(const Network& net);

/// Minimum over all loops of the loop's maximum link dissimilarity.
/// Computed as min over ordered pairs x != x' of
/// max(mcc(x,x'), mcc(x',x)) via the min-chain-cost closure; every loop
/// through two distinct nodes splits into two chains, so no loop
/// enumeration is needed. Requires at least two nodes.
Value min_loop_cost(const Network& net);

/// Entrywise max(A(x,x'), A(x',x)). Idempotent; output is symmetric.
Network max_symmetrize(const Network& net);

/// Entrywise min(A(x,x'), A(x',x)). Idempotent; output is symmetric.
Network min_symmetrize(const Network& net);

bool is_symmetric(const Network& net);

/// Canonical network on n nodes: before permutation, entry (i,j) is
/// alpha for i<j and beta for i>j; the permutation acts by
/// out(i,j) = base(perm[i], perm[j]). Labels are "1".."n".
Network canonical_network(const CanonicalSpec& spec);

/// Permutation action on the dissimilarity function over a fixed node
/// set: out(i,j) = in(perm[i], perm[j]); labels keep their positions.
/// perm must be a bijection on indices.
Network permute(const Network& net, const std::vector<std::size_t>& perm);

/// Quotient network of equivalence classes: one node per block,
/// A_Z(z,z') = min over x in z, x' in z' of A_X(x,x'), zero diagonal.
/// The induced block map never increases any dissimilarity.
Network quotient(const Network& net, const Partition& part);

}  // namespace asymclust
