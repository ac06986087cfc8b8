#include "asymclust/errors.hpp"

namespace asymclust {

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_zero_diagonal: return "NonZeroDiagonal";
    case errc::negative_entry: return "NegativeEntry";
    case errc::zero_off_diagonal: return "ZeroOffDiagonal";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::too_few_nodes: return "TooFewNodes";
    case errc::bad_permutation: return "BadPermutation";
    case errc::invalid_partition: return "InvalidPartition";
    case errc::bad_params: return "BadParams";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::chain_too_short: return "ChainTooShort";
    case errc::too_large: return "TooLarge";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::bad_alpha: return "BadAlpha";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::bad_diagonal: return "BadDiagonal";
    case errc::strong_triangle_violated: return "StrongTriangleViolated";
    case errc::infinite_value: return "InfiniteValue";
    case errc::bad_merge: return "BadMerge";
    case errc::not_dissimilarity_reducing: return "NotDissimilarityReducing";
  }
  return "UnknownError";
}

}  // namespace asymclust
