#pragma once

#include <stdexcept>
#include <string>

namespace asymclust {

/// Every contract violation in the library maps to one of these codes.
/// The code names the first violated invariant; the message carries a
/// concrete witness (indices and values).
enum class errc {
  // network validation
  non_zero_diagonal,
  negative_entry,
  zero_off_diagonal,
  dimension_mismatch,
  duplicate_label,
  too_few_nodes,
  bad_permutation,
  invalid_partition,
  bad_params,
  // chains
  index_out_of_range,
  chain_too_short,
  too_large,
  precondition_violated,
  bad_alpha,
  // ultrametric / dendrogram validation
  not_symmetric,
  bad_diagonal,
  strong_triangle_violated,
  infinite_value,
  bad_merge,
  // harness
  not_dissimilarity_reducing,
};

const char* errc_name(errc code);

/// Invariant/contract violation on otherwise well-formed input.
/// The CLI maps these to exit code 3 (4 for method/input mismatch).
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Malformed input text (CSV/edge-list/number syntax). CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace asymclust
