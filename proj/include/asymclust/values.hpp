#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace asymclust {

/// Dissimilarities and ultrametric values are extended nonnegative reals:
/// finite doubles or +infinity (an absent edge). Every operation in this
/// library only combines values with min and max, so outputs are always
/// members of the input value multiset and comparisons are exact -- no
/// epsilon anywhere.
using Value = double;

inline constexpr Value kInf = std::numeric_limits<Value>::infinity();

/// Shortest decimal string that parses back to exactly `v`. Infinity
/// prints as "inf", the single textual form used in every file format.
std::string format_value(Value v);

/// Inverse of format_value. Accepts "inf"/"+inf" (any case) and any
/// decimal/scientific literal. Throws ParseError on garbage.
Value parse_value(std::string_view text);

/// Non-throwing variant; returns false on garbage.
bool try_parse_value(std::string_view text, Value& out) noexcept;

}  // namespace asymclust
