#include "asymclust/values.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "asymclust/errors.hpp"

namespace asymclust {

std::string format_value(Value v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;  // 64 chars always suffice for a double
  return std::string(buf, end);
}

bool try_parse_value(std::string_view text, Value& out) noexcept {
  // trim
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) return false;

  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "inf" || lowered == "+inf" || lowered == "infinity") {
    out = kInf;
    return true;
  }

  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && end == text.data() + text.size() && !std::isnan(out);
}

Value parse_value(std::string_view text) {
  Value v;
  if (!try_parse_value(text, v)) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace asymclust
