#pragma once

#include <charconv>
#include <optional>
#include <string>

#include "json.hpp"

namespace typik::detail {

/// Exact decimal text of a JSON number or string. Floating literals are
/// recovered through the shortest round-trip representation of the double.
template <class Json>
std::optional<std::string> json_decimal_text(const Json& j) {
  if (j.is_string()) return j.template get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.template get<std::int64_t>());
  if (j.is_number_unsigned()) return std::to_string(j.template get<std::uint64_t>());
  if (j.is_number_float()) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, j.template get<double>(), std::chars_format::fixed);
    if (res.ec != std::errc()) return std::nullopt;
    return std::string(buf, res.ptr);
  }
  return std::nullopt;
}

}  // namespace typik::detail
