#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wellkit {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);

/// Splits on a delimiter, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char delim);

/// Splits on runs of spaces/tabs, dropping empty fields.
std::vector<std::string_view> split_whitespace(std::string_view s);

/// Strict, locale-independent double parse of the whole (trimmed) token.
std::optional<double> try_parse_double(std::string_view s);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace wellkit
