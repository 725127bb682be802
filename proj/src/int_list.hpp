#pragma once

#include <string_view>
#include <vector>

namespace lrct::detail {

// Parses a bracketed, comma-separated integer list: "[3,1]", "[]", "[1,-2]".
// Throws ParseError on malformed input.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace lrct::detail
