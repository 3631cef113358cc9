#pragma once

#include <string>
#include <string_view>

#include "rcp/graph.hpp"

namespace rcp {

/// Edge-list text: a header line "n <count>" followed by one "u v" pair per
/// line (0-based). Blank lines and lines starting with '#' are ignored.
/// Throws ParseError on malformed text, loops, duplicates or bad endpoints.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

inline constexpr std::size_t kMaxGraph6Order = 62;

/// graph6 (single-byte order, n <= 62). Trailing whitespace is ignored.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace rcp
