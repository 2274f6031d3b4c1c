#pragma once

#include <string>
#include <string_view>

#include "critgraph/graph.hpp"

namespace critgraph {

inline constexpr int kGraph6MaxOrder = 62;

/// Standard graph6 for n <= 62: one size byte 63+n, then the upper
/// triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte,
/// each byte offset by 63, the final group padded with zeros.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. Throws ParseError (with the byte offset) on a
/// bad size byte, a byte outside 63..126, or a length mismatch.
Graph graph6_decode(std::string_view text);

} // namespace critgraph
