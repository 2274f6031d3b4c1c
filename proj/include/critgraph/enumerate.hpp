#pragma once

#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

inline constexpr int kEnumerationMaxOrder = 10;

struct EnumerationFilter {
    bool connected = false;
    int min_degree = 0;
    int min_girth = 0; // 0 disables; forests always pass
    bool four_critical = false;
};

/// Every graph up to isomorphism with 1 <= n <= max_n vertices that passes
/// the filter, canonically labeled, ordered by n then canonical form.
///
/// Graphs grow one vertex at a time; each level is deduplicated by
/// canonical form. Hereditary filters (girth, and 3-colorability of proper
/// subgraphs when searching for 4-critical graphs) prune interior levels;
/// the rest apply to the graphs being reported.
std::vector<Graph> enumerate_graphs(int max_n, const EnumerationFilter& filter = {}, int jobs = 1);

} // namespace critgraph
