#pragma once

#include <optional>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/graph_ops.hpp"

namespace critgraph {

struct Coloring {
    std::vector<int> colors; // vertex -> color in 1..k
    int k = 0;

    bool operator==(const Coloring&) const = default;
};

/// Proper and total with colors in 1..k.
bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Backtracking over vertices in descending-degree order with forced-color
/// propagation. Deterministic for a given graph.
std::optional<Coloring> k_colorable(const Graph& g, int k);
bool is_3_colorable(const Graph& g);

bool is_4_critical(const Graph& g);

/// Deletes, in lexicographic edge order, every edge whose removal keeps the
/// graph non-3-colorable, then drops isolated vertices. The relabeling maps
/// vertices of the result back into g.
Relabeled critical_subgraph(const Graph& g);

/// Is G[r] + uv not 3-colorable?
bool is_identifiable_pair(const Graph& g, VertexSet r, int u, int v);

} // namespace critgraph
