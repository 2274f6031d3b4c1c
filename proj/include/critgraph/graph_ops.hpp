#pragma once

#include <optional>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

/// A graph produced by a structural operation together with the dense,
/// order-preserving relabeling that produced it.
struct Relabeled {
    Graph graph;
    std::vector<int> to_new; // old vertex -> new vertex, -1 if removed
    std::vector<int> to_old; // new vertex -> old vertex (the lowest member for merged vertices)
};

struct SplitResult {
    Graph graph;
    int z1;
    int z2;
};

struct Diamond {
    VertexSet vertices;
    Edge missing;   // the two vertices of degree two inside the K4-e
    Edge spine;     // the two vertices of degree three inside the K4-e (and in the host)

    bool operator==(const Diamond&) const = default;
};

Relabeled induced_subgraph(const Graph& g, VertexSet r);

Graph delete_vertices(const Graph& g, VertexSet s);
Graph delete_edge(const Graph& g, Edge e);

/// Merge an independent set into its lowest-numbered member, collapsing
/// parallel edges.
Relabeled identify_vertices(const Graph& g, VertexSet s);

/// Replace z by z1 (keeps index z, adjacent to `part1`) and z2 (new last
/// index, adjacent to `part2`). The parts must partition N(z) and be nonempty.
SplitResult split_vertex(const Graph& g, int z, VertexSet part1, VertexSet part2);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

Graph mycielskian(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

/// Triangles as vertex sets, in lexicographic order of their sorted vertices.
std::vector<VertexSet> triangles(const Graph& g);
bool has_triangle(const Graph& g);

/// Every K4-e on a 4-set whose two spine vertices have degree exactly 3 in g.
std::vector<Diamond> find_diamonds(const Graph& g);

/// True if g contains K4-e as a (not necessarily induced) subgraph.
bool contains_k4_minus_e(const Graph& g);

/// Distinct 4-sets spanning at least five edges, in lexicographic order.
std::vector<VertexSet> k4_minus_e_copies(const Graph& g);

/// Graph with vertices renamed by `perm` (old v becomes perm[v]).
Graph permute(const Graph& g, const std::vector<int>& perm);

} // namespace critgraph
