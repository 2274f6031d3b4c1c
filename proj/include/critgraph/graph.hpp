#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "critgraph/vertex_set.hpp"

namespace critgraph {

struct Edge {
    int u;
    int v;

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with n <= 64.
///
/// Each adjacency row is a VertexSet, so edge membership is a single bit test
/// and neighborhoods intersect with one AND.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<Edge> edges);
    Graph(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int size() const { return m_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }

    /// Returns false if the edge was already present. Loops and
    /// out-of-range endpoints throw.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);
    int add_vertex();

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    int min_degree() const;
    int max_degree() const;
    std::vector<int> degrees() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

} // namespace critgraph
