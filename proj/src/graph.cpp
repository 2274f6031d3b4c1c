#include "critgraph/graph.hpp"

#include <algorithm>
#include <string>

#include "critgraph/error.hpp"

namespace critgraph {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n < 0 ? 0 : n))
{
    if (n < 0 || n > kMaxVertices)
        throw Error("graph order " + std::to_string(n) + " outside [0, 64]");
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const Edge& e : edges)
        add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw Error("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

bool Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error("self-loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v))
        return false;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
    return true;
}

bool Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (!adj_[u].contains(v))
        return false;
    adj_[u].erase(v);
    adj_[v].erase(u);
    --m_;
    return true;
}

int Graph::add_vertex()
{
    if (n_ == kMaxVertices)
        throw Error("graph order would exceed 64");
    adj_.emplace_back();
    return n_++;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u] - VertexSet::range(u + 1))
            out.push_back({u, v});
    return out;
}

int Graph::min_degree() const
{
    int best = n_ == 0 ? 0 : kMaxVertices;
    for (const auto& row : adj_)
        best = std::min(best, row.size());
    return best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& row : adj_)
        best = std::max(best, row.size());
    return best;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> out;
    out.reserve(adj_.size());
    for (const auto& row : adj_)
        out.push_back(row.size());
    return out;
}

} // namespace critgraph
