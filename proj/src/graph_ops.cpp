#include "critgraph/graph_ops.hpp"

#include <algorithm>
#include <string>

#include "critgraph/error.hpp"

namespace critgraph {

namespace {

void require_within(const Graph& g, VertexSet s, const char* what)
{
    if (!s.subset_of(g.vertices()))
        throw Error(std::string(what) + ": vertex set not contained in V(G)");
}

Relabeled relabel_survivors(const Graph& g, VertexSet survivors)
{
    Relabeled out{Graph(survivors.size()), std::vector<int>(static_cast<std::size_t>(g.order()), -1), {}};
    for (int v : survivors) {
        out.to_new[v] = static_cast<int>(out.to_old.size());
        out.to_old.push_back(v);
    }
    return out;
}

} // namespace

Relabeled induced_subgraph(const Graph& g, VertexSet r)
{
    require_within(g, r, "induced_subgraph");
    Relabeled out = relabel_survivors(g, r);
    for (int u : r)
        for (int v : g.neighbors(u) & r)
            if (u < v)
                out.graph.add_edge(out.to_new[u], out.to_new[v]);
    return out;
}

Graph delete_vertices(const Graph& g, VertexSet s)
{
    return induced_subgraph(g, g.vertices() - s).graph;
}

Graph delete_edge(const Graph& g, Edge e)
{
    Graph h = g;
    if (!h.remove_edge(e.u, e.v))
        throw Error("delete_edge: edge not present");
    return h;
}

Relabeled identify_vertices(const Graph& g, VertexSet s)
{
    require_within(g, s, "identify_vertices");
    if (s.empty())
        throw Error("identify_vertices: empty set");
    for (int v : s)
        if (g.neighbors(v).intersects(s))
            throw Error("identify_vertices: set is not independent");

    const int rep = s.front();
    VertexSet survivors = g.vertices() - s;
    survivors.insert(rep);
    Relabeled out = relabel_survivors(g, survivors);
    for (int v : s)
        out.to_new[v] = out.to_new[rep];
    for (const Edge& e : g.edges())
        out.graph.add_edge(out.to_new[e.u], out.to_new[e.v]);
    return out;
}

SplitResult split_vertex(const Graph& g, int z, VertexSet part1, VertexSet part2)
{
    if (z < 0 || z >= g.order())
        throw Error("split_vertex: vertex out of range");
    if (part1.empty() || part2.empty())
        throw Error("split_vertex: empty part");
    if (part1.intersects(part2) || (part1 | part2) != g.neighbors(z))
        throw Error("split_vertex: parts do not partition N(z)");

    SplitResult out{g, z, 0};
    out.z2 = out.graph.add_vertex();
    for (int w : part2) {
        out.graph.remove_edge(z, w);
        out.graph.add_edge(out.z2, w);
    }
    return out;
}

std::optional<int> girth(const Graph& g)
{
    const int n = g.order();
    int best = n + 1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[root] = 0;
        parent[root] = -1;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            if (2 * dist[u] + 1 >= best)
                break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best > n)
        return std::nullopt;
    return best;
}

Graph mycielskian(const Graph& g)
{
    const int n = g.order();
    if (n < 1)
        throw Error("mycielskian: empty graph");
    Graph out(2 * n + 1);
    for (const Edge& e : g.edges()) {
        out.add_edge(e.u, e.v);
        out.add_edge(e.u, n + e.v);
        out.add_edge(n + e.u, e.v);
    }
    for (int i = 0; i < n; ++i)
        out.add_edge(n + i, 2 * n);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph out(a.order() + b.order());
    for (const Edge& e : a.edges())
        out.add_edge(e.u, e.v);
    for (const Edge& e : b.edges())
        out.add_edge(a.order() + e.u, a.order() + e.v);
    return out;
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp{unseen.front()};
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= g.neighbors(v);
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return components(g).size() <= 1;
}

std::vector<VertexSet> triangles(const Graph& g)
{
    std::vector<VertexSet> out;
    for (int a = 0; a < g.order(); ++a) {
        const VertexSet later = g.neighbors(a) - VertexSet::range(a + 1);
        for (int b : later)
            for (int c : (g.neighbors(b) & later) - VertexSet::range(b + 1))
                out.push_back(VertexSet{a, b, c});
    }
    return out;
}

bool has_triangle(const Graph& g)
{
    for (const Edge& e : g.edges())
        if (g.neighbors(e.u).intersects(g.neighbors(e.v)))
            return true;
    return false;
}

std::vector<Diamond> find_diamonds(const Graph& g)
{
    std::vector<Diamond> out;
    for (const Edge& spine : g.edges()) {
        if (g.degree(spine.u) != 3 || g.degree(spine.v) != 3)
            continue;
        const VertexSet common = g.neighbors(spine.u) & g.neighbors(spine.v);
        for (int a : common)
            for (int b : common - VertexSet::range(a + 1))
                if (!g.adjacent(a, b))
                    out.push_back({VertexSet{a, b, spine.u, spine.v}, {a, b}, spine});
    }
    std::sort(out.begin(), out.end(), [](const Diamond& x, const Diamond& y) {
        return x.vertices.to_vector() < y.vertices.to_vector();
    });
    return out;
}

bool contains_k4_minus_e(const Graph& g)
{
    for (const Edge& e : g.edges())
        if ((g.neighbors(e.u) & g.neighbors(e.v)).size() >= 2)
            return true;
    return false;
}

std::vector<VertexSet> k4_minus_e_copies(const Graph& g)
{
    std::vector<VertexSet> out;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const VertexSet s{a, b, c, d};
                    int edges = 0;
                    for (int v : s)
                        edges += (g.neighbors(v) & s).size();
                    if (edges / 2 >= 5)
                        out.push_back(s);
                }
    return out;
}

Graph permute(const Graph& g, const std::vector<int>& perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw Error("permute: permutation size mismatch");
    Graph out(g.order());
    for (const Edge& e : g.edges())
        out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

} // namespace critgraph
