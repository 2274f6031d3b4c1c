#include "critgraph/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "critgraph/error.hpp"

namespace critgraph {

namespace {

struct SearchState {
    std::array<std::uint32_t, kMaxVertices> domain{};
    std::array<std::uint8_t, kMaxVertices> color{};
    VertexSet assigned;
    std::uint32_t used = 0;
};

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k) : g_(g), k_(k), order_(static_cast<std::size_t>(g.order()))
    {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    std::optional<Coloring> run()
    {
        SearchState s;
        const std::uint32_t all = (std::uint32_t{1} << k_) - 1;
        for (int v = 0; v < g_.order(); ++v)
            s.domain[v] = all;
        if (!extend(s, 0))
            return std::nullopt;
        Coloring out{std::vector<int>(static_cast<std::size_t>(g_.order())), k_};
        for (int v = 0; v < g_.order(); ++v)
            out.colors[v] = solution_.color[v] + 1;
        return out;
    }

private:
    // Assigns c to v and follows every forced consequence.
    bool assign(SearchState& s, int v, int c) const
    {
        std::array<int, kMaxVertices> queue{};
        std::array<int, kMaxVertices> queued_color{};
        int head = 0;
        int tail = 0;
        queue[tail] = v;
        queued_color[tail++] = c;
        while (head < tail) {
            const int u = queue[head];
            const int cu = queued_color[head++];
            if (s.assigned.contains(u)) {
                if (s.color[u] != cu)
                    return false;
                continue;
            }
            if (!((s.domain[u] >> cu) & 1U))
                return false;
            s.assigned.insert(u);
            s.color[u] = static_cast<std::uint8_t>(cu);
            s.domain[u] = std::uint32_t{1} << cu;
            s.used |= std::uint32_t{1} << cu;
            for (int w : g_.neighbors(u) - s.assigned) {
                s.domain[w] &= ~(std::uint32_t{1} << cu);
                if (s.domain[w] == 0)
                    return false;
                if (std::has_single_bit(s.domain[w])) {
                    queue[tail] = w;
                    queued_color[tail++] = std::countr_zero(s.domain[w]);
                }
            }
        }
        return true;
    }

    bool extend(const SearchState& s, std::size_t next)
    {
        while (next < order_.size() && s.assigned.contains(order_[next]))
            ++next;
        if (next == order_.size()) {
            solution_ = s;
            return true;
        }
        const int v = order_[next];
        // Unused colors are interchangeable: try only the lowest one.
        std::uint32_t choices = s.domain[v] & s.used;
        const std::uint32_t fresh = s.domain[v] & ~s.used;
        if (fresh != 0)
            choices |= fresh & (~fresh + 1);
        for (std::uint32_t rest = choices; rest != 0; rest &= rest - 1) {
            SearchState child = s;
            if (assign(child, v, std::countr_zero(rest)) && extend(child, next + 1))
                return true;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> order_;
    SearchState solution_;
};

} // namespace

bool is_proper_coloring(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.colors.size()) != g.order())
        return false;
    for (int col : c.colors)
        if (col < 1 || col > c.k)
            return false;
    for (const Edge& e : g.edges())
        if (c.colors[e.u] == c.colors[e.v])
            return false;
    return true;
}

std::optional<Coloring> k_colorable(const Graph& g, int k)
{
    if (k < 1 || k > 16)
        throw Error("k_colorable: k must lie in [1, 16]");
    return ColoringSearch(g, k).run();
}

bool is_3_colorable(const Graph& g)
{
    return k_colorable(g, 3).has_value();
}

bool is_4_critical(const Graph& g)
{
    if (g.order() < 4 || g.min_degree() < 3 || is_3_colorable(g))
        return false;
    Graph h = g;
    for (const Edge& e : g.edges()) {
        h.remove_edge(e.u, e.v);
        const bool colorable = is_3_colorable(h);
        h.add_edge(e.u, e.v);
        if (!colorable)
            return false;
    }
    return true;
}

Relabeled critical_subgraph(const Graph& g)
{
    if (is_3_colorable(g))
        throw Error("critical_subgraph: graph is 3-colorable");
    Graph h = g;
    for (const Edge& e : g.edges()) {
        h.remove_edge(e.u, e.v);
        if (is_3_colorable(h))
            h.add_edge(e.u, e.v);
    }
    VertexSet keep;
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) > 0)
            keep.insert(v);
    return induced_subgraph(h, keep);
}

bool is_identifiable_pair(const Graph& g, VertexSet r, int u, int v)
{
    if (u == v)
        throw Error("is_identifiable_pair: u and v must differ");
    if (!r.contains(u) || !r.contains(v))
        throw Error("is_identifiable_pair: u and v must lie in R");
    if (!r.subset_of(g.vertices()) || r == g.vertices())
        throw Error("is_identifiable_pair: R must be a proper subset of V(G)");
    Relabeled sub = induced_subgraph(g, r);
    sub.graph.add_edge(sub.to_new[u], sub.to_new[v]);
    return !is_3_colorable(sub.graph);
}

} // namespace critgraph
