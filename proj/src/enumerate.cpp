#include "critgraph/enumerate.hpp"

#include <algorithm>
#include <set>

#include "critgraph/canonical.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/error.hpp"
#include "critgraph/graph_ops.hpp"
#include "critgraph/parallel.hpp"

namespace critgraph {

namespace {

struct Children {
    std::vector<CanonicalForm> grow;   // kept for the next level
    std::vector<CanonicalForm> report; // candidates for output at this order
};

bool girth_ok(const Graph& g, int min_girth)
{
    if (min_girth <= 3)
        return true;
    const auto gi = girth(g);
    return !gi || *gi >= min_girth;
}

Children expand(const Graph& parent, const EnumerationFilter& filter, bool last)
{
    Children out;
    const int k = parent.order();
    const int min_degree = filter.four_critical ? std::max(3, filter.min_degree) : filter.min_degree;

    // At the last order nothing grows further, so min-degree can prune:
    // low-degree parent vertices must all gain the new neighbor.
    VertexSet forced;
    if (last && min_degree > 0) {
        for (int v = 0; v < k; ++v) {
            if (parent.degree(v) + 1 < min_degree)
                return out;
            if (parent.degree(v) < min_degree)
                forced.insert(v);
        }
    }

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        VertexSet s;
        for (int v = 0; v < k; ++v)
            if (mask >> v & 1)
                s.insert(v);
        if (!forced.subset_of(s))
            continue;
        if (last && s.size() < min_degree)
            continue;
        Graph child = parent;
        child.add_vertex();
        for (int v : s)
            child.add_edge(v, k);
        if (!girth_ok(child, filter.min_girth))
            continue;

        if (filter.four_critical) {
            if (is_3_colorable(child)) {
                if (!last)
                    out.grow.push_back(canonical_form(child));
            } else if (child.min_degree() >= 3) {
                out.report.push_back(canonical_form(child));
            }
            continue;
        }

        if (last && filter.connected && !is_connected(child))
            continue;
        out.grow.push_back(canonical_form(child));
    }
    return out;
}

bool reportable(const Graph& g, const EnumerationFilter& filter)
{
    if (filter.connected && !is_connected(g))
        return false;
    if (g.order() > 0 && g.min_degree() < filter.min_degree)
        return false;
    if (!girth_ok(g, filter.min_girth))
        return false;
    if (filter.four_critical && !is_4_critical(g))
        return false;
    return true;
}

} // namespace

std::vector<Graph> enumerate_graphs(int max_n, const EnumerationFilter& filter, int jobs)
{
    if (max_n > kEnumerationMaxOrder)
        throw Error("enumerate_graphs: max_n " + std::to_string(max_n) + " above " +
                    std::to_string(kEnumerationMaxOrder));
    std::vector<Graph> out;
    if (max_n < 1)
        return out;

    std::vector<Graph> level{Graph(1)};
    if (!filter.four_critical && reportable(level[0], filter))
        out.push_back(level[0]);

    for (int n = 2; n <= max_n; ++n) {
        const bool last = n == max_n;
        const auto children = parallel_map<Children>(
            level.size(), jobs, [&](std::size_t i) { return expand(level[i], filter, last); });

        std::set<CanonicalForm> grow;
        std::set<CanonicalForm> report;
        for (const auto& c : children) {
            grow.insert(c.grow.begin(), c.grow.end());
            report.insert(c.report.begin(), c.report.end());
        }

        std::vector<Graph> next;
        next.reserve(grow.size());
        for (const auto& form : grow)
            next.push_back(graph_from_canonical(form));

        std::vector<Graph> candidates;
        if (filter.four_critical) {
            for (const auto& form : report)
                candidates.push_back(graph_from_canonical(form));
        } else {
            candidates = next;
        }
        const auto keep = parallel_map<char>(candidates.size(), jobs,
                                             [&](std::size_t i) { return reportable(candidates[i], filter) ? 1 : 0; });
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (keep[i])
                out.push_back(candidates[i]);

        level = std::move(next);
    }
    return out;
}

} // namespace critgraph
