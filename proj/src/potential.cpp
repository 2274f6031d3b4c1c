#include "critgraph/potential.hpp"

#include <algorithm>
#include <array>

#include "critgraph/canonical.hpp"
#include "critgraph/error.hpp"
#include "critgraph/graph_ops.hpp"
#include "critgraph/named.hpp"
#include "critgraph/ore.hpp"

namespace critgraph {

namespace {

struct Packer {
    std::vector<VertexSet> sets;
    std::vector<int> chosen;
    std::vector<int> best;

    void search(std::size_t idx, VertexSet used)
    {
        if (chosen.size() > best.size())
            best = chosen;
        if (idx == sets.size())
            return;
        VertexSet reachable;
        for (std::size_t j = idx; j < sets.size(); ++j)
            if (!sets[j].intersects(used))
                reachable |= sets[j];
        if (chosen.size() + static_cast<std::size_t>(reachable.size() / 3) <= best.size())
            return;
        if (!sets[idx].intersects(used)) {
            chosen.push_back(static_cast<int>(idx));
            search(idx + 1, used | sets[idx]);
            chosen.pop_back();
        }
        search(idx + 1, used);
    }
};

bool same_graph_as(const Graph& g, const Graph& named)
{
    return g.order() == named.order() && g.size() == named.size() && is_isomorphic(g, named, kMaxVertices);
}

Classification classify_with_t(const Graph& g, int t, const OreCatalog* catalog)
{
    static const std::array<std::pair<Classification, const char*>, 5> fixed{{{Classification::K4, "K4"},
                                                                               {Classification::H7, "H7"},
                                                                               {Classification::W5, "W5"},
                                                                               {Classification::T8, "T8"},
                                                                               {Classification::T11, "T11"}}};
    if (g.order() <= 11) {
        for (const auto& [cls, name] : fixed)
            if (same_graph_as(g, construct_named(name).graph))
                return cls;
    }
    const int n = g.order();
    const bool candidate = 5 * n - 3 * g.size() == 2 && n % 3 == 1 && t == 3;
    if (!candidate)
        return Classification::Other;
    if (catalog == nullptr) {
        if (n > kDefaultCap)
            throw CapExceeded("classification needs the 4-Ore catalog at order " + std::to_string(n) +
                              ", above cap " + std::to_string(kDefaultCap));
        catalog = &shared_catalog(n);
    }
    if (n > catalog->max_order())
        throw CapExceeded("classification needs the 4-Ore catalog at order " + std::to_string(n) +
                          ", above cap " + std::to_string(catalog->max_order()));
    return catalog->contains(g) ? Classification::OreT3 : Classification::Other;
}

PotentialReport make_report(const Graph& g, const OreCatalog* catalog)
{
    PotentialReport r;
    r.n = g.order();
    r.m = g.size();
    r.t = t_number(g).size();
    r.p = 5 * r.n - 3 * r.m - r.t;
    r.classification = classify_with_t(g, r.t, catalog);
    return r;
}

} // namespace

std::string_view to_string(Classification c)
{
    switch (c) {
    case Classification::K4: return "K4";
    case Classification::H7: return "H7";
    case Classification::W5: return "W5";
    case Classification::T8: return "T8";
    case Classification::T11: return "T11";
    case Classification::OreT3: return "ORE_T3";
    case Classification::Other: return "OTHER";
    }
    return "OTHER";
}

Classification classification_from_string(std::string_view s)
{
    for (auto c : {Classification::K4, Classification::H7, Classification::W5, Classification::T8, Classification::T11,
                   Classification::OreT3, Classification::Other})
        if (to_string(c) == s)
            return c;
    throw Error("unknown classification '" + std::string(s) + "'");
}

std::vector<ShortCycle> short_cycles(const Graph& g)
{
    std::vector<ShortCycle> out;
    for (VertexSet t : triangles(g))
        out.push_back({t, t.to_vector()});
    // A 4-cycle a-b-c-d with a its least vertex and b < d is listed once.
    for (int a = 0; a < g.order(); ++a) {
        const VertexSet later = g.neighbors(a) - VertexSet::range(a + 1);
        for (int b : later)
            for (int d : later - VertexSet::range(b + 1))
                for (int c : (g.neighbors(b) & g.neighbors(d)) - VertexSet::range(a + 1))
                    out.push_back({VertexSet{a, b, c, d}, {a, b, c, d}});
    }
    std::stable_sort(out.begin(), out.end(), [](const ShortCycle& x, const ShortCycle& y) {
        const auto xv = x.vertices.to_vector();
        const auto yv = y.vertices.to_vector();
        if (xv != yv)
            return xv < yv;
        return x.order < y.order;
    });
    return out;
}

CyclePacking t_number(const Graph& g)
{
    const std::vector<ShortCycle> cycles = short_cycles(g);
    // One witness per vertex set; the list is already sorted by set.
    std::vector<const ShortCycle*> witnesses;
    for (const ShortCycle& c : cycles)
        if (witnesses.empty() || witnesses.back()->vertices != c.vertices)
            witnesses.push_back(&c);

    Packer packer;
    for (const ShortCycle* c : witnesses)
        packer.sets.push_back(c->vertices);
    VertexSet used;
    for (std::size_t i = 0; i < packer.sets.size(); ++i) {
        if (!packer.sets[i].intersects(used)) {
            packer.best.push_back(static_cast<int>(i));
            used |= packer.sets[i];
        }
    }
    packer.search(0, VertexSet{});

    CyclePacking out;
    for (int i : packer.best)
        out.cycles.push_back(*witnesses[i]);
    return out;
}

PotentialReport potential(const Graph& g)
{
    return make_report(g, nullptr);
}

PotentialReport potential(const Graph& g, const OreCatalog& catalog)
{
    return make_report(g, &catalog);
}

PotentialReport set_potential(const Graph& g, VertexSet r)
{
    return potential(induced_subgraph(g, r).graph);
}

Classification classify_exceptional(const Graph& g, const OreCatalog& catalog)
{
    return classify_with_t(g, t_number(g).size(), &catalog);
}

Classification classify_exceptional(const Graph& g)
{
    return classify_with_t(g, t_number(g).size(), nullptr);
}

int potential_value(const Graph& g)
{
    return 5 * g.order() - 3 * g.size() - t_number(g).size();
}

} // namespace critgraph
