#include "critgraph/ore.hpp"

#include <memory>
#include <mutex>

#include "critgraph/error.hpp"
#include "critgraph/graph_ops.hpp"
#include "critgraph/named.hpp"
#include "critgraph/parallel.hpp"
#include "critgraph/potential.hpp"

namespace critgraph {

OreRecipe ore_compose(const Graph& edge_side, Edge replaced_edge, const Graph& split_side, int split_vertex,
                      VertexSet part_x, VertexSet part_y)
{
    const auto [x, y] = replaced_edge;
    if (x < 0 || y < 0 || x >= edge_side.order() || y >= edge_side.order() || !edge_side.adjacent(x, y))
        throw Error("ore_compose: replaced edge is not an edge of the edge side");
    const int z = split_vertex;
    if (z < 0 || z >= split_side.order())
        throw Error("ore_compose: split vertex out of range");
    if (part_x.empty() || part_y.empty())
        throw Error("ore_compose: empty partition part");
    if (part_x.intersects(part_y) || (part_x | part_y) != split_side.neighbors(z))
        throw Error("ore_compose: parts do not partition the split vertex's neighborhood");

    const int n1 = edge_side.order();
    OreRecipe out{edge_side, replaced_edge, split_side, z, part_x, part_y,
                  Graph(n1 + split_side.order() - 1), x, y, std::vector<int>(static_cast<std::size_t>(split_side.order()))};
    int next = n1;
    for (int w = 0; w < split_side.order(); ++w)
        out.split_side_map[w] = w == z ? x : next++;

    for (const Edge& e : edge_side.edges())
        if (!(e.u == std::min(x, y) && e.v == std::max(x, y)))
            out.result.add_edge(e.u, e.v);
    for (const Edge& e : split_side.edges())
        if (e.u != z && e.v != z)
            out.result.add_edge(out.split_side_map[e.u], out.split_side_map[e.v]);
    for (int w : part_x)
        out.result.add_edge(x, out.split_side_map[w]);
    for (int w : part_y)
        out.result.add_edge(y, out.split_side_map[w]);
    return out;
}

void for_each_composition(const Graph& edge_side, const Graph& split_side,
                          const std::function<void(const OreRecipe&)>& visit)
{
    for (const Edge& e : edge_side.edges()) {
        for (int z = 0; z < split_side.order(); ++z) {
            const std::vector<int> nbrs = split_side.neighbors(z).to_vector();
            const int d = static_cast<int>(nbrs.size());
            if (d < 2)
                continue;
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << d); ++mask) {
                VertexSet part_x;
                for (int i = 0; i < d; ++i)
                    if ((mask >> i) & 1U)
                        part_x.insert(nbrs[i]);
                visit(ore_compose(edge_side, e, split_side, z, part_x, split_side.neighbors(z) - part_x));
            }
        }
    }
}

const std::vector<CatalogEntry>& OreCatalog::at(int order) const
{
    static const std::vector<CatalogEntry> none;
    auto it = by_order_.find(order);
    return it == by_order_.end() ? none : it->second;
}

std::vector<const CatalogEntry*> OreCatalog::all() const
{
    std::vector<const CatalogEntry*> out;
    for (const auto& [order, entries] : by_order_)
        for (const auto& e : entries)
            out.push_back(&e);
    return out;
}

std::size_t OreCatalog::count() const
{
    return forms_.size();
}

bool OreCatalog::contains(const CanonicalForm& form) const
{
    return forms_.contains(form);
}

bool OreCatalog::contains(const Graph& g) const
{
    if (g.order() > max_order_)
        throw CapExceeded("4-Ore lookup: order " + std::to_string(g.order()) + " above catalog order " +
                          std::to_string(max_order_));
    if (g.order() % 3 != 1 || 5 * g.order() - 3 * g.size() != 2)
        return false;
    return contains(canonical_form(g, std::max(max_order_, kDefaultCap)));
}

bool OreCatalog::insert(const Graph& g)
{
    if (g.order() > max_order_)
        throw CapExceeded("catalog insert above order " + std::to_string(max_order_));
    const CanonicalLabeling lab = canonical_labeling(g, std::max(max_order_, kDefaultCap));
    if (forms_.contains(lab.form))
        return false;
    CatalogEntry entry;
    entry.graph = permute(g, lab.position);
    entry.form = lab.form;
    entry.t = t_number(entry.graph).size();
    entry.p = 5 * g.order() - 3 * g.size() - entry.t;
    entry.girth = girth(entry.graph);
    entry.diamonds = static_cast<int>(find_diamonds(entry.graph).size());

    auto& bucket = by_order_[g.order()];
    auto pos = std::lower_bound(bucket.begin(), bucket.end(), entry.form,
                                [](const CatalogEntry& e, const CanonicalForm& f) { return e.form < f; });
    bucket.insert(pos, std::move(entry));
    forms_.insert(lab.form);
    return true;
}

OreCatalog enumerate_4_ore(int max_n, int cap, int jobs)
{
    if (max_n > cap)
        throw CapExceeded("enumerate_4_ore: max_n " + std::to_string(max_n) + " exceeds cap " + std::to_string(cap));
    OreCatalog catalog(max_n);
    if (max_n < 4)
        return catalog;
    catalog.insert(complete_graph(4));

    for (int order = 7; order <= max_n; order += 3) {
        struct Job {
            const Graph* edge_side;
            const Graph* split_side;
        };
        std::vector<Job> work;
        for (int n1 = 4; n1 <= order - 3; n1 += 3) {
            const int n2 = order + 1 - n1;
            for (const auto& a : catalog.at(n1))
                for (const auto& b : catalog.at(n2))
                    work.push_back({&a.graph, &b.graph});
        }
        const auto found = parallel_map<std::set<CanonicalForm>>(work.size(), jobs, [&](std::size_t i) {
            std::set<CanonicalForm> forms;
            for_each_composition(*work[i].edge_side, *work[i].split_side,
                                 [&](const OreRecipe& r) { forms.insert(canonical_form(r.result, cap)); });
            return forms;
        });
        std::set<CanonicalForm> merged;
        for (const auto& forms : found)
            merged.insert(forms.begin(), forms.end());
        for (const auto& form : merged)
            catalog.insert(graph_from_canonical(form));
    }
    return catalog;
}

bool is_4_ore(const Graph& g, const OreCatalog& catalog)
{
    return catalog.contains(g);
}

bool is_4_ore(const Graph& g)
{
    if (g.order() > kDefaultCap)
        throw CapExceeded("is_4_ore: order " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(kDefaultCap));
    return shared_catalog(g.order()).contains(g);
}

const OreCatalog& shared_catalog(int max_n)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<OreCatalog>> built;
    std::lock_guard lock(mutex);
    auto& slot = built[max_n];
    if (!slot)
        slot = std::make_unique<OreCatalog>(enumerate_4_ore(max_n));
    return *slot;
}

} // namespace critgraph
