#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "critgraph/canonical.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

/// One Ore-composition: delete `replaced_edge` = xy from the edge side,
/// split `split_vertex` = z of the split side into z1 (adjacent to
/// `part_x`) and z2 (adjacent to `part_y`), identify x with z1 and y with z2.
///
/// In `result` the edge side keeps its labels; the split side's other
/// vertices follow in their original order.
struct OreRecipe {
    Graph edge_side;
    Edge replaced_edge{};
    Graph split_side;
    int split_vertex = 0;
    VertexSet part_x;
    VertexSet part_y;
    Graph result;
    int x = 0;
    int y = 0;
    std::vector<int> split_side_map; // split-side vertex -> result vertex (z -> x)
};

OreRecipe ore_compose(const Graph& edge_side, Edge replaced_edge, const Graph& split_side, int split_vertex,
                      VertexSet part_x, VertexSet part_y);

/// Calls `visit` once per (replaced edge, split vertex, ordered nonempty
/// bipartition) choice. Each replaced edge is taken in one orientation
/// only; the ordered bipartitions already cover both.
void for_each_composition(const Graph& edge_side, const Graph& split_side,
                          const std::function<void(const OreRecipe&)>& visit);

struct CatalogEntry {
    Graph graph; // canonically labeled
    CanonicalForm form;
    int t = 0;
    int p = 0;
    std::optional<int> girth;
    int diamonds = 0;
};

/// All 4-Ore graphs up to isomorphism with at most max_order() vertices.
class OreCatalog {
public:
    OreCatalog() = default;
    explicit OreCatalog(int max_order) : max_order_(max_order) {}

    int max_order() const { return max_order_; }

    /// Entries of one order, sorted by canonical form.
    const std::vector<CatalogEntry>& at(int order) const;
    std::vector<const CatalogEntry*> all() const;
    std::size_t count() const;

    bool contains(const Graph& g) const;
    bool contains(const CanonicalForm& form) const;

    /// Adds an entry built from g (metadata computed here). Returns false
    /// if an isomorphic entry is already present.
    bool insert(const Graph& g);

private:
    int max_order_ = 0;
    std::map<int, std::vector<CatalogEntry>> by_order_;
    std::set<CanonicalForm> forms_;
};

/// Bottom-up generation: every ordered pair of smaller members, every
/// composition choice, deduplicated by canonical form.
OreCatalog enumerate_4_ore(int max_n, int cap = kDefaultCap, int jobs = 1);

bool is_4_ore(const Graph& g, const OreCatalog& catalog);
bool is_4_ore(const Graph& g);

/// Process-wide memoized catalog covering at least `max_n` (<= kDefaultCap).
const OreCatalog& shared_catalog(int max_n);

} // namespace critgraph
