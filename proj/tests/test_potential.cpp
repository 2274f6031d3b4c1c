#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critgraph/enumerate.hpp"
#include "critgraph/error.hpp"
#include "critgraph/graph_ops.hpp"
#include "critgraph/named.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/potential.hpp"
#include "oracles.hpp"

using namespace critgraph;

namespace {

Graph named(const char* name)
{
    return construct_named(name).graph;
}

bool is_cycle_in(const Graph& g, const ShortCycle& c)
{
    const auto& o = c.order;
    if (o.size() != 3 && o.size() != 4)
        return false;
    if (VertexSet::from(o) != c.vertices || c.vertices.size() != static_cast<int>(o.size()))
        return false;
    for (std::size_t i = 0; i < o.size(); ++i)
        if (!g.adjacent(o[i], o[(i + 1) % o.size()]))
            return false;
    return true;
}

void check_packing(const Graph& g)
{
    const CyclePacking p = t_number(g);
    VertexSet used;
    for (const ShortCycle& c : p.cycles) {
        CHECK(is_cycle_in(g, c));
        CHECK_FALSE(c.vertices.intersects(used));
        used |= c.vertices;
    }
    CHECK(p.size() == oracle::dp_t_number(g));
}

} // namespace

TEST_CASE("short cycle listing")
{
    CHECK(short_cycles(named("K4")).size() == 7);
    CHECK(short_cycles(cycle_graph(5)).empty());

    for (const char* name : {"H7", "T8", "T11", "W5", "K4"}) {
        const Graph g = named(name);
        const auto cycles = short_cycles(g);
        CHECK(static_cast<int>(cycles.size()) == oracle::brute_short_cycle_count(g));
        for (const ShortCycle& c : cycles)
            CHECK(is_cycle_in(g, c));
        for (std::size_t i = 1; i < cycles.size(); ++i)
            CHECK(cycles[i - 1].vertices.to_vector() <= cycles[i].vertices.to_vector());
    }
}

TEST_CASE("T of the named graphs")
{
    CHECK(t_number(named("K4")).size() == 1);
    CHECK(t_number(named("H7")).size() == 2);
    CHECK(t_number(named("W5")).size() == 1);
    CHECK(t_number(named("T8")).size() == 2);
    CHECK(t_number(named("T11")).size() == 2);
    CHECK(t_number(named("PETERSEN")).size() == 0);
    for (const char* name : {"K4", "H7", "W5", "T8", "T11"})
        check_packing(named(name));
}

TEST_CASE("potential values")
{
    CHECK(potential(named("K4")).p == 1);
    CHECK(potential(named("H7")).p == 0);
    CHECK(potential(named("W5")).p == -1);
    CHECK(potential(named("T8")).p == -1);
    CHECK(potential(named("T11")).p == -1);
    CHECK(potential(cycle_graph(5)).p == 10);

    const PotentialReport r = potential(named("T11"));
    CHECK(r.n == 11);
    CHECK(r.m == 18);
    CHECK(r.t == 2);
    CHECK(r.p == 5 * r.n - 3 * r.m - r.t);
    CHECK(potential_value(named("T11")) == -1);

    const Graph h7 = named("H7");
    const VertexSet r4{0, 2, 3, 4};
    CHECK(set_potential(h7, r4).p == potential(induced_subgraph(h7, r4).graph).p);
}

TEST_CASE("classification")
{
    CHECK(classify_exceptional(named("K4")) == Classification::K4);
    CHECK(classify_exceptional(named("H7")) == Classification::H7);
    CHECK(classify_exceptional(named("W5")) == Classification::W5);
    CHECK(classify_exceptional(named("T8")) == Classification::T8);
    CHECK(classify_exceptional(named("T11")) == Classification::T11);
    CHECK(classify_exceptional(named("PETERSEN")) == Classification::Other);

    std::mt19937_64 rng(43);
    CHECK(classify_exceptional(oracle::relabel(named("T8"), oracle::random_permutation(8, rng))) ==
          Classification::T8);

    CHECK(to_string(Classification::OreT3) == "ORE_T3");
    CHECK(classification_from_string("OTHER") == Classification::Other);
    CHECK_THROWS_AS(classification_from_string("K5"), Error);
}

TEST_CASE("compositions of two copies of H7 have T >= 3 and are ORE_T3 exactly when T = 3")
{
    const Graph h7 = named("H7");
    int seen = 0;
    int exact = 0;
    for_each_composition(h7, h7, [&](const OreRecipe& r) {
        if (seen++ % 5 != 0)
            return;
        const int t = t_number(r.result).size();
        CHECK(r.result.order() == 13);
        CHECK(t >= 3);
        exact += t == 3 ? 1 : 0;
        CHECK((classify_exceptional(r.result) == Classification::OreT3) == (t == 3));
    });
    CHECK(exact > 0);
}

namespace {

Graph h7_h7_with_t3()
{
    const Graph h7 = named("H7");
    std::optional<Graph> found;
    for_each_composition(h7, h7, [&](const OreRecipe& r) {
        if (!found && t_number(r.result).size() == 3)
            found = r.result;
    });
    REQUIRE(found.has_value());
    return *found;
}

} // namespace

TEST_CASE("classification above the catalog order is an error")
{
    const OreCatalog small = enumerate_4_ore(10);
    const Graph g = h7_h7_with_t3();
    CHECK_THROWS_AS(classify_exceptional(g, small), CapExceeded);
    CHECK(classify_exceptional(g, enumerate_4_ore(13)) == Classification::OreT3);
    // No 4-Ore candidate: no lookup needed, whatever the order.
    CHECK(classify_exceptional(mycielskian(mycielskian(cycle_graph(5))), small) == Classification::Other);
}

TEST_CASE("branch and bound T matches the oracles on every graph up to seven vertices")
{
    int literal = 0;
    for (const Graph& g : enumerate_graphs(7)) {
        const int t = t_number(g).size();
        CHECK(t == oracle::dp_t_number(g));
        if (oracle::brute_short_cycle_sets(g).size() <= 16) {
            CHECK(t == oracle::subset_t_number(g));
            ++literal;
        }
    }
    CHECK(literal > 500);
}

TEST_CASE("branch and bound T matches the oracle on random graphs up to twelve vertices")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 8 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_graph(n, 0.15 + 0.5 * (rng() % 100) / 100.0, rng);
        check_packing(g);
    }
}

TEST_CASE("T invariants")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(10, 0.3, rng);
        const int t = t_number(g).size();
        CHECK(t >= 0);
        CHECK(t <= g.order() / 3);
        for (int v = 0; v < g.order(); ++v) {
            const int tv = t_number(delete_vertices(g, VertexSet{v})).size();
            CHECK((tv == t || tv == t - 1));
        }
        for (const Edge& e : g.edges()) {
            const int te = t_number(delete_edge(g, e)).size();
            CHECK((te == t || te == t - 1));
        }
        const auto gi = girth(g);
        if (!gi || *gi >= 5) {
            CHECK(t == 0);
            CHECK(potential_value(g) == 5 * g.order() - 3 * g.size());
        }
    }
}

TEST_CASE("the packing witness is the lexicographically least maximum packing")
{
    std::mt19937_64 rng(59);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 60; ++trial) {
        const Graph g = oracle::random_graph(8, 0.35, rng);
        // Distinct cycle vertex sets in list order.
        std::vector<VertexSet> sets;
        for (const ShortCycle& c : short_cycles(g))
            if (sets.empty() || sets.back() != c.vertices)
                sets.push_back(c.vertices);
        if (sets.size() > 18)
            continue;
        ++checked;
        const int t = t_number(g).size();
        std::vector<int> best;
        for (std::uint64_t pick = 0; pick < (1ull << sets.size()); ++pick) {
            VertexSet used;
            std::vector<int> chosen;
            bool ok = true;
            for (std::size_t i = 0; i < sets.size() && ok; ++i)
                if (pick >> i & 1) {
                    ok = !sets[i].intersects(used);
                    used |= sets[i];
                    chosen.push_back(static_cast<int>(i));
                }
            if (ok && static_cast<int>(chosen.size()) == t && (best.empty() || chosen < best))
                best = chosen;
        }
        std::vector<int> got;
        for (const ShortCycle& c : t_number(g).cycles)
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (sets[i] == c.vertices)
                    got.push_back(static_cast<int>(i));
        CHECK(got == best);
    }
    CHECK(checked >= 30);
}
