#include "critgraph/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>

#include "critgraph/coloring.hpp"
#include "critgraph/discharging.hpp"
#include "critgraph/error.hpp"
#include "critgraph/extension.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/graph_ops.hpp"
#include "critgraph/named.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/parallel.hpp"
#include "critgraph/potential.hpp"

namespace critgraph {

namespace {

struct Tally {
    std::uint64_t checks = 0;
    std::vector<SuiteFailure> failures;

    void check(bool ok, const std::string& g6, std::string claim, std::string expected, std::string got)
    {
        ++checks;
        if (!ok)
            failures.push_back({g6, std::move(claim), std::move(expected), std::move(got)});
    }
};

struct Context {
    const Corpus& corpus;
    const HarnessConfig& config;
    SuiteReport& report;

    template <typename Item>
    void run(const std::vector<Item>& items, const std::function<Tally(const Item&)>& body)
    {
        const auto tallies =
            parallel_map<Tally>(items.size(), config.jobs, [&](std::size_t i) { return body(items[i]); });
        for (const auto& t : tallies) {
            report.checks += t.checks;
            report.failures.insert(report.failures.end(), t.failures.begin(), t.failures.end());
        }
    }

    std::vector<const CorpusEntry*> select(const std::function<bool(const CorpusEntry&)>& keep) const
    {
        std::vector<const CorpusEntry*> out;
        for (const auto& e : corpus.entries())
            if (keep(e))
                out.push_back(&e);
        return out;
    }

    void note(std::string text) { report.notes.push_back(std::move(text)); }
};

std::string str(int v)
{
    return std::to_string(v);
}

std::string vertex_list(VertexSet s)
{
    std::string out;
    for (int v : s)
        out += (out.empty() ? "" : ",") + std::to_string(v);
    return "{" + out + "}";
}

// 4-Ore catalog regenerated up to the largest order any of `entries` needs.
OreCatalog lookup_catalog(const std::vector<const CorpusEntry*>& entries, const HarnessConfig& config)
{
    int order = 0;
    for (const CorpusEntry* e : entries)
        if (e->n % 3 == 1 && 5 * e->n - 3 * e->m == 2)
            order = std::max(order, e->n);
    if (order > config.cap)
        throw CapExceeded("suite needs the 4-Ore catalog at order " + str(order) + ", above cap " + str(config.cap));
    return order >= 4 ? enumerate_4_ore(order, config.cap, config.jobs) : OreCatalog(0);
}

void check_critical(Tally& t, const CorpusEntry& e, const Graph& g)
{
    const bool critical = is_4_critical(g);
    t.check(critical, e.graph6, "4-critical", "1", critical ? "1" : "0");
}

void ky_bound(Context& ctx)
{
    const auto items = ctx.select([](const CorpusEntry& e) { return e.critical; });
    ctx.note("entries flagged 4-critical: " + std::to_string(items.size()));
    ctx.run<const CorpusEntry*>(items, [](const CorpusEntry* const& e) {
        Tally t;
        const Graph g = e->graph();
        check_critical(t, *e, g);
        t.check(3 * g.size() >= 5 * g.order() - 2, e->graph6, "3m>=5n-2", ">=" + str(5 * g.order() - 2),
                str(3 * g.size()));
        return t;
    });
}

void girth5_bound(Context& ctx)
{
    ctx.note("girth-5 4-critical graphs are beyond enumeration scale; "
             "this suite covers ingested and constructed entries only");
    const auto items = ctx.select([](const CorpusEntry& e) {
        return e.critical && e.girth && *e.girth >= 5 && e.provenance != Provenance::Enumerated;
    });
    ctx.note("applicable entries: " + std::to_string(items.size()));
    ctx.run<const CorpusEntry*>(items, [](const CorpusEntry* const& e) {
        Tally t;
        const Graph g = e->graph();
        check_critical(t, *e, g);
        const auto gi = girth(g);
        t.check(gi && *gi >= 5, e->graph6, "girth>=5", ">=5", gi ? str(*gi) : "inf");
        t.check(3 * g.size() >= 5 * g.order() + 2, e->graph6, "3m>=5n+2", ">=" + str(5 * g.order() + 2),
                str(3 * g.size()));
        return t;
    });
}

int expected_potential(Classification c)
{
    switch (c) {
    case Classification::K4: return 1;
    case Classification::H7: return 0;
    case Classification::W5:
    case Classification::T8:
    case Classification::T11:
    case Classification::OreT3: return -1;
    case Classification::Other: break;
    }
    return -2;
}

void theorem_main(Context& ctx)
{
    const auto items = ctx.select([](const CorpusEntry& e) { return e.critical; });
    ctx.note("entries flagged 4-critical: " + std::to_string(items.size()));
    const OreCatalog catalog = lookup_catalog(items, ctx.config);
    ctx.run<const CorpusEntry*>(items, [&](const CorpusEntry* const& e) {
        Tally t;
        const Graph g = e->graph();
        check_critical(t, *e, g);
        const PotentialReport r = potential(g, catalog);
        const std::string cls(to_string(r.classification));
        if (r.classification == Classification::Other)
            t.check(r.p <= -2, e->graph6, "potential:OTHER", "<=-2", str(r.p));
        else
            t.check(r.p == expected_potential(r.classification), e->graph6, "potential:" + cls,
                    str(expected_potential(r.classification)), str(r.p));
        return t;
    });
}

void ore_identity(Context& ctx)
{
    const auto items = ctx.select([](const CorpusEntry& e) { return e.ore; });
    ctx.note("entries flagged 4-Ore: " + std::to_string(items.size()));
    const OreCatalog catalog = lookup_catalog(items, ctx.config);
    ctx.run<const CorpusEntry*>(items, [&](const CorpusEntry* const& e) {
        Tally t;
        const Graph g = e->graph();
        check_critical(t, *e, g);
        const int n = g.order();
        const int m = g.size();
        const int tn = t_number(g).size();
        t.check(catalog.contains(g), e->graph6, "in-4-ore-catalog", "1", "0");
        t.check(5 * n - 3 * m == 2, e->graph6, "5n-3m=2", "2", str(5 * n - 3 * m));
        t.check(n % 3 == 1, e->graph6, "n=1mod3", "1", str(n % 3));
        t.check(potential_value(g) == 2 - tn, e->graph6, "p=2-T", str(2 - tn), str(potential_value(g)));
        return t;
    });
}

std::vector<const CorpusEntry*> ore_entries(Context& ctx)
{
    auto items = ctx.select([](const CorpusEntry& e) { return e.ore; });
    int top = 0;
    for (const CorpusEntry* e : items)
        top = std::max(top, e->n);
    ctx.note("4-Ore entries: " + std::to_string(items.size()) + " (orders up to " + std::to_string(top) + ")");
    return items;
}

void ore_triangle_avoid_vertex(Context& ctx)
{
    ctx.run<const CorpusEntry*>(ore_entries(ctx), [](const CorpusEntry* const& e) {
        Tally t;
        const Graph g = e->graph();
        for (int v = 0; v < g.order(); ++v)
            t.check(has_triangle(delete_vertices(g, VertexSet{v})), e->graph6, "triangle-in-H-v:" + str(v),
                    "triangle", "none");
        return t;
    });
}

void ore_second_triangle(Context& ctx)
{
    auto items = ore_entries(ctx);
    std::erase_if(items, [](const CorpusEntry* e) { return e->n == 4; });
    ctx.run<const CorpusEntry*>(items, [](const CorpusEntry* const& e) {
        Tally t;
        const Graph g = e->graph();
        for (VertexSet tri : triangles(g))
            t.check(has_triangle(delete_vertices(g, tri)), e->graph6, "triangle-in-H-T:" + vertex_list(tri),
                    "triangle", "none");
        return t;
    });
}

void ore_composition_t(Context& ctx)
{
    const auto members = ore_entries(ctx);
    int top = 0;
    for (const CorpusEntry* e : members)
        top = std::max(top, e->n);
    std::vector<std::pair<const CorpusEntry*, const CorpusEntry*>> pairs;
    for (const CorpusEntry* a : members)
        for (const CorpusEntry* b : members)
            if (a->n + b->n - 1 <= top)
                pairs.emplace_back(a, b);
    ctx.note("ordered pairs composed: " + std::to_string(pairs.size()));

    using Pair = std::pair<const CorpusEntry*, const CorpusEntry*>;
    ctx.run<Pair>(pairs, [](const Pair& pr) {
        Tally t;
        const Graph g1 = pr.first->graph();
        const Graph g2 = pr.second->graph();
        const int t1 = t_number(g1).size();
        const int t2 = t_number(g2).size();
        const auto small = [](const Graph& h) {
            return is_isomorphic(h, construct_named("K4").graph) || is_isomorphic(h, construct_named("H7").graph);
        };
        const int bound = t1 + t2 - (small(g1) || small(g2) ? 1 : 2);
        for_each_composition(g1, g2, [&](const OreRecipe& r) {
            const int tr = t_number(r.result).size();
            t.check(tr >= bound, graph6_encode(r.result),
                    "T-composition:" + pr.first->graph6 + "+" + pr.second->graph6, ">=" + str(bound), str(tr));
        });
        return t;
    });
}

void ore_t_small(Context& ctx)
{
    const Graph k4 = construct_named("K4").graph;
    const Graph h7 = construct_named("H7").graph;
    ctx.run<const CorpusEntry*>(ore_entries(ctx), [&](const CorpusEntry* const& e) {
        Tally t;
        const Graph g = e->graph();
        const int tn = t_number(g).size();
        const bool is_k4 = is_isomorphic(g, k4, std::max(ctx.config.cap, g.order()));
        const bool is_h7 = is_isomorphic(g, h7, std::max(ctx.config.cap, g.order()));
        t.check((tn == 1) == is_k4, e->graph6, "T=1-iff-K4", is_k4 ? "T=1" : "T!=1", "T=" + str(tn));
        t.check((tn == 2) == is_h7, e->graph6, "T=2-iff-H7", is_h7 ? "T=2" : "T!=2", "T=" + str(tn));
        return t;
    });
}

void edge_deletion_t(Context& ctx)
{
    const auto items = ctx.select([](const CorpusEntry& e) {
        return e.classification == Classification::T8 || e.classification == Classification::T11 ||
               e.classification == Classification::OreT3 || (e.ore && e.t == 3);
    });
    ctx.note("entries (T8, T11, 4-Ore with T=3): " + std::to_string(items.size()));
    ctx.run<const CorpusEntry*>(items, [](const CorpusEntry* const& e) {
        Tally t;
        const Graph g = e->graph();
        const int tn = t_number(g).size();
        for (const Edge& f : g.edges()) {
            const Graph h = delete_edge(g, f);
            const int th = t_number(h).size();
            t.check(th == tn || contains_k4_minus_e(h), e->graph6,
                    "edge-deletion:" + str(f.u) + "-" + str(f.v), "T=" + str(tn) + " or K4-e",
                    "T=" + str(th) + ", no K4-e");
        }
        return t;
    });
}

void ore_t3_split(Context& ctx)
{
    auto items = ore_entries(ctx);
    std::erase_if(items, [](const CorpusEntry* e) { return e->t != 3; });
    ctx.note("4-Ore entries with T=3: " + std::to_string(items.size()));
    ctx.run<const CorpusEntry*>(items, [](const CorpusEntry* const& e) {
        Tally t;
        const Graph g = e->graph();
        for (int v = 0; v < g.order(); ++v) {
            const std::vector<int> nb = g.neighbors(v).to_vector();
            const int d = static_cast<int>(nb.size());
            // Unordered splits: the first neighbor always goes to part 1.
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d) - 1; ++mask) {
                if (!(mask & 1))
                    continue;
                VertexSet p1;
                VertexSet p2;
                for (int i = 0; i < d; ++i)
                    (mask >> i & 1 ? p1 : p2).insert(nb[i]);
                const SplitResult s = split_vertex(g, v, p1, p2);
                bool diamond = false;
                for (const Diamond& dm : find_diamonds(s.graph))
                    if (dm.spine.u != s.z1 && dm.spine.v != s.z1 && dm.spine.u != s.z2 && dm.spine.v != s.z2)
                        diamond = true;
                const int ts = diamond ? 3 : t_number(s.graph).size();
                t.check(diamond || ts >= 3, e->graph6, "split:" + str(v) + ":" + vertex_list(p1) + "|" + vertex_list(p2),
                        "diamond avoiding split vertices or T>=3", "T=" + str(ts) + ", no such diamond");
            }
        }
        return t;
    });
}

struct Sample {
    const CorpusEntry* entry;
    VertexSet r;
    Coloring phi;
};

void extension_lemma(Context& ctx)
{
    const auto pool = ctx.select([](const CorpusEntry& e) { return e.critical && e.n >= 5; });
    ctx.note("seed " + std::to_string(ctx.config.seed) + ", " + std::to_string(ctx.config.samples) +
             " samples over " + std::to_string(pool.size()) + " 4-critical entries with n>=5");
    if (pool.empty())
        return;

    std::mt19937_64 rng(ctx.config.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<Sample> samples;
    for (int s = 0; s < ctx.config.samples; ++s) {
        const CorpusEntry* e = pool[uniform(0, static_cast<int>(pool.size()) - 1)];
        const Graph g = e->graph();
        const int size = uniform(4, g.order() - 1);
        VertexSet r{uniform(0, g.order() - 1)};
        while (r.size() < size) {
            VertexSet frontier;
            for (int v : r)
                frontier |= g.neighbors(v);
            frontier -= r;
            const auto choices = frontier.to_vector();
            if (choices.empty())
                break;
            r.insert(choices[uniform(0, static_cast<int>(choices.size()) - 1)]);
        }
        if (r.size() < 4)
            continue;
        auto phi = k_colorable(induced_subgraph(g, r).graph, 3);
        if (!phi)
            throw Error("extension-lemma: G[R] not 3-colorable for a proper subset of a 4-critical graph");
        std::array<int, 3> perm{1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int& c : phi->colors)
            c = perm[c - 1];
        phi->k = 3;
        samples.push_back({e, r, *phi});
    }

    ctx.run<Sample>(samples, [](const Sample& s) {
        Tally t;
        const Graph g = s.entry->graph();
        const std::string where = "R=" + vertex_list(s.r);
        const PhiIdentification id = phi_identification(g, s.r, s.phi);
        const bool colorable = is_3_colorable(id.graph);
        t.check(!colorable, s.entry->graph6, "identified-not-3-colorable:" + where, "not 3-colorable",
                "3-colorable");
        if (colorable)
            return t;
        const ExtensionRecord rec = critical_extension(g, s.r, s.phi);
        const ExtensionBounds b = check_extension_bounds(rec);
        t.check(b.sharp_holds, s.entry->graph6, "sharp-bound:" + where, "<=" + str(b.sharp_bound),
                str(b.p_r_prime));
        t.check(b.coarse_holds, s.entry->graph6, "coarse-bound:" + where, "<=" + str(b.coarse_bound),
                str(b.p_r_prime));
        t.check(b.core_nonempty, s.entry->graph6, "core-nonempty:" + where, ">=1", str(rec.core_size()));
        t.check(b.t_drop_within_core, s.entry->graph6, "T-drop:" + where, "<=" + str(rec.core_size()),
                str(b.t_w - b.t_w_minus_core));
        t.check(b.vertex_count_matches, s.entry->graph6, "vertex-count:" + where, "|R|+|V(W)|-|X|",
                str(rec.r_prime.size()));
        t.check(b.edge_count_bound, s.entry->graph6, "edge-count:" + where, "|E(R)|+|E(W)|-C(|X|,2)", "smaller");
        return t;
    });
}

void charge_identity(Context& ctx)
{
    const auto items = ctx.select([](const CorpusEntry&) { return true; });
    ctx.run<const CorpusEntry*>(items, [](const CorpusEntry* const& e) {
        Tally t;
        const ChargeIdentityReport r = charge_identity_check(e->graph());
        t.check(r.holds, e->graph6, "charge=5n-3m=p+T",
                str(r.five_n_minus_three_m) + "=" + str(r.p) + "+" + str(r.t), to_string(r.charge_total));
        return t;
    });
}

void discharge_conservation(Context& ctx)
{
    struct Outcome {
        Tally tally;
        bool applicable = false;
        int positive_heavy = 0;
    };
    const auto items = ctx.select([](const CorpusEntry&) { return true; });
    const auto outcomes = parallel_map<Outcome>(items.size(), ctx.config.jobs, [&](std::size_t i) {
        Outcome o;
        const CorpusEntry& e = *items[i];
        const Graph g = e.graph();
        ChargeLedger ledger;
        try {
            ledger = discharge(g);
        } catch (const RulesInapplicable&) {
            return o;
        }
        o.applicable = true;
        o.positive_heavy = static_cast<int>(ledger.positive_heavy_vertices(g).size());
        o.tally.check(ledger.final_total() == ledger.initial_total(), e.graph6, "conservation",
                      to_string(ledger.initial_total()), to_string(ledger.final_total()));
        for (const Transfer& tr : ledger.transfers) {
            const bool listed = tr.amount == Rational(1, 6) || tr.amount == Rational(1, 4) ||
                                tr.amount == Rational(1, 3) || tr.amount == Rational(3, 8);
            o.tally.check(listed, e.graph6, "transfer-amount:" + str(tr.from) + "->" + str(tr.to),
                          "1/6, 1/4, 1/3 or 3/8", to_string(tr.amount));
        }
        for (const D3Component& c : ledger.d3_components) {
            // A component keeps nothing once every rule has somewhere to send.
            bool all_heavy = true;
            for (int v : c.vertices)
                for (int w : g.neighbors(v) - c.vertices)
                    all_heavy = all_heavy && g.degree(w) >= 4;
            if (c.vertices.size() == 1 || all_heavy)
                o.tally.check(ledger.component_total(c) == Rational(0), e.graph6,
                              "component-total:" + vertex_list(c.vertices), "0",
                              to_string(ledger.component_total(c)));
        }
        return o;
    });
    int applicable = 0;
    int heavy = 0;
    for (const auto& o : outcomes) {
        applicable += o.applicable ? 1 : 0;
        heavy += o.positive_heavy;
        ctx.report.checks += o.tally.checks;
        ctx.report.failures.insert(ctx.report.failures.end(), o.tally.failures.begin(), o.tally.failures.end());
    }
    ctx.note("applicable entries: " + std::to_string(applicable) + " of " + std::to_string(items.size()));
    ctx.note("degree>=4 vertices ending with positive charge (reported, not enforced): " + std::to_string(heavy));
}

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"ky-bound", ky_bound},
        {"girth5-bound", girth5_bound},
        {"theorem-main", theorem_main},
        {"ore-identity", ore_identity},
        {"ore-triangle-avoid-vertex", ore_triangle_avoid_vertex},
        {"ore-second-triangle", ore_second_triangle},
        {"ore-composition-t", ore_composition_t},
        {"ore-t-small", ore_t_small},
        {"edge-deletion-t", edge_deletion_t},
        {"ore-t3-split", ore_t3_split},
        {"extension-lemma", extension_lemma},
        {"charge-identity", charge_identity},
        {"discharge-conservation", discharge_conservation},
    };
    return suites;
}

const std::map<std::string, std::string>& aliases()
{
    static const std::map<std::string, std::string> table{
        {"prop-2.1", "ore-triangle-avoid-vertex"}, {"prop-2.2", "ore-second-triangle"},
        {"prop-2.3", "ore-composition-t"},         {"prop-2.4", "ore-t-small"},
        {"prop-2.5", "edge-deletion-t"},           {"prop-2.6", "ore-t3-split"},
    };
    return table;
}

std::string clean(std::string s)
{
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::string resolve_suite_name(std::string_view name)
{
    for (const auto& [known, fn] : registry())
        if (known == name)
            return known;
    if (auto it = aliases().find(std::string(name)); it != aliases().end())
        return it->second;
    throw Error("unknown suite '" + std::string(name) + "'");
}

SuiteReport run_suite(std::string_view name, const Corpus& corpus, const HarnessConfig& config)
{
    const std::string resolved = resolve_suite_name(name);
    SuiteReport report;
    report.suite = resolved;
    const auto start = std::chrono::steady_clock::now();
    Context ctx{corpus, config, report};
    for (const auto& [known, fn] : registry())
        if (known == resolved)
            fn(ctx);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void write_report(const SuiteReport& report, std::ostream& out)
{
    out << "record=suite\tname=" << report.suite << "\tchecks=" << report.checks
        << "\tfailures=" << report.failures.size() << "\tstatus=" << (report.passed() ? "pass" : "fail") << '\n';
    for (const auto& n : report.notes)
        out << "record=note\ttext=" << clean(n) << '\n';
    for (const auto& f : report.failures)
        out << "record=failure\tgraph6=" << f.graph6 << "\tclaim=" << clean(f.claim)
            << "\texpected=" << clean(f.expected) << "\tgot=" << clean(f.got) << '\n';
}

void print_report(const SuiteReport& report, std::ostream& out)
{
    out << "suite " << report.suite << ": " << report.checks << " checks, " << report.failures.size()
        << " failures, " << (report.passed() ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2)
        << report.wall_seconds << " s)\n";
    for (const auto& n : report.notes)
        out << "  note: " << n << '\n';
    for (const auto& f : report.failures)
        out << "  FAIL " << f.graph6 << " " << f.claim << ": expected " << f.expected << ", got " << f.got << '\n';
}

} // namespace critgraph
