// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "critgraph/canonical.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/corpus.hpp"
#include "critgraph/discharging.hpp"
#include "critgraph/enumerate.hpp"
#include "critgraph/extension.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/graph_ops.hpp"
#include "critgraph/named.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/potential.hpp"
#include "critgraph/suites.hpp"

using namespace critgraph;

namespace {

const std::string kFixture = std::string(CRITGRAPH_TEST_DATA) + "/girth5_4regular_21.g6";

// Collects the first few reasons a criterion failed.
class Verdict {
public:
    void require(bool ok, const std::string& what)
    {
        if (ok)
            return;
        if (problems_.size() < 5)
            problems_.push_back(what);
        ++count_;
    }
    bool ok() const { return count_ == 0; }
    std::string summary() const
    {
        std::string s;
        for (const auto& p : problems_)
            s += (s.empty() ? "" : "; ") + p;
        if (count_ > static_cast<int>(problems_.size()))
            s += "; ...";
        return s;
    }
    std::string detail;

private:
    std::vector<std::string> problems_;
    int count_ = 0;
};

int failed = 0;

void criterion(int number, const std::string& title, const std::function<void(Verdict&)>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << (v.ok() ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << time << ")";
    if (!v.detail.empty())
        std::cout << " [" << v.detail << "]";
    if (!v.ok()) {
        std::cout << " -- " << v.summary();
        ++failed;
    }
    std::cout << std::endl;
}

Graph named(const char* name)
{
    return construct_named(name).graph;
}

std::string report_text(const SuiteReport& r)
{
    std::ostringstream out;
    write_report(r, out);
    return out.str();
}

void require_suite(Verdict& v, const std::string& name, const Corpus& corpus, const HarnessConfig& cfg,
                   std::uint64_t min_checks = 1)
{
    const SuiteReport r = run_suite(name, corpus, cfg);
    v.require(r.passed(), name + ": " + std::to_string(r.failures.size()) + " failures");
    v.require(r.checks >= min_checks, name + ": only " + std::to_string(r.checks) + " checks");
    v.detail += (v.detail.empty() ? "" : ", ") + name + " " + std::to_string(r.checks);
}

} // namespace

int main()
{
    HarnessConfig cfg;
    cfg.jobs = 8;
    cfg.cap = 24;

    // Named graphs, the 4-Ore catalog to 13, every 4-critical graph to 9
    // and the ingested girth-5 fixture.
    CorpusSources sources;
    sources.named = true;
    sources.ore_max_n = 13;
    sources.critical_max_n = 9;
    sources.g6_files = {kFixture};
    const Corpus corpus = build_corpus(sources, cfg);
    std::cout << "corpus: " << corpus.size() << " entries" << std::endl;

    criterion(1, "named-graph potentials and criticality", [](Verdict& v) {
        const std::vector<std::pair<const char*, int>> expected{
            {"K4", 1}, {"H7", 0}, {"W5", -1}, {"T8", -1}, {"T11", -1}};
        for (const auto& [name, p] : expected) {
            const Graph g = named(name);
            v.require(potential(g).p == p, std::string("p(") + name + ")");
            v.require(is_4_critical(g), std::string(name) + " not 4-critical");
        }
    });

    criterion(2, "4-Ore catalog up to 13 vertices", [](Verdict& v) {
        const OreCatalog& c = shared_catalog(13);
        const Graph k4 = named("K4");
        const Graph h7 = named("H7");
        int t3 = 0;
        for (const CatalogEntry* e : c.all()) {
            const Graph& g = e->graph;
            const int t = t_number(g).size();
            v.require(5 * g.order() - 3 * g.size() == 2, "5n-3m != 2 at " + e->form.hex());
            v.require((t == 1) == is_isomorphic(g, k4), "T=1 outside K4");
            v.require((t == 2) == is_isomorphic(g, h7), "T=2 outside H7");
            if (t == 3) {
                ++t3;
                v.require(potential_value(g) == -1, "T=3 member with p != -1");
            }
        }
        v.require(t3 > 0, "no member with T=3");
        v.detail = std::to_string(c.count()) + " members, " + std::to_string(t3) + " with T=3";
    });

    criterion(3, "proposition suites 2.1, 2.2, 2.3, 2.5, 2.6", [&](Verdict& v) {
        for (const char* alias : {"prop-2.1", "prop-2.2", "prop-2.3", "prop-2.5", "prop-2.6"})
            require_suite(v, alias, corpus, cfg);
    });

    criterion(4, "exhaustive 4-critical check up to 9 vertices", [&](Verdict& v) {
        EnumerationFilter f;
        f.four_critical = true;
        const auto graphs = enumerate_graphs(9, f, cfg.jobs);
        std::map<int, int> per_n;
        Corpus enumerated;
        for (const Graph& g : graphs) {
            ++per_n[g.order()];
            const CorpusEntry* e = corpus.find(canonical_form(g));
            v.require(e != nullptr, "enumerated graph missing from corpus");
            if (e)
                enumerated.add(*e);
        }
        v.require(per_n[4] == 1, "n=4 count");
        v.require(per_n[5] == 0, "n=5 count");
        require_suite(v, "ky-bound", enumerated, cfg, graphs.size());
        require_suite(v, "theorem-main", enumerated, cfg, graphs.size());
        v.detail = std::to_string(graphs.size()) + " graphs; " + v.detail;
    });

    criterion(5, "extension lemma on 200 seeded samples", [&](Verdict& v) {
        HarnessConfig c = cfg;
        c.samples = 200;
        require_suite(v, "extension-lemma", corpus, c, 200);
        const ExtensionRecord rec = critical_extension(named("W5"), VertexSet{0, 1, 2, 3}, Coloring{{1, 2, 1, 2}, 3});
        const ExtensionBounds b = check_extension_bounds(rec);
        v.require(rec.core_size() == 2, "W5 core size");
        v.require(b.sharp_slack == 7, "W5 slack");
        v.require(b.all_hold(), "W5 bounds");
    });

    criterion(6, "charge identity, conservation and the K3,4 ledger", [&](Verdict& v) {
        int applicable = 0;
        for (const CorpusEntry& e : corpus.entries()) {
            const Graph g = e.graph();
            const ChargeIdentityReport r = charge_identity_check(g);
            v.require(r.holds, "charge identity at " + e.graph6);
            try {
                const ChargeLedger l = discharge(g);
                ++applicable;
                v.require(l.final_total() == l.initial_total(), "conservation at " + e.graph6);
            } catch (const RulesInapplicable&) {
            }
        }
        require_suite(v, "charge-identity", corpus, cfg);
        require_suite(v, "discharge-conservation", corpus, cfg);
        const Graph k34 = complete_bipartite(3, 4);
        const ChargeLedger l = discharge(k34);
        for (int u = 0; u < k34.order(); ++u)
            v.require(l.final[u] == (k34.degree(u) == 4 ? Rational(-1, 3) : Rational(0)), "K3,4 ledger");
        v.require(l.final_total() == Rational(-1), "K3,4 total");
        v.detail = std::to_string(applicable) + " applicable; " + v.detail;
    });

    criterion(7, "girth-5 bound on ingested data and the Mycielskian of C5", [&](Verdict& v) {
        const CorpusEntry* g21 = nullptr;
        for (const CorpusEntry& e : corpus.entries())
            if (e.provenance == Provenance::Ingested && e.n == 21)
                g21 = &e;
        v.require(g21 != nullptr, "fixture not ingested");
        if (g21) {
            v.require(g21->critical && g21->girth == 5, "fixture metadata");
            v.require(3 * g21->m >= 5 * g21->n + 2, "3m >= 5n+2 on the fixture");
            v.require(g21->p == -21, "fixture potential");
        }
        require_suite(v, "girth5-bound", corpus, cfg);
        const Graph m = mycielskian(cycle_graph(5));
        v.require(m.size() == 20 && 3 * m.size() == 5 * 11 + 5, "Mycielskian edge count");
        v.require(short_cycles(m).empty() || *girth(m) > 3, "Mycielskian has a triangle");
        v.require(is_4_critical(m), "Mycielskian not 4-critical");
    });

    criterion(8, "graph6 codec", [&](Verdict& v) {
        for (const CorpusEntry& e : corpus.entries()) {
            const Graph g = graph6_decode(e.graph6);
            v.require(graph6_encode(g) == e.graph6, "round trip at " + e.graph6);
            v.require(g == e.graph(), "decode at " + e.graph6);
        }
        v.require(graph6_encode(named("K4")) == "C~" && graph6_decode("C~") == named("K4"), "K4");
        v.require(graph6_encode(cycle_graph(5)) == "Dhc" && graph6_decode("Dhc") == cycle_graph(5), "C5");
        v.detail = std::to_string(corpus.size()) + " entries";
    });

    criterion(9, "reports identical with 1 and 8 jobs", [&](Verdict& v) {
        const auto dir = std::filesystem::temp_directory_path() / "critgraph_acceptance";
        std::filesystem::create_directories(dir);
        HarnessConfig one = cfg;
        one.jobs = 1;
        HarnessConfig eight = cfg;
        eight.jobs = 8;
        for (const std::string& name : suite_names()) {
            const auto a = dir / (name + ".j1");
            const auto b = dir / (name + ".j8");
            std::ofstream(a) << report_text(run_suite(name, corpus, one));
            std::ofstream(b) << report_text(run_suite(name, corpus, eight));
            std::ifstream fa(a), fb(b);
            std::stringstream sa, sb;
            sa << fa.rdbuf();
            sb << fb.rdbuf();
            v.require(!sa.str().empty() && sa.str() == sb.str(), name + " differs");
        }
        std::ostringstream c1, c8;
        write_corpus(build_corpus(sources, one), c1);
        write_corpus(build_corpus(sources, eight), c8);
        v.require(c1.str() == c8.str(), "corpus differs");
        v.detail = std::to_string(suite_names().size()) + " suites";
    });

    criterion(10, "negative controls", [&](Verdict& v) {
        Graph mutant = named("T8");
        const Edge e = mutant.edges().front();
        mutant.remove_edge(e.u, e.v);
        v.require(!is_4_critical(mutant), "mutated T8 still 4-critical");
        CorpusEntry lie = make_entry(mutant, Provenance::Constructed, shared_catalog(13), cfg.cap, "T8-mutant");
        lie.critical = true;
        lie.classification = Classification::T8;
        Corpus bad;
        bad.add(lie);
        for (const char* name : {"ky-bound", "theorem-main"})
            v.require(!run_suite(name, bad, cfg).passed(), std::string(name) + " missed the mutant");

        ExtensionRecord rec = critical_extension(named("W5"), VertexSet{0, 1, 2, 3}, Coloring{{1, 2, 1, 2}, 3});
        rec.r_prime = rec.r;
        v.require(!check_extension_bounds(rec).all_hold(), "tampered record passed");
    });

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed;
}
