#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "critgraph/canonical.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/corpus.hpp"
#include "critgraph/discharging.hpp"
#include "critgraph/enumerate.hpp"
#include "critgraph/error.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/graph_ops.hpp"
#include "critgraph/named.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/potential.hpp"
#include "critgraph/suites.hpp"

using namespace critgraph;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// A path to a graph6 file, or failing that a literal graph6 string.
std::vector<Graph> read_graphs(const std::string& arg)
{
    if (std::filesystem::exists(arg))
        return read_graph6_file(arg);
    return {graph6_decode(arg)};
}

Graph read_one(const std::string& arg)
{
    auto graphs = read_graphs(arg);
    if (graphs.empty())
        throw Error(arg + ": no graph");
    return graphs.front();
}

std::pair<int, int> parse_pair(const std::string& text)
{
    char comma = 0;
    int u = 0;
    int v = 0;
    std::istringstream in(text);
    if (!(in >> u >> comma >> v) || comma != ',' || !in.eof())
        throw Error("expected u,v but got '" + text + "'");
    return {u, v};
}

VertexSet parse_vertices(const std::string& text)
{
    VertexSet out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.insert(std::stoi(item));
    return out;
}

std::string list(VertexSet s)
{
    std::string out;
    for (int v : s)
        out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw Error(path + ": cannot write");
    out << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Toolkit for 4-critical graphs: potentials, 4-Ore catalogs, and verification suites"};
    app.require_subcommand(1);
    app.fallthrough();

    HarnessConfig config;
    app.add_option("--cap", config.cap, "Canonical-form and 4-Ore catalog order cap")->check(CLI::Range(4, 62));
    app.add_option("--jobs", config.jobs, "Worker threads (never changes output)")->check(CLI::PositiveNumber);

    std::string name;
    auto* make = app.add_subcommand("make", "Print a named graph in graph6");
    make->add_option("name", name, "K4, W5, H7, T8, T11, H7_GADGET, PETERSEN, Ck")->required();
    bool show_roles = false;
    make->add_flag("--roles", show_roles, "Also print distinguished vertices");

    std::string edge_side, split_side, replaced, parts;
    int split_at = 0;
    auto* compose = app.add_subcommand("compose", "Ore-compose two graphs");
    compose->add_option("--edge-side", edge_side, "Edge-side graph (file or graph6)")->required();
    compose->add_option("--replaced-edge", replaced, "Edge u,v of the edge side")->required();
    compose->add_option("--split-side", split_side, "Split-side graph (file or graph6)")->required();
    compose->add_option("--split-vertex", split_at, "Vertex z of the split side")->required();
    compose->add_option("--part", parts, "Neighbors of z for x and y, as a,b|c")->required();

    std::string input;
    auto* tnum = app.add_subcommand("tnum", "Maximum number of disjoint cycles of length at most four");
    auto* pot = app.add_subcommand("potential", "5n - 3m - T and classification");
    auto* crit = app.add_subcommand("critical-check", "Test 4-criticality");
    auto* gir = app.add_subcommand("girth", "Girth");
    auto* dis = app.add_subcommand("discharge", "Charge ledger of the degree-3 discharging rules");
    for (auto* sub : {tnum, pot, crit, gir, dis})
        sub->add_option("input", input, "graph6 file or literal")->required();

    int max_n = 0;
    std::string out_path;
    auto* eore = app.add_subcommand("enumerate-ore", "Generate the 4-Ore catalog as a corpus file");
    eore->add_option("--max-n", max_n)->required();
    eore->add_option("--out", out_path)->required();

    int min_girth = 0;
    auto* ecrit = app.add_subcommand("enumerate-critical", "Enumerate 4-critical graphs into a corpus file");
    ecrit->add_option("--max-n", max_n)->required()->check(CLI::Range(1, kEnumerationMaxOrder));
    ecrit->add_option("--out", out_path)->required();
    ecrit->add_option("--min-girth", min_girth, "Only graphs of at least this girth");

    std::vector<std::string> g6_files;
    auto* ingest = app.add_subcommand("ingest", "Add graph6 files to a corpus (merging into an existing one)");
    ingest->add_option("--g6", g6_files, "graph6 files")->required();
    ingest->add_option("--out", out_path, "Corpus file")->required();

    bool named = false;
    int ore_max = 0;
    int crit_max = 0;
    auto* corpus_cmd = app.add_subcommand("corpus", "Build a corpus from several sources");
    corpus_cmd->add_flag("--named", named, "Named constructions");
    corpus_cmd->add_option("--ore-max-n", ore_max, "4-Ore catalog up to this order");
    corpus_cmd->add_option("--critical-max-n", crit_max, "Enumerated 4-critical graphs up to this order");
    corpus_cmd->add_option("--g6", g6_files, "graph6 files to ingest");
    corpus_cmd->add_option("--out", out_path)->required();

    std::string suite_name, corpus_path;
    auto* suite = app.add_subcommand("suite", "Run a verification suite over a corpus");
    suite->add_option("--name", suite_name)->required();
    suite->add_option("--corpus", corpus_path)->required();
    suite->add_option("--seed", config.seed, "Sampling seed");
    suite->add_option("--samples", config.samples, "Samples for the extension suite");
    suite->add_option("--out", out_path, "Machine-readable report file");

    app.add_subcommand("list-suites", "Print suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*make) {
            const NamedGraph g = construct_named(name);
            std::cout << graph6_encode(g.graph) << '\n';
            if (show_roles)
                for (const auto& [role, v] : g.roles)
                    std::cout << "# " << role << '=' << v << '\n';
        } else if (*compose) {
            const auto [u, v] = parse_pair(replaced);
            const auto bar = parts.find('|');
            if (bar == std::string::npos)
                throw Error("--part needs the form a,b|c");
            const OreRecipe r = ore_compose(read_one(edge_side), Edge{u, v}, read_one(split_side), split_at,
                                            parse_vertices(parts.substr(0, bar)),
                                            parse_vertices(parts.substr(bar + 1)));
            std::cout << graph6_encode(r.result) << '\n'
                      << "# n=" << r.result.order() << " m=" << r.result.size() << " x=" << r.x << " y=" << r.y
                      << '\n';
        } else if (*tnum) {
            for (const Graph& g : read_graphs(input)) {
                const CyclePacking p = t_number(g);
                std::cout << graph6_encode(g) << "\tT=" << p.size();
                for (const ShortCycle& c : p.cycles) {
                    std::cout << (&c == &p.cycles.front() ? "\tcycles=" : " ");
                    for (std::size_t i = 0; i < c.order.size(); ++i)
                        std::cout << (i ? "-" : "") << c.order[i];
                }
                std::cout << '\n';
            }
        } else if (*pot) {
            for (const Graph& g : read_graphs(input)) {
                const PotentialReport r = potential(g);
                std::cout << graph6_encode(g) << "\tn=" << r.n << " m=" << r.m << " T=" << r.t << " p=" << r.p
                          << " class=" << to_string(r.classification) << '\n';
            }
        } else if (*crit) {
            for (const Graph& g : read_graphs(input))
                std::cout << graph6_encode(g) << "\t4-critical=" << (is_4_critical(g) ? "yes" : "no") << '\n';
        } else if (*gir) {
            for (const Graph& g : read_graphs(input)) {
                const auto gi = girth(g);
                std::cout << graph6_encode(g) << "\tgirth=" << (gi ? std::to_string(*gi) : "inf") << '\n';
            }
        } else if (*dis) {
            for (const Graph& g : read_graphs(input)) {
                const ChargeLedger ledger = discharge(g);
                std::cout << "graph=" << graph6_encode(g) << " initial_total=" << to_string(ledger.initial_total())
                          << " final_total=" << to_string(ledger.final_total())
                          << " heavy_edges=" << ledger.heavy_edges << '\n';
                for (const D3Component& c : ledger.d3_components)
                    std::cout << "component=" << list(c.vertices) << " diameter=" << c.diameter
                              << " total=" << to_string(ledger.component_total(c)) << '\n';
                for (const Transfer& t : ledger.transfers)
                    std::cout << "transfer=" << t.from << "->" << t.to << " amount=" << to_string(t.amount) << '\n';
                for (int v = 0; v < g.order(); ++v)
                    std::cout << "vertex=" << v << " degree=" << g.degree(v)
                              << " initial=" << to_string(ledger.initial[v]) << " final=" << to_string(ledger.final[v])
                              << '\n';
            }
        } else if (*eore) {
            CorpusSources sources;
            sources.ore_max_n = max_n;
            const Corpus corpus = build_corpus(sources, config);
            save_corpus(corpus, out_path);
            std::cout << "4-Ore graphs up to " << max_n << " vertices: " << corpus.size() << '\n';
        } else if (*ecrit) {
            EnumerationFilter filter;
            filter.four_critical = true;
            filter.min_girth = min_girth;
            CorpusSources sources;
            sources.constructed = enumerate_graphs(max_n, filter, config.jobs);
            const Corpus built = build_corpus(sources, config);
            Corpus corpus;
            for (CorpusEntry e : built.entries()) {
                e.provenance = Provenance::Enumerated;
                corpus.add(std::move(e));
            }
            save_corpus(corpus, out_path);
            std::cout << "4-critical graphs up to " << max_n << " vertices: " << corpus.size() << '\n';
        } else if (*ingest) {
            Corpus corpus;
            if (std::filesystem::exists(out_path))
                corpus = load_corpus(out_path, config);
            CorpusSources sources;
            sources.g6_files = g6_files;
            const Corpus fresh = build_corpus(sources, config);
            int added = 0;
            for (const CorpusEntry& e : fresh.entries())
                added += corpus.add(e) ? 1 : 0;
            save_corpus(corpus, out_path);
            std::cout << "ingested " << added << " new entries; corpus holds " << corpus.size() << '\n';
        } else if (*corpus_cmd) {
            CorpusSources sources;
            sources.named = named;
            if (ore_max > 0)
                sources.ore_max_n = ore_max;
            if (crit_max > 0)
                sources.critical_max_n = crit_max;
            sources.g6_files = g6_files;
            const Corpus corpus = build_corpus(sources, config);
            save_corpus(corpus, out_path);
            std::cout << "corpus entries: " << corpus.size() << '\n';
        } else if (*suite) {
            const std::string resolved = resolve_suite_name(suite_name);
            const Corpus corpus = load_corpus(corpus_path, config);
            const SuiteReport report = run_suite(resolved, corpus, config);
            print_report(report, std::cout);
            if (!out_path.empty()) {
                std::ostringstream text;
                write_report(report, text);
                write_text(out_path, text.str());
            }
            return report.passed() ? kExitPass : kExitFail;
        } else {
            for (const std::string& s : suite_names())
                std::cout << s << '\n';
        }
    } catch (const RulesInapplicable& e) {
        std::cerr << e.what() << '\n';
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitPass;
}
