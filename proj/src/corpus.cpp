#include "critgraph/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "critgraph/coloring.hpp"
#include "critgraph/enumerate.hpp"
#include "critgraph/error.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/graph_ops.hpp"
#include "critgraph/named.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/parallel.hpp"

namespace critgraph {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::Enumerated: return "enumerated";
    case Provenance::Ingested: return "ingested";
    case Provenance::Constructed: return "constructed";
    }
    return "constructed";
}

Provenance provenance_from_string(std::string_view s)
{
    if (s == "enumerated")
        return Provenance::Enumerated;
    if (s == "ingested")
        return Provenance::Ingested;
    if (s == "constructed")
        return Provenance::Constructed;
    throw Error("unknown provenance '" + std::string(s) + "'");
}

Graph CorpusEntry::graph() const
{
    return graph6_decode(graph6);
}

bool Corpus::add(CorpusEntry e)
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), e.form,
                               [](const CorpusEntry& x, const CanonicalForm& f) { return x.form < f; });
    if (it != entries_.end() && it->form == e.form) {
        it->ore = it->ore || e.ore;
        if (it->name.empty())
            it->name = e.name;
        return false;
    }
    entries_.insert(it, std::move(e));
    return true;
}

const CorpusEntry* Corpus::find(const CanonicalForm& form) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), form,
                               [](const CorpusEntry& x, const CanonicalForm& f) { return x.form < f; });
    return it != entries_.end() && it->form == form ? &*it : nullptr;
}

namespace {

bool ore_arithmetic(const Graph& g)
{
    return g.order() % 3 == 1 && 5 * g.order() - 3 * g.size() == 2;
}

// Largest order at which some graph needs a 4-Ore lookup.
int catalog_order_needed(const std::vector<Graph>& graphs)
{
    int order = 0;
    for (const Graph& g : graphs)
        if (ore_arithmetic(g))
            order = std::max(order, g.order());
    return order;
}

OreCatalog catalog_for(int order, const HarnessConfig& config)
{
    if (order > config.cap)
        throw CapExceeded("4-Ore lookup needed at order " + std::to_string(order) + ", above cap " +
                          std::to_string(config.cap));
    return order >= 4 ? enumerate_4_ore(order, config.cap, config.jobs) : OreCatalog(0);
}

std::string girth_text(const std::optional<int>& g)
{
    return g ? std::to_string(*g) : "inf";
}

} // namespace

CorpusEntry make_entry(const Graph& g, Provenance provenance, const OreCatalog& catalog, int cap, std::string name)
{
    const CanonicalLabeling lab = canonical_labeling(g, cap);
    const Graph canon = permute(g, lab.position);
    CorpusEntry e;
    e.graph6 = graph6_encode(canon);
    e.form = lab.form;
    const PotentialReport r = potential(canon, catalog);
    e.n = r.n;
    e.m = r.m;
    e.t = r.t;
    e.p = r.p;
    e.classification = r.classification;
    e.girth = girth(canon);
    e.critical = is_4_critical(canon);
    e.ore = ore_arithmetic(canon) && catalog.contains(canon);
    e.provenance = provenance;
    e.name = std::move(name);
    return e;
}

std::vector<Graph> read_graph6_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(path + ": cannot open");
    std::vector<Graph> out;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        // Corpus files carry metadata after a tab; the graph6 field comes first.
        if (const auto tab = line.find('\t'); tab != std::string::npos)
            line.erase(tab);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::string_view text = line;
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);
        try {
            out.push_back(graph6_decode(text));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), e.offset());
        }
    }
    return out;
}

Corpus build_corpus(const CorpusSources& sources, const HarnessConfig& config)
{
    struct Pending {
        Graph graph;
        Provenance provenance;
        std::string name;
    };
    std::vector<Pending> pending;

    if (sources.named) {
        for (const std::string& name : fixed_graph_names())
            pending.push_back({construct_named(name).graph, Provenance::Constructed, name});
        pending.push_back({mycielskian(cycle_graph(5)), Provenance::Constructed, "MYCIELSKI_C5"});
    }
    std::optional<OreCatalog> ore_source;
    if (sources.ore_max_n) {
        ore_source = catalog_for(*sources.ore_max_n, config);
        for (const CatalogEntry* e : ore_source->all())
            pending.push_back({e->graph, Provenance::Constructed, {}});
    }
    if (sources.critical_max_n) {
        EnumerationFilter filter;
        filter.four_critical = true;
        for (Graph& g : enumerate_graphs(*sources.critical_max_n, filter, config.jobs))
            pending.push_back({std::move(g), Provenance::Enumerated, {}});
    }
    for (const std::string& path : sources.g6_files)
        for (Graph& g : read_graph6_file(path))
            pending.push_back({std::move(g), Provenance::Ingested, {}});
    for (const Graph& g : sources.constructed)
        pending.push_back({g, Provenance::Constructed, {}});

    std::vector<Graph> graphs;
    for (const auto& p : pending)
        graphs.push_back(p.graph);
    const int needed = catalog_order_needed(graphs);
    const OreCatalog catalog = ore_source && ore_source->max_order() >= needed ? *ore_source
                                                                                : catalog_for(needed, config);

    const auto entries = parallel_map<CorpusEntry>(pending.size(), config.jobs, [&](std::size_t i) {
        return make_entry(pending[i].graph, pending[i].provenance, catalog, config.cap, pending[i].name);
    });
    Corpus corpus;
    for (const auto& e : entries)
        corpus.add(e);
    return corpus;
}

void write_corpus(const Corpus& corpus, std::ostream& out)
{
    for (const CorpusEntry& e : corpus.entries()) {
        out << e.graph6 << "\tform=" << e.form.hex() << " n=" << e.n << " m=" << e.m << " girth=" << girth_text(e.girth)
            << " t=" << e.t << " p=" << e.p << " critical=" << (e.critical ? 1 : 0)
            << " class=" << to_string(e.classification) << " ore=" << (e.ore ? 1 : 0)
            << " provenance=" << to_string(e.provenance);
        if (!e.name.empty())
            out << " name=" << e.name;
        out << '\n';
    }
}

void save_corpus(const Corpus& corpus, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error(path + ": cannot write");
    write_corpus(corpus, out);
}

namespace {

int parse_int(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty())
        throw Error("bad integer for " + key + ": '" + value + "'");
    return v;
}

bool parse_flag(const std::string& key, const std::string& value)
{
    if (value != "0" && value != "1")
        throw Error("bad flag for " + key + ": '" + value + "'");
    return value == "1";
}

CorpusEntry parse_line(const std::string& line)
{
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
        throw Error("missing tab after graph6 field");
    CorpusEntry e;
    e.graph6 = line.substr(0, tab);

    std::map<std::string, std::string> kv;
    std::istringstream fields(line.substr(tab + 1));
    std::string field;
    while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw Error("field without '=': '" + field + "'");
        if (!kv.emplace(field.substr(0, eq), field.substr(eq + 1)).second)
            throw Error("duplicate key '" + field.substr(0, eq) + "'");
    }
    auto take = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw Error(std::string("missing key '") + key + "'");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    e.form = CanonicalForm::from_hex(take("form"));
    e.n = parse_int("n", take("n"));
    e.m = parse_int("m", take("m"));
    const std::string gi = take("girth");
    if (gi != "inf")
        e.girth = parse_int("girth", gi);
    e.t = parse_int("t", take("t"));
    e.p = parse_int("p", take("p"));
    e.critical = parse_flag("critical", take("critical"));
    e.classification = classification_from_string(take("class"));
    e.ore = parse_flag("ore", take("ore"));
    e.provenance = provenance_from_string(take("provenance"));
    if (kv.contains("name"))
        e.name = take("name");
    if (!kv.empty())
        throw Error("unknown key '" + kv.begin()->first + "'");
    return e;
}

std::string audit_mismatch(const CorpusEntry& stored, const CorpusEntry& fresh)
{
    auto differ = [](const char* key, const std::string& a, const std::string& b) {
        return std::string(key) + " is " + a + ", recomputed " + b;
    };
    if (stored.form != fresh.form)
        return differ("form", stored.form.hex(), fresh.form.hex());
    if (stored.n != fresh.n)
        return differ("n", std::to_string(stored.n), std::to_string(fresh.n));
    if (stored.m != fresh.m)
        return differ("m", std::to_string(stored.m), std::to_string(fresh.m));
    if (stored.girth != fresh.girth)
        return differ("girth", girth_text(stored.girth), girth_text(fresh.girth));
    if (stored.t != fresh.t)
        return differ("t", std::to_string(stored.t), std::to_string(fresh.t));
    if (stored.p != fresh.p)
        return differ("p", std::to_string(stored.p), std::to_string(fresh.p));
    if (stored.critical != fresh.critical)
        return differ("critical", std::to_string(stored.critical), std::to_string(fresh.critical));
    if (stored.classification != fresh.classification)
        return differ("class", std::string(to_string(stored.classification)),
                      std::string(to_string(fresh.classification)));
    if (stored.ore != fresh.ore)
        return differ("ore", std::to_string(stored.ore), std::to_string(fresh.ore));
    return {};
}

} // namespace

Corpus read_corpus(std::istream& in, const HarnessConfig& config, const std::string& source)
{
    std::vector<std::pair<int, CorpusEntry>> parsed;
    std::vector<Graph> graphs;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        const std::string where = source + ":" + std::to_string(lineno) + ": ";
        try {
            CorpusEntry e = parse_line(line);
            graphs.push_back(graph6_decode(e.graph6));
            parsed.emplace_back(lineno, std::move(e));
        } catch (const ParseError& e) {
            throw ParseError(where + e.what(), e.offset());
        } catch (const Error& e) {
            throw Error(where + e.what());
        }
    }

    const OreCatalog catalog = catalog_for(catalog_order_needed(graphs), config);
    const auto problems = parallel_map<std::string>(parsed.size(), config.jobs, [&](std::size_t i) {
        const CorpusEntry fresh = make_entry(graphs[i], parsed[i].second.provenance, catalog, config.cap);
        return audit_mismatch(parsed[i].second, fresh);
    });

    Corpus corpus;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        const std::string where = source + ":" + std::to_string(parsed[i].first) + ": ";
        if (!problems[i].empty())
            throw Error(where + "metadata audit failed: " + problems[i]);
        if (!corpus.add(parsed[i].second))
            throw Error(where + "duplicate canonical form " + parsed[i].second.form.hex());
    }
    return corpus;
}

Corpus load_corpus(const std::string& path, const HarnessConfig& config)
{
    std::ifstream in(path);
    if (!in)
        throw Error(path + ": cannot open");
    return read_corpus(in, config, path);
}

OreCatalog catalog_from_corpus(const Corpus& corpus)
{
    int order = 0;
    for (const CorpusEntry& e : corpus.entries())
        if (e.ore)
            order = std::max(order, e.n);
    OreCatalog catalog(order);
    for (const CorpusEntry& e : corpus.entries())
        if (e.ore)
            catalog.insert(e.graph());
    return catalog;
}

} // namespace critgraph
