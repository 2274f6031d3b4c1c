#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/canonical.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/potential.hpp"

namespace critgraph {

class OreCatalog;

enum class Provenance { Enumerated, Ingested, Constructed };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

struct HarnessConfig {
    int cap = kDefaultCap;
    int jobs = 1;
    std::uint64_t seed = 1;
    int samples = 200; // extension-lemma draws
};

struct CorpusEntry {
    std::string graph6;
    CanonicalForm form;
    int n = 0;
    int m = 0;
    std::optional<int> girth;
    int t = 0;
    int p = 0;
    bool critical = false;
    Classification classification = Classification::Other;
    bool ore = false;
    Provenance provenance = Provenance::Constructed;
    std::string name;

    Graph graph() const;
};

/// Entries are stored canonically relabeled and kept sorted by canonical
/// form; no two share a form.
class Corpus {
public:
    const std::vector<CorpusEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Adds or merges an entry. A duplicate keeps the first provenance and
    /// picks up the ore flag and a name if the existing entry lacks them.
    /// Returns true if the entry was new.
    bool add(CorpusEntry e);

    const CorpusEntry* find(const CanonicalForm& form) const;

    /// Mutable access for building negative controls.
    std::vector<CorpusEntry>& mutable_entries() { return entries_; }

private:
    std::vector<CorpusEntry> entries_;
};

/// Computes all metadata for g. `ore` is taken from `catalog` when the
/// graph's order is covered; candidates above it raise CapExceeded.
CorpusEntry make_entry(const Graph& g, Provenance provenance, const OreCatalog& catalog, int cap,
                       std::string name = {});

struct CorpusSources {
    bool named = false;
    std::optional<int> ore_max_n;
    std::optional<int> critical_max_n;
    std::vector<std::string> g6_files;
    std::vector<Graph> constructed;
};

Corpus build_corpus(const CorpusSources& sources, const HarnessConfig& config);

/// Graphs from a graph6 file, one per line; blank lines and lines starting
/// with '>' or '#' are skipped. Errors name the file and line.
std::vector<Graph> read_graph6_file(const std::string& path);

/// One line per entry: graph6, tab, space-separated key=value metadata.
void write_corpus(const Corpus& corpus, std::ostream& out);
void save_corpus(const Corpus& corpus, const std::string& path);

/// Parses and audits: every metadata field is recomputed from the graph
/// and must match. Errors name the offending line.
Corpus read_corpus(std::istream& in, const HarnessConfig& config, const std::string& source = "corpus");
Corpus load_corpus(const std::string& path, const HarnessConfig& config);

/// A catalog holding every corpus entry flagged ore, covering orders up to
/// the largest such entry.
OreCatalog catalog_from_corpus(const Corpus& corpus);

} // namespace critgraph
