#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

class OreCatalog;

/// A cycle of length 3 or 4: its vertex set plus one witness cyclic order.
struct ShortCycle {
    VertexSet vertices;
    std::vector<int> order;

    bool operator==(const ShortCycle&) const = default;
};

struct CyclePacking {
    std::vector<ShortCycle> cycles;
    int size() const { return static_cast<int>(cycles.size()); }
};

enum class Classification { K4, H7, W5, T8, T11, OreT3, Other };

std::string_view to_string(Classification c);
Classification classification_from_string(std::string_view s);

struct PotentialReport {
    int n = 0;
    int m = 0;
    int t = 0;
    int p = 0; // 5n - 3m - t
    Classification classification = Classification::Other;
};

/// Every triangle and every 4-cycle exactly once, ordered by sorted vertex
/// tuple (a 4-set may carry up to three distinct 4-cycles).
std::vector<ShortCycle> short_cycles(const Graph& g);

/// Maximum set of vertex-disjoint short cycles. Among maximum packings the
/// witness is the lexicographically least in cycle-list order.
CyclePacking t_number(const Graph& g);

/// 5n - 3m - T(g) with n, m, T filled in. Classification is computed against
/// the shared catalog (built on demand, see shared_catalog()).
PotentialReport potential(const Graph& g);
PotentialReport potential(const Graph& g, const OreCatalog& catalog);
PotentialReport set_potential(const Graph& g, VertexSet r);

/// Just 5n - 3m - T, without classification.
int potential_value(const Graph& g);

/// Theorem-level classification of a graph: one of the five fixed
/// exceptional graphs by isomorphism, a 4-Ore graph with T = 3, or Other.
/// Throws CapExceeded only when membership in the 4-Ore family would have
/// to be decided above the catalog's order.
Classification classify_exceptional(const Graph& g, const OreCatalog& catalog);
Classification classify_exceptional(const Graph& g);

} // namespace critgraph
