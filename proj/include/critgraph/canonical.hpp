#pragma once

#include <compare>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

inline constexpr int kDefaultCap = 16;

/// Isomorphism-invariant byte string: one byte holding n, then the upper
/// triangle of the canonically relabeled adjacency matrix, column by
/// column, packed eight bits per byte (most significant first).
struct CanonicalForm {
    std::string bytes;

    std::string hex() const;
    static CanonicalForm from_hex(const std::string& hex);

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
    std::vector<int> position; // vertex -> canonical position
    CanonicalForm form;
};

/// Individualization-refinement search with equitable-partition refinement
/// and automorphism pruning. Throws CapExceeded above `cap` vertices.
CanonicalLabeling canonical_labeling(const Graph& g, int cap = kDefaultCap);
CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCap);
bool is_isomorphic(const Graph& g, const Graph& h, int cap = kDefaultCap);

/// Canonical form of an already relabeled graph (no search).
CanonicalForm encode_adjacency(const Graph& g);

/// The canonically labeled graph a form describes.
Graph graph_from_canonical(const CanonicalForm& form);

} // namespace critgraph
