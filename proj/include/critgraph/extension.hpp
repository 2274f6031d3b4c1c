#pragma once

#include <array>
#include <vector>

#include "critgraph/coloring.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/graph_ops.hpp"

namespace critgraph {

/// G with each color class of a 3-coloring of G[R] merged into one vertex
/// x_i and the triangle x1x2x3 added. A class may be empty; its x_i is
/// still created.
struct PhiIdentification {
    Graph graph;
    std::array<int, 3> triangle{}; // x1, x2, x3 in `graph`
    std::vector<int> base_to_identified;
    std::vector<int> identified_to_base; // -1 for the x_i
};

/// `phi` colors G[R] in the dense order-preserving labeling of R (the i-th
/// smallest vertex of R gets phi.colors[i]) with colors in 1..3.
PhiIdentification phi_identification(const Graph& g, VertexSet r, const Coloring& phi);

struct ExtensionRecord {
    Graph base;
    VertexSet r;
    Coloring phi;
    PhiIdentification identified;
    Relabeled extender;       // W, mapped into `identified.graph`
    std::vector<int> core;    // colors i (1..3) with x_i in V(W)
    VertexSet r_prime;        // (V(W) - {x1,x2,x3}) in base labels, plus R
    bool complete = false;
    bool spanning = false;
    bool total = false;

    int core_size() const { return static_cast<int>(core.size()); }
};

/// Builds the record for the extender chosen by critical_subgraph.
///
/// The extension is incomplete when some vertex w of W outside the triangle
/// has more G-neighbors in R than G-neighbors in the color classes of the
/// core, or when G has an edge between two such vertices that W lacks.
ExtensionRecord critical_extension(const Graph& g, VertexSet r, const Coloring& phi);

/// f(|X|) = 5|X| - 3 C(|X|, 2): 5, 7, 6 for |X| = 1, 2, 3.
int core_penalty(int core_size);

struct ExtensionBounds {
    int p_r = 0;         // p_G(R)
    int p_r_prime = 0;   // p_G(R')
    int p_w = 0;         // p(W)
    int f = 0;           // f(|X|)
    int t_w = 0;         // T(W)
    int t_w_minus_core = 0;

    int sharp_bound = 0; // p_G(R) + p(W) - f(|X|) + T(W) - T(W \ X)
    int coarse_bound = 0; // p_G(R) + p(W) - 3
    bool sharp_holds = false;
    bool coarse_holds = false;
    int sharp_slack = 0;

    bool core_nonempty = false;
    bool t_drop_within_core = false;  // T(W) - T(W \ X) <= |X|
    bool vertex_count_matches = false; // |R'| = |R| + |V(W)| - |X|
    bool edge_count_bound = false;    // |E(G[R'])| >= |E(G[R])| + |E(W)| - C(|X|, 2)

    bool all_hold() const
    {
        return sharp_holds && coarse_holds && core_nonempty && t_drop_within_core && vertex_count_matches &&
               edge_count_bound;
    }
};

ExtensionBounds check_extension_bounds(const ExtensionRecord& rec);

} // namespace critgraph
