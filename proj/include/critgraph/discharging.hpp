#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "critgraph/error.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/graph_ops.hpp"

namespace critgraph {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);

struct D3Component {
    VertexSet vertices; // base labels
    bool acyclic = true;
    int diameter = 0;   // in edges; meaningful only when acyclic
    VertexSet leaves;   // degree one inside the component
};

/// The subgraph induced by the degree-3 vertices, with its components.
struct D3Subgraph {
    Relabeled induced;
    std::vector<D3Component> components;
};

D3Subgraph d3_subgraph(const Graph& g);

struct Transfer {
    int from;
    int to;
    Rational amount;

    bool operator==(const Transfer&) const = default;
};

struct ChargeLedger {
    std::vector<Rational> initial; // 5 - 3d/2
    std::vector<Rational> final;
    std::vector<D3Component> d3_components;
    std::vector<Transfer> transfers;
    int heavy_edges = 0; // both ends of degree >= 4

    Rational initial_total() const;
    Rational final_total() const;
    Rational component_total(const D3Component& c) const;
    /// Vertices of degree >= 4 that end with positive charge.
    std::vector<int> positive_heavy_vertices(const Graph& g) const;
};

class RulesInapplicable : public Error {
public:
    using Error::Error;
};

/// Applies the four rules of the degree-3 discharging scheme. Throws
/// RulesInapplicable when a component of D3 is cyclic or has diameter >= 4.
ChargeLedger discharge(const Graph& g);

struct ChargeIdentityReport {
    Rational charge_total;
    int five_n_minus_three_m = 0;
    int p = 0;
    int t = 0;
    bool holds = false;
};

/// Sum of 5 - 3d(v)/2 against 5n - 3m and p(G) + T(G).
ChargeIdentityReport charge_identity_check(const Graph& g);

} // namespace critgraph
