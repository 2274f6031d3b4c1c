#include "critgraph/discharging.hpp"

#include <algorithm>

#include "critgraph/potential.hpp"

namespace critgraph {

std::string to_string(const Rational& q)
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

int eccentricity(const Graph& g, VertexSet comp, int root)
{
    VertexSet seen{root};
    VertexSet frontier{root};
    int depth = 0;
    while (true) {
        VertexSet next;
        for (int v : frontier)
            next |= g.neighbors(v) & comp;
        next -= seen;
        if (next.empty())
            return depth;
        seen |= next;
        frontier = next;
        ++depth;
    }
}

} // namespace

D3Subgraph d3_subgraph(const Graph& g)
{
    VertexSet cubic;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 3)
            cubic.insert(v);
    D3Subgraph out{induced_subgraph(g, cubic), {}};

    for (VertexSet local : components(out.induced.graph)) {
        D3Component c;
        for (int v : local)
            c.vertices.insert(out.induced.to_old[v]);
        int edges = 0;
        for (int v : c.vertices) {
            const int inner = (g.neighbors(v) & c.vertices).size();
            edges += inner;
            if (inner == 1)
                c.leaves.insert(v);
        }
        edges /= 2;
        c.acyclic = edges == c.vertices.size() - 1;
        if (c.acyclic)
            for (int v : c.vertices)
                c.diameter = std::max(c.diameter, eccentricity(g, c.vertices, v));
        out.components.push_back(c);
    }
    return out;
}

Rational ChargeLedger::initial_total() const
{
    Rational sum = 0;
    for (const auto& q : initial)
        sum += q;
    return sum;
}

Rational ChargeLedger::final_total() const
{
    Rational sum = 0;
    for (const auto& q : final)
        sum += q;
    return sum;
}

Rational ChargeLedger::component_total(const D3Component& c) const
{
    Rational sum = 0;
    for (int v : c.vertices)
        sum += final[v];
    return sum;
}

std::vector<int> ChargeLedger::positive_heavy_vertices(const Graph& g) const
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 4 && final[v] > Rational(0))
            out.push_back(v);
    return out;
}

ChargeLedger discharge(const Graph& g)
{
    ChargeLedger ledger;
    ledger.d3_components = d3_subgraph(g).components;
    for (const auto& c : ledger.d3_components) {
        if (!c.acyclic)
            throw RulesInapplicable("rules inapplicable: D3 component containing vertex " +
                                    std::to_string(c.vertices.front()) + " is cyclic");
        if (c.diameter >= 4)
            throw RulesInapplicable("rules inapplicable: D3 component containing vertex " +
                                    std::to_string(c.vertices.front()) + " has diameter " +
                                    std::to_string(c.diameter));
    }

    for (int v = 0; v < g.order(); ++v)
        ledger.initial.push_back(Rational(5) - Rational(3, 2) * g.degree(v));
    for (const Edge& e : g.edges())
        if (g.degree(e.u) >= 4 && g.degree(e.v) >= 4)
            ++ledger.heavy_edges;

    for (const auto& c : ledger.d3_components) {
        for (int v : c.vertices) {
            const bool leaf = c.leaves.contains(v);
            Rational amount;
            bool to_everyone = false;
            if (c.vertices.size() == 1) {
                amount = Rational(1, 6);
                to_everyone = true;
            } else if (c.vertices.size() == 2) {
                amount = Rational(1, 4);
            } else if (c.diameter == 2) {
                amount = leaf ? Rational(1, 3) : Rational(1, 6);
            } else {
                amount = leaf ? Rational(3, 8) : Rational(1, 4);
            }
            for (int w : g.neighbors(v))
                if (to_everyone || g.degree(w) >= 4)
                    ledger.transfers.push_back({v, w, amount});
        }
    }
    std::sort(ledger.transfers.begin(), ledger.transfers.end(),
              [](const Transfer& a, const Transfer& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });

    ledger.final = ledger.initial;
    for (const auto& t : ledger.transfers) {
        ledger.final[t.from] -= t.amount;
        ledger.final[t.to] += t.amount;
    }
    return ledger;
}

ChargeIdentityReport charge_identity_check(const Graph& g)
{
    ChargeIdentityReport r;
    for (int v = 0; v < g.order(); ++v)
        r.charge_total += Rational(5) - Rational(3, 2) * g.degree(v);
    r.five_n_minus_three_m = 5 * g.order() - 3 * g.size();
    r.t = t_number(g).size();
    r.p = potential_value(g);
    r.holds = r.charge_total == Rational(r.five_n_minus_three_m) && r.charge_total == Rational(r.p + r.t);
    return r;
}

} // namespace critgraph
