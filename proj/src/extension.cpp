#include "critgraph/extension.hpp"

#include "critgraph/error.hpp"
#include "critgraph/potential.hpp"

namespace critgraph {

namespace {

// Color of each vertex of R in base labels, 0 outside R.
std::vector<int> base_colors(const Graph& g, VertexSet r, const Coloring& phi)
{
    if (static_cast<int>(phi.colors.size()) != r.size())
        throw Error("phi must color exactly the vertices of R");
    std::vector<int> out(static_cast<std::size_t>(g.order()), 0);
    int i = 0;
    for (int v : r) {
        const int c = phi.colors[i++];
        if (c < 1 || c > 3)
            throw Error("phi uses a color outside 1..3");
        out[v] = c;
    }
    for (int v : r)
        for (int w : g.neighbors(v) & r)
            if (out[v] == out[w])
                throw Error("phi is not a proper coloring of G[R]");
    return out;
}

int choose2(int k)
{
    return k * (k - 1) / 2;
}

} // namespace

PhiIdentification phi_identification(const Graph& g, VertexSet r, const Coloring& phi)
{
    if (!r.subset_of(g.vertices()) || r == g.vertices())
        throw Error("phi_identification: R must be a proper subset of V(G)");
    if (r.size() < 4)
        throw Error("phi_identification: |R| must be at least 4");
    const std::vector<int> color = base_colors(g, r, phi);
    const int n = g.order();

    Graph work = g;
    for (int i = 0; i < 3; ++i)
        work.add_vertex();
    std::vector<int> label(static_cast<std::size_t>(n + 3));
    for (int v = 0; v < n + 3; ++v)
        label[v] = v;

    for (int c = 1; c <= 3; ++c) {
        VertexSet cls{label[n + c - 1]};
        for (int v : r)
            if (color[v] == c)
                cls.insert(label[v]);
        Relabeled merged = identify_vertices(work, cls);
        for (int& l : label)
            l = merged.to_new[l];
        work = std::move(merged.graph);
    }

    PhiIdentification out;
    out.triangle = {label[n], label[n + 1], label[n + 2]};
    work.add_edge(out.triangle[0], out.triangle[1]);
    work.add_edge(out.triangle[0], out.triangle[2]);
    work.add_edge(out.triangle[1], out.triangle[2]);
    out.base_to_identified.assign(label.begin(), label.begin() + n);
    out.identified_to_base.assign(static_cast<std::size_t>(work.order()), -1);
    for (int v : g.vertices() - r)
        out.identified_to_base[label[v]] = v;
    out.graph = std::move(work);
    return out;
}

ExtensionRecord critical_extension(const Graph& g, VertexSet r, const Coloring& phi)
{
    ExtensionRecord rec;
    rec.base = g;
    rec.r = r;
    rec.phi = phi;
    rec.identified = phi_identification(g, r, phi);
    rec.extender = critical_subgraph(rec.identified.graph);
    const std::vector<int> color = base_colors(g, r, phi);

    VertexSet w_vertices; // V(W) in identified labels
    for (int v : rec.extender.to_old)
        w_vertices.insert(v);
    for (int c = 1; c <= 3; ++c)
        if (w_vertices.contains(rec.identified.triangle[c - 1]))
            rec.core.push_back(c);

    VertexSet outside; // V(W) - V(T) in base labels
    for (int v : w_vertices)
        if (rec.identified.identified_to_base[v] >= 0)
            outside.insert(rec.identified.identified_to_base[v]);
    rec.r_prime = r | outside;

    VertexSet core_classes;
    for (int v : r)
        for (int c : rec.core)
            if (color[v] == c)
                core_classes.insert(v);

    rec.complete = true;
    for (int b : outside)
        if ((g.neighbors(b) & r).size() > (g.neighbors(b) & core_classes).size())
            rec.complete = false;
    for (int b : outside) {
        for (int b2 : g.neighbors(b) & outside) {
            const int wb = rec.extender.to_new[rec.identified.base_to_identified[b]];
            const int wb2 = rec.extender.to_new[rec.identified.base_to_identified[b2]];
            if (!rec.extender.graph.adjacent(wb, wb2))
                rec.complete = false;
        }
    }
    rec.spanning = rec.r_prime == g.vertices();
    rec.total = rec.complete && rec.spanning;
    return rec;
}

int core_penalty(int core_size)
{
    return 5 * core_size - 3 * choose2(core_size);
}

ExtensionBounds check_extension_bounds(const ExtensionRecord& rec)
{
    ExtensionBounds b;
    const Graph& w = rec.extender.graph;
    const int x = rec.core_size();

    VertexSet core_in_w;
    for (int c : rec.core)
        core_in_w.insert(rec.extender.to_new[rec.identified.triangle[c - 1]]);

    const Graph g_r = induced_subgraph(rec.base, rec.r).graph;
    const Graph g_r_prime = induced_subgraph(rec.base, rec.r_prime).graph;
    b.p_r = potential_value(g_r);
    b.p_r_prime = potential_value(g_r_prime);
    b.p_w = potential_value(w);
    b.f = core_penalty(x);
    b.t_w = t_number(w).size();
    b.t_w_minus_core = t_number(delete_vertices(w, core_in_w)).size();

    b.sharp_bound = b.p_r + b.p_w - b.f + b.t_w - b.t_w_minus_core;
    b.coarse_bound = b.p_r + b.p_w - 3;
    b.sharp_holds = b.p_r_prime <= b.sharp_bound;
    b.coarse_holds = b.p_r_prime <= b.coarse_bound;
    b.sharp_slack = b.sharp_bound - b.p_r_prime;

    b.core_nonempty = x >= 1;
    b.t_drop_within_core = b.t_w - b.t_w_minus_core <= x;
    b.vertex_count_matches = rec.r_prime.size() == rec.r.size() + w.order() - x;
    b.edge_count_bound = g_r_prime.size() >= g_r.size() + w.size() - choose2(x);
    return b;
}

} // namespace critgraph
