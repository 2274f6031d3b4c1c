#include "critgraph/named.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "critgraph/error.hpp"

namespace critgraph {

Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw Error("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            g.add_edge(u, a + v);
    return g;
}

Graph star_graph(int leaves)
{
    return complete_bipartite(1, leaves);
}

// Rim 0..rim-1, hub last.
Graph wheel_graph(int rim)
{
    Graph g = cycle_graph(rim);
    const int hub = g.add_vertex();
    for (int i = 0; i < rim; ++i)
        g.add_edge(i, hub);
    return g;
}

Graph petersen_graph()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

namespace {

// Two K4's composed: x=0, y=1, a=2, b=3, c=4, d=5, e=6.
Graph h7()
{
    return Graph(7, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {0, 4}, {1, 5}, {1, 6}});
}

// Vertices follow the drawing: 0=(40,0) 1=(60,0) 2=(50,10) 3=(40,20)
// 4=(50,20) 5=(60,20) 6=(45,30) 7=(55,30).
Graph t8()
{
    return Graph(8, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 6}, {6, 7}, {3, 7}, {2, 4}, {4, 6}, {5, 6}, {1, 5}, {4, 7}, {5, 7}});
}

// T8 with the bottom edge replaced by the four points (120,0), (125,-3),
// (125,3) as vertices 8, 9, 10.
Graph t11()
{
    return Graph(11, {{0, 8}, {8, 10}, {9, 10}, {1, 9}, {8, 9}, {1, 10}, {1, 2}, {0, 2}, {0, 3}, {3, 6}, {6, 7},
                      {3, 7}, {2, 4}, {4, 6}, {5, 6}, {1, 5}, {4, 7}, {5, 7}});
}

// 0=(0,0) 1=(40,0) 2=(10,10) 3=(30,10) 4=(0,20) 5=(40,20) 6=a=(20,20)
// 7=u=(20,30) 8=b=(20,40). Polylines through collinear points are broken
// at every point they pass.
Graph h7_gadget()
{
    return Graph(9, {{0, 1}, {1, 3}, {3, 6}, {2, 6}, {0, 2}, {0, 4}, {4, 8}, {5, 8}, {1, 5}, {2, 4}, {3, 5}, {6, 7},
                     {7, 8}});
}

std::string upper(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

std::optional<int> parse_cycle_length(const std::string& name)
{
    std::string_view digits;
    if (name.starts_with("CYCLE(") && name.ends_with(")"))
        digits = std::string_view(name).substr(6, name.size() - 7);
    else if (name.size() > 1 && name[0] == 'C' && std::isdigit(static_cast<unsigned char>(name[1])))
        digits = std::string_view(name).substr(1);
    else
        return std::nullopt;
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        return std::nullopt;
    return k;
}

} // namespace

const std::vector<std::string>& fixed_graph_names()
{
    static const std::vector<std::string> names{"K4", "W5", "H7", "T8", "T11", "H7_GADGET", "PETERSEN"};
    return names;
}

NamedGraph construct_named(std::string_view raw)
{
    const std::string name = upper(raw);
    if (name == "K4")
        return {name, complete_graph(4), {}};
    if (name == "W5")
        return {name, wheel_graph(5), {{"hub", 5}}};
    if (name == "H7")
        return {name, h7(), {{"x", 0}, {"y", 1}, {"degree4", 1}}};
    if (name == "T8")
        return {name, t8(), {{"degree4_a", 6}, {"degree4_b", 7}}};
    if (name == "T11")
        return {name, t11(), {{"degree4_a", 1}, {"degree4_b", 6}, {"degree4_c", 7}}};
    if (name == "H7_GADGET")
        return {name, h7_gadget(), {{"end", 7}, {"a", 6}, {"b", 8}}};
    if (name == "PETERSEN")
        return {name, petersen_graph(), {}};
    if (auto k = parse_cycle_length(name)) {
        if (*k < 3 || *k > kMaxVertices)
            throw Error("cycle length must lie in [3, 64]");
        return {"CYCLE(" + std::to_string(*k) + ")", cycle_graph(*k), {}};
    }
    throw Error("unknown graph name '" + std::string(raw) + "'");
}

} // namespace critgraph
