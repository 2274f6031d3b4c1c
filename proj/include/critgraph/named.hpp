#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

struct NamedGraph {
    std::string name;
    Graph graph;
    std::map<std::string, int> roles;
};

/// Accepted names: K4, W5, H7, T8, T11, H7_GADGET, PETERSEN, CYCLE(k).
/// Names are case-insensitive; Ck is accepted as shorthand for CYCLE(k).
NamedGraph construct_named(std::string_view name);

/// The fixed names (everything except the CYCLE family).
const std::vector<std::string>& fixed_graph_names();

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph wheel_graph(int rim);
Graph petersen_graph();

} // namespace critgraph
