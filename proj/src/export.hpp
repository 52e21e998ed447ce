#pragma once

#include <optional>
#include <string>

#include "assignment.hpp"
#include "graph.hpp"

namespace igp {

/// Graphviz DOT document. When an assignment is given, every node carries a
/// `room` attribute and a per-room HSV fill color (distinct hue per room).
std::string export_dot(const Graph& g, const Assignment* a);

/// GraphML document with a `room` node attribute plus graph-level K and S,
/// so an assignment round-trips with the topology.
std::string export_graphml(const Graph& g, const Assignment* a);

struct GraphmlData {
    Graph graph;
    std::optional<Assignment> assignment;  // present when any room data exists
};

/// Reads the GraphML subset this library writes (plain nodes, undirected
/// edges, int data keys). Not a general XML parser.
GraphmlData import_graphml(const std::string& text);

}  // namespace igp
