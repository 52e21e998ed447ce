#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace igp {

using NodeId = std::string;

/// Undirected, unweighted, loop-free graph over opaque string identifiers.
/// Nodes are held in lexicographic order and addressed internally by dense
/// index; adjacency lists are sorted. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list plus explicitly isolated nodes.
    /// Duplicate and symmetric edge entries collapse to one edge; a
    /// self-loop is a validation error naming the pair.
    static Graph from_edges(const std::vector<std::pair<NodeId, NodeId>>& edges,
                            const std::vector<NodeId>& isolated = {});

    int node_count() const { return static_cast<int>(ids_.size()); }
    long long edge_count() const { return edge_count_; }

    /// Node identifiers in lexicographic order; index i refers to ids()[i].
    const std::vector<NodeId>& ids() const { return ids_; }
    const NodeId& id_of(int v) const { return ids_[static_cast<std::size_t>(v)]; }

    /// Dense index for an id, or -1 when the id is not a node.
    int index_of(const NodeId& id) const;

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(int u, int v) const;

private:
    std::vector<NodeId> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

struct GraphStats {
    long long node_count = 0;
    long long link_count = 0;
    bool avg_degree_defined = false;  // false on the empty graph
    long long avg_degree_num = 0;     // 2|E|
    long long avg_degree_den = 1;     // |V|
    long long components = 0;

    double avg_degree() const {
        return static_cast<double>(avg_degree_num) / static_cast<double>(avg_degree_den);
    }
    /// Rendered to exactly three decimals, half-up, e.g. "22.305".
    std::string avg_degree_str() const;
};

GraphStats stats(const Graph& g);

}  // namespace igp
