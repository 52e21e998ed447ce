#include "graph.hpp"

#include <algorithm>
#include <set>

namespace igp {

Graph Graph::from_edges(const std::vector<std::pair<NodeId, NodeId>>& edges,
                        const std::vector<NodeId>& isolated) {
    std::set<NodeId> names;
    for (const auto& [a, b] : edges) {
        if (a.empty() || b.empty())
            throw Error(ErrorCode::Validation, "edge with empty node id");
        if (a == b)
            throw Error(ErrorCode::Validation, "self-loop edge (" + a + ", " + b + ")");
        names.insert(a);
        names.insert(b);
    }
    for (const auto& id : isolated) {
        if (id.empty())
            throw Error(ErrorCode::Validation, "empty node id");
        names.insert(id);
    }

    Graph g;
    g.ids_.assign(names.begin(), names.end());
    g.index_.reserve(g.ids_.size());
    for (int i = 0; i < static_cast<int>(g.ids_.size()); ++i)
        g.index_.emplace(g.ids_[static_cast<std::size_t>(i)], i);
    g.adj_.resize(g.ids_.size());

    std::set<std::pair<int, int>> dedup;
    for (const auto& [a, b] : edges) {
        int u = g.index_.at(a);
        int v = g.index_.at(b);
        if (u > v) std::swap(u, v);
        dedup.emplace(u, v);
    }
    for (const auto& [u, v] : dedup) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.edge_count_ = static_cast<long long>(dedup.size());
    return g;
}

int Graph::index_of(const NodeId& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::string GraphStats::avg_degree_str() const {
    if (!avg_degree_defined) return "undefined";
    // integer half-up rounding at the third decimal
    long long scaled = avg_degree_num * 1000 + avg_degree_den / 2;
    long long milli = scaled / avg_degree_den;
    std::string whole = std::to_string(milli / 1000);
    long long frac = milli % 1000;
    std::string f = std::to_string(frac);
    return whole + "." + std::string(3 - f.size(), '0') + f;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.node_count = g.node_count();
    s.link_count = g.edge_count();
    if (s.node_count > 0) {
        s.avg_degree_defined = true;
        s.avg_degree_num = 2 * s.link_count;
        s.avg_degree_den = s.node_count;
    }
    // component count by iterative DFS; isolated nodes are singletons
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<int> stack;
    for (int v = 0; v < g.node_count(); ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        ++s.components;
        stack.push_back(v);
        seen[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return s;
}

}  // namespace igp
