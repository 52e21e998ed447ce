#include "exact.hpp"

#include <limits>

namespace igp {

namespace {

struct Search {
    const Graph& g;
    int k;
    int cap;
    int n;
    std::vector<int> room_of;
    std::vector<int> size;
    int rooms_open = 0;
    long long cost = 0;
    long long best_cost = std::numeric_limits<long long>::max();
    std::vector<int> best_rooms;

    void place(int v) {
        if (v == n) {
            if (cost < best_cost) {
                best_cost = cost;
                best_rooms = room_of;
            }
            return;
        }
        if (cost >= best_cost) return;  // objective only grows with more nodes
        int limit = std::min(rooms_open + 1, k);  // opening room `rooms_open` covers all relabelings
        for (int r = 0; r < limit; ++r) {
            if (size[static_cast<std::size_t>(r)] >= cap) continue;
            long long added = 0;
            for (int w : g.neighbors(v))
                if (w < v && room_of[static_cast<std::size_t>(w)] == r) ++added;
            room_of[static_cast<std::size_t>(v)] = r;
            ++size[static_cast<std::size_t>(r)];
            cost += added;
            int prev_open = rooms_open;
            if (r == rooms_open) ++rooms_open;
            place(v + 1);
            rooms_open = prev_open;
            cost -= added;
            --size[static_cast<std::size_t>(r)];
            room_of[static_cast<std::size_t>(v)] = -1;
        }
    }
};

}  // namespace

ExactResult exact(const Graph& g, int k, int max_nodes) {
    if (k < 1)
        throw Error(ErrorCode::Validation, "room count K must be at least 1 (got " + std::to_string(k) + ")");
    if (k > g.node_count())
        throw Error(ErrorCode::Infeasible, "K = " + std::to_string(k) + " exceeds the node count " +
                                               std::to_string(g.node_count()));
    if (g.node_count() > max_nodes)
        throw Error(ErrorCode::Bound, "graph has " + std::to_string(g.node_count()) +
                                          " nodes; the exhaustive solver is bounded at " +
                                          std::to_string(max_nodes) + " nodes");

    Search s{g, k, capacity_for(g.node_count(), k), g.node_count(),
             std::vector<int>(static_cast<std::size_t>(g.node_count()), -1),
             std::vector<int>(static_cast<std::size_t>(k), 0)};
    s.place(0);

    return {Assignment::for_graph(g, k, s.cap, s.best_rooms), s.best_cost};
}

}  // namespace igp
