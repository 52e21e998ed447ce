#include "assignment.hpp"

#include <algorithm>

namespace igp {

int capacity_for(long long node_count, long long k) {
    if (k < 1)
        throw Error(ErrorCode::Validation, "room count K must be at least 1 (got " + std::to_string(k) + ")");
    if (node_count < 0)
        throw Error(ErrorCode::InvalidArgument, "negative node count");
    return static_cast<int>((node_count + k - 1) / k);
}

Assignment::Assignment(int k, int s, std::map<NodeId, int> rooms)
    : k_(k), s_(s), rooms_(std::move(rooms)) {
    if (k_ < 1)
        throw Error(ErrorCode::Validation, "room count K must be at least 1 (got " + std::to_string(k_) + ")");
    if (s_ < 1)
        throw Error(ErrorCode::Validation, "room capacity S must be at least 1 (got " + std::to_string(s_) + ")");
    for (const auto& [id, room] : rooms_) {
        if (room < 0 || room >= k_)
            throw Error(ErrorCode::Validation,
                        "room index " + std::to_string(room + 1) + " for node '" + id +
                            "' is outside 1.." + std::to_string(k_));
    }
}

Assignment Assignment::for_graph(const Graph& g, int k, int s, const std::vector<int>& room_of) {
    std::map<NodeId, int> rooms;
    for (int v = 0; v < g.node_count(); ++v)
        rooms.emplace(g.id_of(v), room_of[static_cast<std::size_t>(v)]);
    return Assignment(k, s, std::move(rooms));
}

std::optional<int> Assignment::room_of(const NodeId& id) const {
    auto it = rooms_.find(id);
    if (it == rooms_.end()) return std::nullopt;
    return it->second;
}

std::vector<long long> Assignment::room_sizes() const {
    std::vector<long long> sizes(static_cast<std::size_t>(k_), 0);
    for (const auto& [id, room] : rooms_) ++sizes[static_cast<std::size_t>(room)];
    return sizes;
}

void Assignment::apply_move(const NodeId& id, int new_room) {
    auto it = rooms_.find(id);
    if (it == rooms_.end())
        throw Error(ErrorCode::Validation, "node '" + id + "' is not assigned");
    if (new_room < 0 || new_room >= k_)
        throw Error(ErrorCode::Validation, "room index " + std::to_string(new_room + 1) +
                                               " is outside 1.." + std::to_string(k_));
    if (it->second == new_room)
        throw Error(ErrorCode::Validation, "node '" + id + "' is already in room " +
                                               std::to_string(new_room + 1) + "; not a move");
    it->second = new_room;
}

namespace {

// Rooms of graph nodes as a dense vector, -1 for unassigned. Throws in
// strict mode when coverage is not exact.
std::vector<int> dense_rooms(const Graph& g, const Assignment& a, bool strict) {
    if (strict) {
        for (const auto& [id, room] : a.rooms()) {
            if (g.index_of(id) < 0)
                throw Error(ErrorCode::Validation, "assignment references unknown node '" + id + "'");
        }
    }
    std::vector<int> room_of(static_cast<std::size_t>(g.node_count()), -1);
    for (int v = 0; v < g.node_count(); ++v) {
        auto room = a.room_of(g.id_of(v));
        if (room) {
            room_of[static_cast<std::size_t>(v)] = *room;
        } else if (strict) {
            throw Error(ErrorCode::Validation, "assignment is missing node '" + g.id_of(v) + "'");
        }
    }
    return room_of;
}

ObjectiveReport count_links(const Graph& g, const Assignment& a, const std::vector<int>& room_of) {
    ObjectiveReport rep;
    rep.per_room_links.assign(static_cast<std::size_t>(a.k()), 0);
    for (int u = 0; u < g.node_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;  // each edge once
            int ru = room_of[static_cast<std::size_t>(u)];
            int rv = room_of[static_cast<std::size_t>(v)];
            if (ru >= 0 && ru == rv)
                ++rep.per_room_links[static_cast<std::size_t>(ru)];
            else
                ++rep.inter_links;
        }
    }
    for (long long c : rep.per_room_links) rep.intra_links += c;
    return rep;
}

}  // namespace

ObjectiveReport objective(const Graph& g, const Assignment& a) {
    return count_links(g, a, dense_rooms(g, a, /*strict=*/true));
}

ObjectiveReport objective_lenient(const Graph& g, const Assignment& a) {
    return count_links(g, a, dense_rooms(g, a, /*strict=*/false));
}

int neighbors_in_room(const Graph& g, const Assignment& a, const NodeId& v, int room) {
    int vi = g.index_of(v);
    if (vi < 0)
        throw Error(ErrorCode::Validation, "unknown node '" + v + "'");
    if (room < 0 || room >= a.k())
        throw Error(ErrorCode::Validation, "room index " + std::to_string(room + 1) +
                                               " is outside 1.." + std::to_string(a.k()));
    int count = 0;
    for (int w : g.neighbors(vi)) {
        auto r = a.room_of(g.id_of(w));
        if (r && *r == room) ++count;
    }
    return count;
}

MoveDelta delta_move(const Graph& g, const Assignment& a, const NodeId& v, int room) {
    auto current = a.room_of(v);
    if (g.index_of(v) < 0 || !current)
        throw Error(ErrorCode::Validation, "node '" + v + "' is not an assigned graph node");
    if (room < 0 || room >= a.k())
        throw Error(ErrorCode::Validation, "room index " + std::to_string(room + 1) +
                                               " is outside 1.." + std::to_string(a.k()));
    if (*current == room)
        throw Error(ErrorCode::Validation, "node '" + v + "' already occupies room " +
                                               std::to_string(room + 1) + "; not a move");
    MoveDelta d;
    d.delta = neighbors_in_room(g, a, v, room) - neighbors_in_room(g, a, v, *current);
    d.feasible = a.room_sizes()[static_cast<std::size_t>(room)] < a.s();
    return d;
}

std::string Violation::message() const {
    switch (kind) {
        case ViolationKind::UncoveredNode:
            return "node '" + node + "' has no room";
        case ViolationKind::UnknownNode:
            return "assigned node '" + node + "' is not in the graph";
        case ViolationKind::OverCapacity:
            return "room " + std::to_string(room + 1) + " holds " + std::to_string(size) +
                   " nodes, capacity " + std::to_string(cap);
    }
    return "unknown violation";
}

std::vector<Violation> validate(const Graph& g, const Assignment& a) {
    std::vector<Violation> out;
    for (int v = 0; v < g.node_count(); ++v) {
        if (!a.room_of(g.id_of(v)))
            out.push_back({ViolationKind::UncoveredNode, g.id_of(v), -1, 0, 0});
    }
    for (const auto& [id, room] : a.rooms()) {
        if (g.index_of(id) < 0)
            out.push_back({ViolationKind::UnknownNode, id, -1, 0, 0});
    }
    auto sizes = a.room_sizes();
    for (int r = 0; r < a.k(); ++r) {
        if (sizes[static_cast<std::size_t>(r)] > a.s())
            out.push_back({ViolationKind::OverCapacity, "", r, sizes[static_cast<std::size_t>(r)], a.s()});
    }
    return out;
}

}  // namespace igp
