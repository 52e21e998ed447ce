#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace igp {

/// Smallest integer not less than node_count / k.
int capacity_for(long long node_count, long long k);

/// A total room assignment: node id -> room index. Rooms are 0-based here
/// and 1-based in every serialized form. Coverage and capacity are checked
/// by validate(), not by construction; room indices must be in [0, K).
///
/// Thread model: read-only after construction except for apply_move, which
/// requires exclusive access.
class Assignment {
public:
    Assignment(int k, int s, std::map<NodeId, int> rooms);

    /// Dense builder for solver output: room_of[i] is the room of g.ids()[i].
    static Assignment for_graph(const Graph& g, int k, int s, const std::vector<int>& room_of);

    int k() const { return k_; }
    int s() const { return s_; }
    const std::map<NodeId, int>& rooms() const { return rooms_; }

    std::optional<int> room_of(const NodeId& id) const;

    /// Occupancy per room, counted over every entry in the map.
    std::vector<long long> room_sizes() const;

    /// Relocates one node. The node must already be assigned and the target
    /// must differ from its current room. Capacity is not enforced here.
    void apply_move(const NodeId& id, int new_room);

    bool operator==(const Assignment& other) const = default;

private:
    int k_;
    int s_;
    std::map<NodeId, int> rooms_;
};

struct ObjectiveReport {
    long long intra_links = 0;
    long long inter_links = 0;
    std::vector<long long> per_room_links;  // one entry per room
};

/// Eq-style objective: per-room counts of edges with both endpoints in the
/// room. The assignment must cover exactly the nodes of g.
ObjectiveReport objective(const Graph& g, const Assignment& a);

/// Same counts, but tolerant of uncovered or unknown nodes: an edge is
/// intra-room only when both endpoints are assigned to the same room.
/// Used for reporting on invalid assignments.
ObjectiveReport objective_lenient(const Graph& g, const Assignment& a);

/// |Gamma_k(v)|: how many neighbors of v are currently assigned to room k.
int neighbors_in_room(const Graph& g, const Assignment& a, const NodeId& v, int room);

struct MoveDelta {
    long long delta = 0;   // change in intra_links if the move were applied
    bool feasible = true;  // false when the target room is at capacity
};

/// Signed objective change for relocating v to `room`, plus feasibility.
MoveDelta delta_move(const Graph& g, const Assignment& a, const NodeId& v, int room);

enum class ViolationKind {
    UncoveredNode,  // graph node missing from the assignment
    UnknownNode,    // assigned id that is not a graph node
    OverCapacity,   // room with more than S occupants
};

struct Violation {
    ViolationKind kind;
    NodeId node;          // for node violations
    int room = -1;        // for capacity violations (0-based)
    long long size = 0;   // occupancy found
    long long cap = 0;    // capacity S

    std::string message() const;
};

/// Empty result iff every node of g is assigned and no room exceeds S.
std::vector<Violation> validate(const Graph& g, const Assignment& a);

}  // namespace igp
