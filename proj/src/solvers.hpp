#pragma once

#include <cstdint>
#include <vector>

#include "assignment.hpp"
#include "graph.hpp"

namespace igp {

struct SolverConfig {
    int k = 0;              // room count (ignored by adjustment runs, which take it from the start assignment)
    std::uint64_t seed = 0; // drives every tie-break
};

struct AdjustPlan {
    long long m = 0;              // move budget and virtual-queue size
    bool stop_on_no_gain = true;  // stop when the best queue-wide delta is >= 0
    bool allow_requeue = false;   // let moved nodes re-enter the refill pool
};

/// One relocation (or initial placement, from_room < 0). delta is the exact
/// change in intra-room links caused by the move.
struct MoveRecord {
    NodeId node;
    int from_room = -1;
    int to_room = 0;
    long long delta = 0;
};

struct CurvePoint {
    long long adjustments_done = 0;
    long long objective = 0;
};

enum class StopReason {
    BudgetExhausted,
    NoImprovingFeasibleMove,
    QueueEmpty,
};

const char* stop_reason_name(StopReason r);

struct SolveResult {
    Assignment assignment;
    std::vector<MoveRecord> log;
    long long objective = 0;
    std::vector<CurvePoint> curve;  // filled by adjustment runs; begins at (0, f(start))
    StopReason stop = StopReason::BudgetExhausted;
};

/// Hub-first assignment: nodes in descending degree order (ties by id),
/// each placed into the non-full room holding the fewest of its neighbors;
/// equal-cost rooms are drawn with the seeded RNG. O(|E| + nK).
SolveResult hfa(const Graph& g, const SolverConfig& cfg);

/// Local greedy adjustment from a valid start: keeps a virtual queue of the
/// nodes with the most intra-room links, each step relocating the queue
/// member with the steepest feasible drop, then refilling the queue from
/// the not-yet-moved pool. Executes at most plan.m moves and never applies
/// a move that would increase the objective. O(mn) with degree-local
/// bookkeeping.
SolveResult lga(const Graph& g, const Assignment& start, const AdjustPlan& plan,
                const SolverConfig& cfg);

/// Uniformly random capacity-feasible assignment (exact uniformity over all
/// feasible maps, via occupancy-profile sampling).
SolveResult random_baseline(const Graph& g, int k, std::uint64_t seed);

/// The adjustment curve: objective after each executed move of an lga run
/// with budget m_max, starting at (0, f(start)). Non-increasing.
std::vector<CurvePoint> curve(const Graph& g, const Assignment& start, long long m_max,
                              const SolverConfig& cfg);

}  // namespace igp
