#pragma once

#include "assignment.hpp"
#include "graph.hpp"

namespace igp {

inline constexpr int kExactDefaultBound = 12;

struct ExactResult {
    Assignment assignment;
    long long objective = 0;
};

/// Globally optimal assignment by exhaustive search over capacity-feasible
/// partitions. Room labels are canonicalized (a node may only open the next
/// unused room), which removes the K! relabeling symmetry, and branches
/// that already cost at least the incumbent are cut; neither prune can lose
/// the optimum. Instances above max_nodes are refused.
ExactResult exact(const Graph& g, int k, int max_nodes = kExactDefaultBound);

}  // namespace igp
