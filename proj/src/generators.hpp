#pragma once

#include <cstdint>

#include "graph.hpp"

namespace igp {

/// Planted-partition graph: n nodes in k_true near-equal blocks, each
/// within-block pair linked with probability p_in and each cross-block pair
/// with p_out. Node ids are zero-padded decimals, so lexicographic order is
/// block order. Fully determined by the seed.
Graph gen_planted(int n, int k_true, double p_in, double p_out, std::uint64_t seed);

/// Preferential-attachment graph: each new node attaches to `attach`
/// distinct existing nodes chosen proportionally to degree. Connected by
/// construction. Fully determined by the seed.
Graph gen_scale_free(int n, int attach, std::uint64_t seed);

struct PlantedParams {
    double p_in = 0;
    double p_out = 0;
};

/// Solves the expected-degree equation for a planted-partition graph with a
/// fixed p_in/p_out ratio:
///   <k> = p_out * (ratio * E_b + (n - 1 - E_b)),  E_b = (sum b_i^2 - n) / n
/// where b_i are the near-equal block sizes. Returns the (p_in, p_out) that
/// hits target_avg_degree in expectation.
PlantedParams calibrate_planted(int n, int k_true, double target_avg_degree, double ratio);

/// Ratio used for the detention-like benchmark presets; chosen with
/// scripts/calibrate_planted.py so that greedy allocation on the synthetic
/// networks behaves like the reported runs on the private ones.
inline constexpr double kPlantedDefaultRatio = 12.0;

}  // namespace igp
