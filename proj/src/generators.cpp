#include "generators.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace igp {

namespace {

std::vector<NodeId> numbered_ids(int n) {
    int width = 1;
    for (int x = n - 1; x >= 10; x /= 10) ++width;
    std::vector<NodeId> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string digits = std::to_string(i);
        ids.push_back("n" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits);
    }
    return ids;
}

// near-equal block sizes: the first n%k blocks take the extra node
std::vector<int> block_sizes(int n, int k) {
    std::vector<int> sizes(static_cast<std::size_t>(k), n / k);
    for (int i = 0; i < n % k; ++i) ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

}  // namespace

Graph gen_planted(int n, int k_true, double p_in, double p_out, std::uint64_t seed) {
    if (n < 1)
        throw Error(ErrorCode::Validation, "node count must be at least 1");
    if (k_true < 1 || k_true > n)
        throw Error(ErrorCode::Validation, "block count must be in 1..n");
    if (!(p_out >= 0.0) || !(p_in <= 1.0) || !(p_out <= p_in))
        throw Error(ErrorCode::Validation,
                    "probabilities must satisfy 0 <= p_out <= p_in <= 1");

    auto ids = numbered_ids(n);
    std::vector<int> block_of(static_cast<std::size_t>(n));
    {
        int next = 0, b = 0;
        for (int size : block_sizes(n, k_true)) {
            for (int i = 0; i < size; ++i) block_of[static_cast<std::size_t>(next++)] = b;
            ++b;
        }
    }

    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double p = block_of[static_cast<std::size_t>(i)] == block_of[static_cast<std::size_t>(j)]
                           ? p_in
                           : p_out;
            if (rng.bernoulli(p))
                edges.emplace_back(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
        }
    }
    return Graph::from_edges(edges, ids);
}

Graph gen_scale_free(int n, int attach, std::uint64_t seed) {
    if (n < 2)
        throw Error(ErrorCode::Validation, "node count must be at least 2");
    if (attach < 1 || attach >= n)
        throw Error(ErrorCode::Validation, "attach count must be in 1..n-1");

    auto ids = numbered_ids(n);
    Rng rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<int> endpoint_pool;  // each node repeated once per incident edge

    // node `attach` wires to all earlier nodes, giving every seed node degree 1
    for (int t = 0; t < attach; ++t) {
        edges.emplace_back(ids[static_cast<std::size_t>(attach)], ids[static_cast<std::size_t>(t)]);
        endpoint_pool.push_back(attach);
        endpoint_pool.push_back(t);
    }
    std::vector<int> chosen;
    for (int v = attach + 1; v < n; ++v) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < attach) {
            int t = endpoint_pool[rng.index(endpoint_pool.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
        }
        for (int t : chosen) {
            edges.emplace_back(ids[static_cast<std::size_t>(v)], ids[static_cast<std::size_t>(t)]);
            endpoint_pool.push_back(v);
            endpoint_pool.push_back(t);
        }
    }
    return Graph::from_edges(edges, ids);
}

PlantedParams calibrate_planted(int n, int k_true, double target_avg_degree, double ratio) {
    if (n < 2 || k_true < 1 || k_true > n)
        throw Error(ErrorCode::Validation, "need n >= 2 and 1 <= k_true <= n");
    if (!(target_avg_degree > 0.0) || !(ratio >= 1.0))
        throw Error(ErrorCode::Validation, "need target_avg_degree > 0 and ratio >= 1");

    double sum_sq = 0;
    for (int size : block_sizes(n, k_true)) sum_sq += static_cast<double>(size) * size;
    double expected_in = (sum_sq - n) / n;  // average same-block peers per node

    PlantedParams p;
    p.p_out = target_avg_degree / (ratio * expected_in + (n - 1 - expected_in));
    p.p_in = ratio * p.p_out;
    if (p.p_in > 1.0 || p.p_out < 0.0)
        throw Error(ErrorCode::Infeasible, "target average degree is unreachable at this ratio");
    return p;
}

}  // namespace igp
