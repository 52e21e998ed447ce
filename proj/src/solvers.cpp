#include "solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rng.hpp"

namespace igp {

namespace {

constexpr long long kNoFeasibleMove = std::numeric_limits<long long>::max();

void check_k(const Graph& g, int k) {
    if (k < 1)
        throw Error(ErrorCode::Validation, "room count K must be at least 1 (got " + std::to_string(k) + ")");
    if (k > g.node_count())
        throw Error(ErrorCode::Infeasible, "K = " + std::to_string(k) + " exceeds the node count " +
                                               std::to_string(g.node_count()));
}

std::vector<int> dense_rooms_checked(const Graph& g, const Assignment& a) {
    auto violations = validate(g, a);
    if (!violations.empty())
        throw Error(ErrorCode::Validation, "start assignment is invalid: " + violations.front().message());
    std::vector<int> room_of(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v)
        room_of[static_cast<std::size_t>(v)] = *a.room_of(g.id_of(v));
    return room_of;
}

}  // namespace

const char* stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::BudgetExhausted: return "budget_exhausted";
        case StopReason::NoImprovingFeasibleMove: return "no_improving_feasible_move";
        case StopReason::QueueEmpty: return "queue_empty";
    }
    return "?";
}

SolveResult hfa(const Graph& g, const SolverConfig& cfg) {
    check_k(g, cfg.k);
    const int n = g.node_count();
    const int k = cfg.k;
    const int cap = capacity_for(n, k);
    Rng rng(cfg.seed);

    // hubs first: descending degree, ties by id (ids are index order)
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> room_of(static_cast<std::size_t>(n), -1);
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    std::vector<long long> placed_neighbors(static_cast<std::size_t>(k), 0);
    std::vector<int> best_rooms;

    SolveResult res{Assignment(k, cap, {}), {}, 0, {}, StopReason::BudgetExhausted};
    res.log.reserve(static_cast<std::size_t>(n));
    for (int v : order) {
        std::fill(placed_neighbors.begin(), placed_neighbors.end(), 0);
        for (int w : g.neighbors(v)) {
            int r = room_of[static_cast<std::size_t>(w)];
            if (r >= 0) ++placed_neighbors[static_cast<std::size_t>(r)];
        }
        // full rooms are excluded outright, the "very large value" made exact
        long long best = kNoFeasibleMove;
        best_rooms.clear();
        for (int r = 0; r < k; ++r) {
            if (size[static_cast<std::size_t>(r)] >= cap) continue;
            long long d = placed_neighbors[static_cast<std::size_t>(r)];
            if (d < best) {
                best = d;
                best_rooms.assign(1, r);
            } else if (d == best) {
                best_rooms.push_back(r);
            }
        }
        int target = best_rooms.size() > 1 ? rng.pick(best_rooms) : best_rooms.front();
        room_of[static_cast<std::size_t>(v)] = target;
        ++size[static_cast<std::size_t>(target)];
        res.objective += best;
        res.log.push_back({g.id_of(v), -1, target, best});
    }

    res.assignment = Assignment::for_graph(g, k, cap, room_of);
    return res;
}

namespace {

/// Shared state of one adjustment run. Queue members carry a cached row of
/// per-room neighbor counts so a move only touches entries it can change.
class AdjustRun {
public:
    AdjustRun(const Graph& g, const Assignment& start, const AdjustPlan& plan, std::uint64_t seed)
        : g_(g),
          plan_(plan),
          rng_(seed),
          n_(g.node_count()),
          k_(start.k()),
          cap_(start.s()),
          room_of_(dense_rooms_checked(g, start)),
          room_size_(static_cast<std::size_t>(k_), 0),
          ein_(static_cast<std::size_t>(n_), 0),
          moved_(static_cast<std::size_t>(n_), 0),
          in_queue_(static_cast<std::size_t>(n_), 0),
          gamma_(static_cast<std::size_t>(n_)),
          best_delta_(static_cast<std::size_t>(n_), kNoFeasibleMove),
          best_room_(static_cast<std::size_t>(n_), -1) {
        if (k_ > n_)
            throw Error(ErrorCode::Infeasible,
                        "K = " + std::to_string(k_) + " exceeds the node count " + std::to_string(n_));
        for (int v = 0; v < n_; ++v) ++room_size_[static_cast<std::size_t>(room_of_[static_cast<std::size_t>(v)])];
        for (int v = 0; v < n_; ++v) {
            for (int w : g_.neighbors(v))
                if (w > v && room_of_[static_cast<std::size_t>(v)] == room_of_[static_cast<std::size_t>(w)]) {
                    ++ein_[static_cast<std::size_t>(v)];
                    ++ein_[static_cast<std::size_t>(w)];
                    ++objective_;
                }
        }
        // queue = the min(m, n) nodes with the most intra-room links
        std::vector<int> by_ein(static_cast<std::size_t>(n_));
        std::iota(by_ein.begin(), by_ein.end(), 0);
        std::stable_sort(by_ein.begin(), by_ein.end(),
                         [&](int a, int b) { return ein_[static_cast<std::size_t>(a)] > ein_[static_cast<std::size_t>(b)]; });
        long long q = std::min<long long>(plan_.m, n_);
        for (long long i = 0; i < q; ++i) enqueue(by_ein[static_cast<std::size_t>(i)]);
    }

    SolveResult run(const Assignment& start) {
        SolveResult res{start, {}, objective_, {}, StopReason::BudgetExhausted};
        res.curve.push_back({0, objective_});
        long long moves = 0;
        while (moves < plan_.m) {
            if (queue_.empty()) {
                res.stop = StopReason::QueueEmpty;
                break;
            }
            long long best = kNoFeasibleMove;
            for (int v : queue_) best = std::min(best, best_delta_[static_cast<std::size_t>(v)]);
            bool gate = plan_.stop_on_no_gain ? best >= 0 : best > 0;
            if (best == kNoFeasibleMove || gate) {
                res.stop = StopReason::NoImprovingFeasibleMove;
                break;
            }
            auto [node, target] = pick_move(best);
            int from = room_of_[static_cast<std::size_t>(node)];
            execute(node, target);
            ++moves;
            res.log.push_back({g_.id_of(node), from, target, best});
            res.curve.push_back({moves, objective_});
        }
        res.objective = objective_;
        std::vector<int> rooms = room_of_;
        res.assignment = Assignment::for_graph(g_, k_, cap_, rooms);
        return res;
    }

private:
    bool room_full(int r) const { return room_size_[static_cast<std::size_t>(r)] >= cap_; }

    void enqueue(int v) {
        in_queue_[static_cast<std::size_t>(v)] = 1;
        queue_.push_back(v);
        auto& row = gamma_[static_cast<std::size_t>(v)];
        row.assign(static_cast<std::size_t>(k_), 0);
        for (int w : g_.neighbors(v)) ++row[static_cast<std::size_t>(room_of_[static_cast<std::size_t>(w)])];
        recompute_best(v);
    }

    void recompute_best(int v) {
        const auto& row = gamma_[static_cast<std::size_t>(v)];
        int own = room_of_[static_cast<std::size_t>(v)];
        long long best = kNoFeasibleMove;
        int best_room = -1;
        for (int r = 0; r < k_; ++r) {
            if (r == own || room_full(r)) continue;
            long long d = row[static_cast<std::size_t>(r)] - ein_[static_cast<std::size_t>(v)];
            if (d < best) {
                best = d;
                best_room = r;
            }
        }
        best_delta_[static_cast<std::size_t>(v)] = best;
        best_room_[static_cast<std::size_t>(v)] = best_room;
    }

    // all (node, room) pairs achieving the step minimum; one uniform draw
    std::pair<int, int> pick_move(long long best) {
        std::vector<std::pair<int, int>> candidates;
        for (int v : queue_) {
            if (best_delta_[static_cast<std::size_t>(v)] != best) continue;
            const auto& row = gamma_[static_cast<std::size_t>(v)];
            int own = room_of_[static_cast<std::size_t>(v)];
            for (int r = 0; r < k_; ++r) {
                if (r == own || room_full(r)) continue;
                if (row[static_cast<std::size_t>(r)] - ein_[static_cast<std::size_t>(v)] == best)
                    candidates.emplace_back(v, r);
            }
        }
        return candidates.size() > 1 ? rng_.pick(candidates) : candidates.front();
    }

    void execute(int u, int to) {
        int from = room_of_[static_cast<std::size_t>(u)];
        bool from_was_full = room_full(from);
        objective_ += gamma_[static_cast<std::size_t>(u)][static_cast<std::size_t>(to)] -
                      ein_[static_cast<std::size_t>(u)];

        room_of_[static_cast<std::size_t>(u)] = to;
        --room_size_[static_cast<std::size_t>(from)];
        ++room_size_[static_cast<std::size_t>(to)];
        ein_[static_cast<std::size_t>(u)] = gamma_[static_cast<std::size_t>(u)][static_cast<std::size_t>(to)];

        for (int w : g_.neighbors(u)) {
            int rw = room_of_[static_cast<std::size_t>(w)];
            if (rw == from) --ein_[static_cast<std::size_t>(w)];
            if (rw == to) ++ein_[static_cast<std::size_t>(w)];
            if (in_queue_[static_cast<std::size_t>(w)]) {
                auto& row = gamma_[static_cast<std::size_t>(w)];
                --row[static_cast<std::size_t>(from)];
                ++row[static_cast<std::size_t>(to)];
                recompute_best(w);
            }
        }

        dequeue(u);
        moved_[static_cast<std::size_t>(u)] = 1;

        if (room_full(to)) {
            for (int v : queue_)
                if (best_room_[static_cast<std::size_t>(v)] == to) recompute_best(v);
        }
        if (from_was_full) {
            // the source room regained a slot; it can only add a candidate
            for (int v : queue_) {
                if (room_of_[static_cast<std::size_t>(v)] == from) continue;
                long long d = gamma_[static_cast<std::size_t>(v)][static_cast<std::size_t>(from)] -
                              ein_[static_cast<std::size_t>(v)];
                if (d < best_delta_[static_cast<std::size_t>(v)]) {
                    best_delta_[static_cast<std::size_t>(v)] = d;
                    best_room_[static_cast<std::size_t>(v)] = from;
                }
            }
        }
        refill();
    }

    void dequeue(int u) {
        in_queue_[static_cast<std::size_t>(u)] = 0;
        queue_.erase(std::find(queue_.begin(), queue_.end(), u));
        gamma_[static_cast<std::size_t>(u)].clear();
        gamma_[static_cast<std::size_t>(u)].shrink_to_fit();
    }

    void refill() {
        int pick = -1;
        long long best_ein = -1;
        for (int v = 0; v < n_; ++v) {
            if (in_queue_[static_cast<std::size_t>(v)]) continue;
            if (moved_[static_cast<std::size_t>(v)] && !plan_.allow_requeue) continue;
            if (ein_[static_cast<std::size_t>(v)] > best_ein) {
                best_ein = ein_[static_cast<std::size_t>(v)];
                pick = v;
            }
        }
        if (pick >= 0) enqueue(pick);
    }

    const Graph& g_;
    AdjustPlan plan_;
    Rng rng_;
    int n_, k_, cap_;
    std::vector<int> room_of_;
    std::vector<int> room_size_;
    std::vector<long long> ein_;
    std::vector<char> moved_;
    std::vector<char> in_queue_;
    std::vector<int> queue_;               // insertion-ordered; scanned in node order where it matters
    std::vector<std::vector<int>> gamma_;  // per-room neighbor counts, queue members only
    std::vector<long long> best_delta_;
    std::vector<int> best_room_;
    long long objective_ = 0;
};

}  // namespace

SolveResult lga(const Graph& g, const Assignment& start, const AdjustPlan& plan,
                const SolverConfig& cfg) {
    if (plan.m < 0)
        throw Error(ErrorCode::InvalidArgument, "adjustment budget m must be non-negative");
    AdjustRun run(g, start, plan, cfg.seed);
    return run.run(start);
}

std::vector<CurvePoint> curve(const Graph& g, const Assignment& start, long long m_max,
                              const SolverConfig& cfg) {
    AdjustPlan plan;
    plan.m = m_max;
    return lga(g, start, plan, cfg).curve;
}

SolveResult random_baseline(const Graph& g, int k, std::uint64_t seed) {
    check_k(g, k);
    const int n = g.node_count();
    const int cap = capacity_for(n, k);
    Rng rng(seed);

    // Draw the occupancy profile (n_1..n_K) with probability proportional to
    // the number of assignments realizing it, then shuffle nodes into rooms.
    // This is exactly uniform over capacity-feasible assignments.
    std::vector<double> log_fact(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 1; i <= n; ++i)
        log_fact[static_cast<std::size_t>(i)] = log_fact[static_cast<std::size_t>(i - 1)] + std::log(static_cast<double>(i));
    auto log_choose = [&](int a, int b) {
        return log_fact[static_cast<std::size_t>(a)] - log_fact[static_cast<std::size_t>(b)] -
               log_fact[static_cast<std::size_t>(a - b)];
    };

    // weight[t][r]: multinomial mass of spreading r nodes over t rooms of
    // capacity cap, in log space
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> weight(static_cast<std::size_t>(k) + 1,
                                            std::vector<double>(static_cast<std::size_t>(n) + 1, kNegInf));
    weight[0][0] = 0.0;
    for (int t = 1; t <= k; ++t) {
        for (int r = 0; r <= n; ++r) {
            double hi = kNegInf;
            for (int j = 0; j <= std::min(cap, r); ++j) {
                double term = log_choose(r, j) + weight[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(r - j)];
                hi = std::max(hi, term);
            }
            if (hi == kNegInf) continue;
            double sum = 0;
            for (int j = 0; j <= std::min(cap, r); ++j) {
                double term = log_choose(r, j) + weight[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(r - j)];
                if (term != kNegInf) sum += std::exp(term - hi);
            }
            weight[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)] = hi + std::log(sum);
        }
    }

    std::vector<int> occupancy(static_cast<std::size_t>(k), 0);
    int remaining = n;
    for (int room = 0; room < k; ++room) {
        int rooms_left = k - room - 1;
        double total = weight[static_cast<std::size_t>(rooms_left + 1)][static_cast<std::size_t>(remaining)];
        double u = rng.unit();
        double acc = 0;
        int taken = -1;
        for (int j = 0; j <= std::min(cap, remaining); ++j) {
            double term = log_choose(remaining, j) +
                          weight[static_cast<std::size_t>(rooms_left)][static_cast<std::size_t>(remaining - j)];
            if (term == kNegInf) continue;
            acc += std::exp(term - total);
            if (u < acc || j == std::min(cap, remaining)) {
                taken = j;
                break;
            }
        }
        if (taken < 0) taken = std::min(cap, remaining);  // float-edge fallback
        occupancy[static_cast<std::size_t>(room)] = taken;
        remaining -= taken;
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<int> room_of(static_cast<std::size_t>(n));
    std::size_t at = 0;
    for (int room = 0; room < k; ++room)
        for (int i = 0; i < occupancy[static_cast<std::size_t>(room)]; ++i)
            room_of[static_cast<std::size_t>(order[at++])] = room;

    SolveResult res{Assignment::for_graph(g, k, cap, room_of), {}, 0, {}, StopReason::BudgetExhausted};
    res.objective = objective(g, res.assignment).intra_links;
    return res;
}

}  // namespace igp
