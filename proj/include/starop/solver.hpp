#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "starop/reward.hpp"
#include "starop/star_graph.hpp"

namespace starop {

/// One budget-constrained top-k request. Construction invariant:
/// B + delta <= L (the feasibility chain cost <= B + delta <= L). Violations
/// are an error, never a silent clamp; see validate_query.
struct Query {
    double budget = 0.0;                                       // B, meters; finite
    double slack = 0.0;                                        // delta, meters; may be inf
    double limit = std::numeric_limits<double>::infinity();    // L, meters; may be inf
    std::size_t k = 0;
    Objective objective;
    FactorSet factors;
    std::optional<std::vector<NodeId>> whitelist;
};

inline void validate_query(const Query& query) {
    if (std::isnan(query.budget) || std::isinf(query.budget) || query.budget < 0.0)
        throw InvalidQueryError("budget must be a finite nonnegative number");
    if (std::isnan(query.slack) || query.slack < 0.0)
        throw InvalidQueryError("slack must be nonnegative (infinity allowed)");
    if (std::isnan(query.limit) || query.limit < 0.0)
        throw InvalidQueryError("limit must be nonnegative (infinity allowed)");
    if (query.budget + query.slack > query.limit)
        throw InvalidQueryError("budget + slack exceeds the constraint limit");
    if (query.objective.empty()) throw InvalidQueryError("query needs an objective");
}

/// Soft budget constraint: cost <= B + delta. The hard constraint is the
/// delta = 0 case.
inline bool feasible(double cost, const Query& query) {
    return cost <= query.budget + query.slack;
}

/// One priority-queue entry. priority is the negated reward, so pop-min
/// yields the highest reward; infinite rewards get -inf and pop first.
struct Candidate {
    NodeId node;
    double cost = 0.0;
    RewardValue reward;
    double priority = 0.0;
};

struct Goal {
    NodeId node;
    double cost = 0.0;
    RewardValue reward;

    bool operator==(const Goal&) const = default;
};

/// Ordered list of <= k goals, rewards non-increasing. Ties broken by lower
/// cost, then smaller node id.
using GoalSet = std::vector<Goal>;

namespace detail {

// Heap "less": true when a pops after b.
struct CandidateAfter {
    bool operator()(const Candidate& a, const Candidate& b) const {
        if (a.priority != b.priority) return a.priority > b.priority;
        if (a.cost != b.cost) return a.cost > b.cost;
        return b.node < a.node;
    }
};

}  // namespace detail

/// Loaded priority queue over feasible candidates. Pop order is total and
/// deterministic: (reward desc, cost asc, id asc). Single-owner; pop_next
/// needs exclusive access.
class QueueState {
  public:
    QueueState() = default;
    explicit QueueState(std::vector<Candidate> candidates)
        : peak_(candidates.size()),
          queue_(detail::CandidateAfter{}, std::move(candidates)) {}

    /// Removes and returns the best remaining candidate; nothing when
    /// exhausted. Callers may stop after any number of pops; each pop is
    /// the next-best goal (the anytime contract).
    std::optional<Goal> pop_next() {
        if (queue_.empty()) return std::nullopt;
        Goal goal{queue_.top().node, queue_.top().cost, queue_.top().reward};
        queue_.pop();
        ++emitted_;
        return goal;
    }

    std::size_t size() const { return queue_.size(); }
    bool empty() const { return queue_.empty(); }
    std::size_t emitted() const { return emitted_; }
    /// Most candidates simultaneously held; stays <= feasible count <= n.
    std::size_t peak_size() const { return peak_; }

  private:
    std::size_t peak_ = 0;
    std::size_t emitted_ = 0;
    std::priority_queue<Candidate, std::vector<Candidate>, detail::CandidateAfter> queue_;
};

/// Fills the queue with every candidate passing the budget filter, each
/// carrying priority = -reward. The channel is resolved once up front so an
/// unknown objective fails loudly even when nothing is feasible.
inline QueueState build_queue(const StarGraph& graph, const RewardModel& model,
                              const Query& query) {
    validate_query(query);
    const ChannelTable& table = model.channel(query.objective, query.factors);
    std::vector<Candidate> pending;

    auto admit = [&](const Leaf& leaf, ChannelTable::const_iterator& it) {
        if (!feasible(leaf.cost, query)) return;
        while (it != table.end() && it->first < leaf.id) ++it;
        RewardValue reward;
        if (it != table.end() && it->first == leaf.id) reward = it->second;
        pending.push_back({leaf.id, leaf.cost, reward, -reward.value()});
    };

    if (query.whitelist) {
        auto it = table.begin();
        for (const NodeId& id : candidates(graph, query.whitelist)) admit(*graph.find(id), it);
    } else {
        // candidates(graph) is the leaves in sorted order; stream the channel
        // table in lockstep instead of a per-node lookup.
        pending.reserve(graph.leaves.size());
        auto it = table.begin();
        for (const Leaf& leaf : graph.leaves) admit(leaf, it);
    }
    return QueueState(std::move(pending));
}

/// Non-randomized anytime top-k selection: pop the loaded queue
/// min(k, feasible) times. Equal to the first k results of repeated
/// pop_next, so any prefix of the output is itself optimal.
inline GoalSet solve(const StarGraph& graph, const RewardModel& model, const Query& query) {
    QueueState state = build_queue(graph, model, query);
    GoalSet goals;
    goals.reserve(std::min(query.k, state.size()));
    while (goals.size() < query.k) {
        std::optional<Goal> next = state.pop_next();
        if (!next) break;
        goals.push_back(std::move(*next));
    }
    return goals;
}

}  // namespace starop
