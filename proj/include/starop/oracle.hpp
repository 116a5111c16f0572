#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "starop/solver.hpp"

namespace starop {

/// Knobs for the seeded random instance generator. The seed fully
/// determines the instance.
struct InstanceParams {
    std::size_t n = 0;
    double cost_min = 0.0;
    double cost_max = 500.0;
    double reward_min = 0.0;
    double reward_max = 100.0;
    std::uint64_t seed = 0;
    /// Fraction of nodes forced to share a reward value with another node.
    double tie_probability = 0.2;
};

/// A generated problem: graph, rewards and the selectors its single channel
/// was declared under.
struct Instance {
    StarGraph graph;
    RewardModel rewards;
    Objective objective;
    FactorSet factors;
};

namespace oracle_detail {

// The oracle orders ids with its own digit-run logic (left-pad with zeros,
// then compare) so a bug in the solver's comparator cannot hide here.
inline bool id_precedes(const std::string& a, const std::string& b) {
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (digit(a[i]) && digit(b[j])) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && digit(a[ie])) ++ie;
            while (je < b.size() && digit(b[je])) ++je;
            std::string ra = a.substr(i, ie - i), rb = b.substr(j, je - j);
            std::string pa = std::string(std::max(ra.size(), rb.size()) - ra.size(), '0') + ra;
            std::string pb = std::string(std::max(ra.size(), rb.size()) - rb.size(), '0') + rb;
            if (pa != pb) return pa < pb;
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            i = ie;
            j = je;
        } else if (digit(a[i]) != digit(b[j])) {
            return digit(a[i]);
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

inline double draw_hundredths(std::mt19937_64& rng, double lo, double hi) {
    auto lo_cents = static_cast<std::int64_t>(std::ceil(lo * 100.0));
    auto hi_cents = static_cast<std::int64_t>(std::floor(hi * 100.0));
    std::uniform_int_distribution<std::int64_t> dist(lo_cents, hi_cents);
    return static_cast<double>(dist(rng)) / 100.0;
}

}  // namespace oracle_detail

/// Reference solver: materializes every candidate, filters by the budget,
/// sorts the whole list and truncates to k. Shares no selection or ordering
/// code with the priority-queue solver, including the id order, so the two
/// cannot fail the same way.
inline GoalSet solve_bruteforce(const StarGraph& graph, const RewardModel& model,
                                const Query& query) {
    validate_query(query);

    // Channel resolution by plain token equality.
    std::string key = query.objective.name();
    for (const std::string& f : query.factors.factors()) key += "+" + f;
    const ChannelTable* table = nullptr;
    for (const auto& [channel, entries] : model.channels())
        if (channel == key) table = &entries;
    if (!table) {
        bool objective_known = false;
        for (const std::string& name : model.objectives())
            if (name == query.objective.name()) objective_known = true;
        if (!objective_known)
            throw UnknownObjectiveError("unknown objective '" + query.objective.name() + "'");
        throw UnknownChannelError("no channel '" + key + "'");
    }

    std::set<std::string> allowed;
    if (query.whitelist) {
        std::set<std::string> leaf_tokens;
        for (const Leaf& leaf : graph.leaves) leaf_tokens.insert(leaf.id.token());
        for (const NodeId& id : *query.whitelist) {
            if (id.token() == graph.start.token())
                throw UnknownNodeError("node '" + id.token() + "' is the start node, not a candidate");
            if (leaf_tokens.count(id.token()) == 0)
                throw UnknownNodeError("unknown node '" + id.token() + "'");
            allowed.insert(id.token());
        }
    }

    GoalSet all;
    for (const Leaf& leaf : graph.leaves) {
        if (query.whitelist && allowed.count(leaf.id.token()) == 0) continue;
        if (!(leaf.cost <= query.budget + query.slack)) continue;
        RewardValue reward;
        for (const auto& [id, value] : *table)
            if (id.token() == leaf.id.token()) reward = value;
        all.push_back({leaf.id, leaf.cost, reward});
    }

    std::sort(all.begin(), all.end(), [](const Goal& a, const Goal& b) {
        if (a.reward.value() != b.reward.value()) return a.reward.value() > b.reward.value();
        if (a.cost != b.cost) return a.cost < b.cost;
        return oracle_detail::id_precedes(a.node.token(), b.node.token());
    });
    if (all.size() > query.k) all.resize(query.k);
    return all;
}

/// Seeded generator for property testing: a valid star with n leaves and one
/// reward channel. Rewards are drawn in range with ties forced at the
/// configured rate and an occasional 0 and infinity mixed in (each with
/// probability 1/max(n,1)). Ids mix plain decimals with zero-padded and
/// letter-prefixed variants to keep the id order honest.
inline Instance random_instance(const InstanceParams& params) {
    if (params.cost_min < 0.0 || params.cost_min > params.cost_max || !std::isfinite(params.cost_max))
        throw InvalidParamsError("cost range must satisfy 0 <= min <= max < inf");
    if (params.reward_min < 0.0 || params.reward_min > params.reward_max ||
        !std::isfinite(params.reward_max))
        throw InvalidParamsError("reward range must satisfy 0 <= min <= max < inf");
    if (std::floor(params.cost_max * 100.0) < std::ceil(params.cost_min * 100.0))
        throw InvalidParamsError("cost range contains no representable hundredth");
    if (std::floor(params.reward_max * 100.0) < std::ceil(params.reward_min * 100.0))
        throw InvalidParamsError("reward range contains no representable hundredth");
    if (std::isnan(params.tie_probability) || params.tie_probability < 0.0 ||
        params.tie_probability > 1.0)
        throw InvalidParamsError("tie probability must be in [0, 1]");

    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    Instance out;
    out.graph.start = NodeId("0");
    out.objective = Objective("obj");
    out.factors = FactorSet{};
    out.rewards.declare(out.objective, out.factors);

    const double inject = 1.0 / static_cast<double>(std::max<std::size_t>(params.n, 1));
    std::vector<double> tie_pool;
    std::vector<std::pair<std::string, double>> drawn;  // id -> reward, in draw order
    drawn.reserve(params.n);

    for (std::size_t i = 1; i <= params.n; ++i) {
        std::string id = std::to_string(i);
        if (i % 17 == 0)
            id = "0" + id;
        else if (i % 23 == 0)
            id = "b" + id;

        Leaf leaf;
        leaf.id = NodeId(id);
        leaf.cost = oracle_detail::draw_hundredths(rng, params.cost_min, params.cost_max);
        if (coin(rng) < 0.25) {
            leaf.geo = GeoPoint{oracle_detail::draw_hundredths(rng, -90.0, 90.0),
                                oracle_detail::draw_hundredths(rng, -180.0, 180.0)};
        }
        if (coin(rng) < 0.15) leaf.name = "bldg " + std::to_string(i);
        out.graph.leaves.push_back(std::move(leaf));

        double u = coin(rng);
        double reward;
        if (u < inject) {
            reward = 0.0;
        } else if (u < 2.0 * inject) {
            reward = std::numeric_limits<double>::infinity();
        } else if (u < 2.0 * inject + params.tie_probability && !tie_pool.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, tie_pool.size() - 1);
            reward = tie_pool[pick(rng)];
        } else {
            reward = oracle_detail::draw_hundredths(rng, params.reward_min, params.reward_max);
            tie_pool.push_back(reward);
        }
        drawn.emplace_back(id, reward);
    }
    if (coin(rng) < 0.25) {
        out.graph.start_geo = GeoPoint{oracle_detail::draw_hundredths(rng, -90.0, 90.0),
                                       oracle_detail::draw_hundredths(rng, -180.0, 180.0)};
    }

    out.graph.normalize();
    // Assemble the channel in the graph's sorted order so insertion stays
    // linear at large n.
    std::sort(drawn.begin(), drawn.end(),
              [](const auto& a, const auto& b) { return natural_less(a.first, b.first); });
    for (const auto& [id, reward] : drawn)
        out.rewards.set(out.objective, out.factors, NodeId(id), RewardValue(reward));
    return out;
}

}  // namespace starop
