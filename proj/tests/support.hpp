#pragma once

#include <random>
#include <string>

#include "starop/starop.hpp"

// Shared helpers for the test suite and the acceptance runner.
namespace testsupport {

inline std::string data_path(const std::string& name) {
    return std::string(STAROP_DATA_DIR) + "/" + name;
}

inline starop::Dataset load_parkville() {
    return starop::load_dataset_file(data_path("parkville.json"));
}

/// Random query against a generated instance: budgets span the generator's
/// full cost range, slack is zero half the time, k covers [0, n+2], and a
/// quarter of queries restrict candidates to a random whitelist.
inline starop::Query random_query(std::mt19937_64& rng, const starop::Instance& instance,
                                  bool allow_whitelist = true) {
    std::uniform_real_distribution<double> budget(0.0, 600.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> kdist(0, instance.graph.size() + 2);

    starop::Query query;
    query.budget = budget(rng);
    query.slack = unit(rng) < 0.5 ? 0.0 : budget(rng) / 4.0;
    if (unit(rng) < 0.2) query.limit = query.budget + query.slack + budget(rng);
    query.k = kdist(rng);
    query.objective = instance.objective;
    query.factors = instance.factors;

    if (allow_whitelist && !instance.graph.leaves.empty() && unit(rng) < 0.25) {
        std::vector<starop::NodeId> ids;
        for (const starop::Leaf& leaf : instance.graph.leaves)
            if (unit(rng) < 0.4) ids.push_back(leaf.id);
        if (!ids.empty()) query.whitelist = std::move(ids);
    }
    return query;
}

/// True when a either outranks b or ties it under the solver's pop order
/// (reward desc, cost asc, id asc).
inline bool ranks_no_worse(const starop::Goal& a, const starop::Goal& b) {
    if (a.reward != b.reward) return a.reward > b.reward;
    if (a.cost != b.cost) return a.cost < b.cost;
    return !(b.node < a.node);
}

inline bool well_ordered(const starop::GoalSet& goals) {
    for (std::size_t i = 1; i < goals.size(); ++i)
        if (!ranks_no_worse(goals[i - 1], goals[i])) return false;
    return true;
}

inline bool all_feasible(const starop::GoalSet& goals, const starop::Query& query) {
    for (const starop::Goal& goal : goals)
        if (!(goal.cost <= query.budget + query.slack)) return false;
    return true;
}

/// Dataset with coordinates on the start and every node, for geojson tests.
inline std::string geo_dataset_text() {
    return R"({
  "start": "base",
  "start_lat": -37.7963,
  "start_lon": 144.9614,
  "nodes": [
    {"id": "9", "cost": 55.5, "lat": -37.7970, "lon": 144.9620,
     "rewards": {"room": 2.5}},
    {"id": "12", "cost": 80.25, "lat": -37.7955, "lon": 144.9601,
     "rewards": {"room": 4.0}},
    {"id": "annex", "cost": 140.0, "lat": -37.7948, "lon": 144.9633,
     "rewards": {"room": 1.0}}
  ]
})";
}

}  // namespace testsupport
