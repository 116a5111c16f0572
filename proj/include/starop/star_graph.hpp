#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starop/errors.hpp"
#include "starop/node_id.hpp"

namespace starop {

struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;

    bool operator==(const GeoPoint&) const = default;
};

/// One leaf of the star: the directed edge (start, id) with its traversal
/// cost in meters, plus optional display metadata.
struct Leaf {
    NodeId id;
    double cost = 0.0;
    std::optional<GeoPoint> geo;
    std::optional<std::string> name;

    bool operator==(const Leaf&) const = default;
};

/// Specialized star graph: one central start node with a directed edge to
/// each of n leaves and no other edges. The start has out-degree n and
/// in-degree 0; every leaf has in-degree 1 and out-degree 0. Immutable
/// after load; safe to share across concurrent readers.
struct StarGraph {
    NodeId start;
    std::optional<GeoPoint> start_geo;
    std::optional<std::string> start_name;
    /// Sorted ascending by id (natural order), unique. normalize() restores
    /// the invariant after hand construction.
    std::vector<Leaf> leaves;

    std::size_t size() const { return leaves.size(); }

    void normalize() {
        std::sort(leaves.begin(), leaves.end(),
                  [](const Leaf& a, const Leaf& b) { return a.id < b.id; });
    }

    /// Binary search over the sorted leaves; nullptr if absent.
    const Leaf* find(const NodeId& id) const {
        auto it = std::lower_bound(leaves.begin(), leaves.end(), id,
                                   [](const Leaf& l, const NodeId& v) { return l.id < v; });
        if (it == leaves.end() || !(it->id == id)) return nullptr;
        return &*it;
    }

    bool operator==(const StarGraph&) const = default;
};

/// Structural validation. Empty report iff all StarGraph invariants hold.
/// Violations are data, not failures: the CLI `validate` subcommand prints
/// them and exits 2.
inline std::vector<Violation> validate_star(const StarGraph& graph) {
    std::vector<Violation> out;
    if (graph.start.empty())
        out.push_back({"missing-start", "", "graph has no start node id"});
    std::set<std::string> seen;
    for (const Leaf& leaf : graph.leaves) {
        const std::string& id = leaf.id.token();
        if (id.empty()) {
            out.push_back({"empty-id", "", "leaf with empty id token"});
            continue;
        }
        if (!seen.insert(id).second)
            out.push_back({"duplicate-id", id, "leaf id appears more than once"});
        if (leaf.id == graph.start)
            out.push_back({"self-edge", id, "start node may not appear as a leaf"});
        if (std::isnan(leaf.cost) || std::isinf(leaf.cost))
            out.push_back({"non-finite-cost", id, "edge cost must be finite"});
        else if (leaf.cost < 0.0)
            out.push_back({"negative-cost", id, "edge cost must be >= 0"});
    }
    return out;
}

/// Cost of traversing the single edge from start to `node`, in meters.
inline double cost(const StarGraph& graph, const NodeId& node) {
    const Leaf* leaf = graph.find(node);
    if (!leaf) throw UnknownNodeError("unknown node '" + node.token() + "'");
    return leaf->cost;
}

/// The visitable node set: all leaves, or the whitelist restriction, sorted
/// ascending by id for deterministic iteration. Never contains the start.
inline std::vector<NodeId> candidates(const StarGraph& graph,
                                      const std::optional<std::vector<NodeId>>& whitelist = {}) {
    std::vector<NodeId> out;
    if (!whitelist) {
        out.reserve(graph.leaves.size());
        for (const Leaf& leaf : graph.leaves) out.push_back(leaf.id);
        return out;
    }
    for (const NodeId& id : *whitelist) {
        if (id == graph.start)
            throw UnknownNodeError("node '" + id.token() + "' is the start node, not a candidate");
        if (!graph.find(id)) throw UnknownNodeError("unknown node '" + id.token() + "'");
        out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace starop
