#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "starop/reward.hpp"
#include "starop/star_graph.hpp"

namespace starop {

/// A loaded dataset: the star graph plus the reward channels that ride in
/// the same document. Warnings report ignored unknown keys.
struct Dataset {
    StarGraph graph;
    RewardModel rewards;
    std::vector<std::string> warnings;
};

namespace detail {

using json = nlohmann::ordered_json;

inline double read_number(const json& v, const std::string& what) {
    if (!v.is_number()) throw ParseError(what + " must be a number");
    return v.get<double>();
}

inline void split_channel_key(const std::string& key, Objective& objective, FactorSet& factors) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = key.find('+', pos);
        parts.push_back(key.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    objective = Objective(parts.front());
    factors = FactorSet(std::vector<std::string>(parts.begin() + 1, parts.end()));
}

struct RawNode {
    std::string id;
    double cost = 0.0;
    std::optional<GeoPoint> geo;
    std::optional<std::string> name;
    // channel key -> value, in document order
    std::vector<std::pair<std::string, RewardValue>> rewards;
};

inline std::optional<RewardValue> parse_reward_value(const json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() == "inf") return RewardValue::infinity();
        throw ParseError("reward value must be a number or \"inf\"");
    }
    if (!v.is_number()) throw ParseError("reward value must be a number or \"inf\"");
    double d = v.get<double>();
    if (d < 0.0) return std::nullopt;  // reported as a violation by the caller
    return RewardValue(d);
}

}  // namespace detail

/// Parses and validates a dataset document. Throws ParseError on malformed
/// input (bad JSON, wrong field types) and ValidationError, carrying every
/// violation found, when the document breaks a structural invariant.
inline Dataset load_dataset(std::istream& in) {
    detail::json doc;
    try {
        doc = detail::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level document must be an object");

    Dataset out;
    std::vector<Violation> violations;

    for (const auto& [key, value] : doc.items()) {
        if (key == "start") {
            if (!value.is_string()) throw ParseError("'start' must be a string");
            out.graph.start = NodeId(value.get<std::string>());
        } else if (key == "start_lat" || key == "start_lon") {
            double d = detail::read_number(value, "'" + key + "'");
            if (!out.graph.start_geo) out.graph.start_geo = GeoPoint{};
            (key == "start_lat" ? out.graph.start_geo->lat : out.graph.start_geo->lon) = d;
        } else if (key == "start_name") {
            if (!value.is_string()) throw ParseError("'start_name' must be a string");
            out.graph.start_name = value.get<std::string>();
        } else if (key != "nodes") {
            out.warnings.push_back("ignoring unknown key '" + key + "'");
        }
    }
    if (!doc.contains("start"))
        violations.push_back({"missing-start", "", "document has no 'start' key"});
    else if (out.graph.start.empty())
        violations.push_back({"empty-id", "start", "start id must be non-empty"});
    if (out.graph.start_geo && (!doc.contains("start_lat") || !doc.contains("start_lon")))
        violations.push_back({"incomplete-geo", "start", "start_lat and start_lon must both be present"});

    std::vector<detail::RawNode> raw;
    if (doc.contains("nodes")) {
        const auto& nodes = doc["nodes"];
        if (!nodes.is_array()) throw ParseError("'nodes' must be an array");
        raw.reserve(nodes.size());
        std::set<std::string> seen;
        for (const auto& entry : nodes) {
            if (!entry.is_object()) throw ParseError("node entries must be objects");
            if (!entry.contains("id")) throw ParseError("node entry missing 'id'");
            if (!entry["id"].is_string()) throw ParseError("node 'id' must be a string");
            detail::RawNode node;
            node.id = entry["id"].get<std::string>();
            bool has_lat = false, has_lon = false, has_cost = false;
            double lat = 0.0, lon = 0.0;
            for (const auto& [key, value] : entry.items()) {
                if (key == "id") {
                    continue;
                } else if (key == "cost") {
                    node.cost = detail::read_number(value, "node 'cost'");
                    has_cost = true;
                } else if (key == "lat") {
                    lat = detail::read_number(value, "node 'lat'");
                    has_lat = true;
                } else if (key == "lon") {
                    lon = detail::read_number(value, "node 'lon'");
                    has_lon = true;
                } else if (key == "name") {
                    if (!value.is_string()) throw ParseError("node 'name' must be a string");
                    node.name = value.get<std::string>();
                } else if (key == "rewards") {
                    if (!value.is_object()) throw ParseError("node 'rewards' must be an object");
                    for (const auto& [channel, reward] : value.items()) {
                        auto parsed = detail::parse_reward_value(reward);
                        if (!parsed) {
                            violations.push_back({"negative-reward", node.id,
                                                  "channel '" + channel + "' has a negative value"});
                            continue;
                        }
                        node.rewards.emplace_back(channel, *parsed);
                    }
                } else {
                    out.warnings.push_back("ignoring unknown key '" + key + "' on node '" + node.id + "'");
                }
            }
            if (!has_cost) throw ParseError("node '" + node.id + "' missing 'cost'");
            if (node.id.empty())
                violations.push_back({"empty-id", "", "node id must be non-empty"});
            else if (!seen.insert(node.id).second)
                violations.push_back({"duplicate-id", node.id, "leaf id appears more than once"});
            if (node.id == out.graph.start.token() && !node.id.empty())
                violations.push_back({"self-edge", node.id, "start node may not appear as a leaf"});
            if (node.cost < 0.0)
                violations.push_back({"negative-cost", node.id, "edge cost must be >= 0"});
            if (has_lat != has_lon)
                violations.push_back({"incomplete-geo", node.id, "lat and lon must both be present"});
            else if (has_lat && has_lon)
                node.geo = GeoPoint{lat, lon};
            raw.push_back(std::move(node));
        }
    }

    // Channel keys are canonicalized before the duplicate check so that
    // "room+b+a" and "room+a+b" collide as intended.
    std::sort(raw.begin(), raw.end(),
              [](const detail::RawNode& a, const detail::RawNode& b) { return natural_less(a.id, b.id); });
    for (const detail::RawNode& node : raw) {
        out.graph.leaves.push_back({NodeId(node.id), node.cost, node.geo, node.name});
        std::set<std::string> node_channels;
        for (const auto& [key, value] : node.rewards) {
            Objective objective;
            FactorSet factors;
            try {
                detail::split_channel_key(key, objective, factors);
            } catch (const InvalidParamsError&) {
                violations.push_back({"bad-channel-key", key.empty() ? node.id : key,
                                      "node '" + node.id + "': channel keys are '<objective>[+factor...]'"});
                continue;
            }
            if (!node_channels.insert(channel_key(objective, factors)).second) {
                violations.push_back({"duplicate-channel", key, "node '" + node.id +
                                      "' declares the channel more than once"});
                continue;
            }
            out.rewards.set(objective, factors, NodeId(node.id), value);
        }
    }

    if (!violations.empty()) throw ValidationError(std::move(violations));
    return out;
}

inline Dataset load_dataset(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_dataset(in);
}

inline Dataset load_dataset_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return load_dataset(in);
}

/// load_graph keeps the graph-only view of the document.
inline StarGraph load_graph(std::istream& in) { return load_dataset(in).graph; }
inline StarGraph load_graph(std::string_view text) { return load_dataset(text).graph; }

/// Canonical serialization: nodes ascending by id, channel keys ascending,
/// infinity as the string "inf". load_dataset(serialize_dataset(d)) is the
/// identity on graph and reward entries.
inline std::string serialize_dataset(const StarGraph& graph, const RewardModel& rewards) {
    using detail::json;

    // Invert channel -> node storage into per-node reward objects. Only
    // nodes present in the graph can be represented.
    std::map<std::string, std::map<std::string, RewardValue>> per_node;
    for (const auto& [key, table] : rewards.channels())
        for (const auto& [id, value] : table)
            if (graph.find(id)) per_node[id.token()][key] = value;

    json doc;
    doc["start"] = graph.start.token();
    if (graph.start_geo) {
        doc["start_lat"] = graph.start_geo->lat;
        doc["start_lon"] = graph.start_geo->lon;
    }
    if (graph.start_name) doc["start_name"] = *graph.start_name;
    doc["nodes"] = json::array();
    for (const Leaf& leaf : graph.leaves) {
        json entry;
        entry["id"] = leaf.id.token();
        entry["cost"] = leaf.cost;
        if (leaf.geo) {
            entry["lat"] = leaf.geo->lat;
            entry["lon"] = leaf.geo->lon;
        }
        if (leaf.name) entry["name"] = *leaf.name;
        auto it = per_node.find(leaf.id.token());
        if (it != per_node.end()) {
            json block;
            for (const auto& [key, value] : it->second) {
                if (value.infinite())
                    block[key] = "inf";
                else
                    block[key] = value.value();
            }
            entry["rewards"] = std::move(block);
        }
        doc["nodes"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

inline std::string serialize_dataset(const Dataset& dataset) {
    return serialize_dataset(dataset.graph, dataset.rewards);
}

}  // namespace starop
