#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "starop/bench.hpp"
#include "starop/solver.hpp"
#include "starop/star_graph.hpp"

namespace starop {

enum class OutputFormat { table, json, geojson, dot };

inline OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "json") return OutputFormat::json;
    if (name == "geojson") return OutputFormat::geojson;
    if (name == "dot") return OutputFormat::dot;
    throw InvalidParamsError("unknown output format '" + name + "'");
}

namespace detail {

// All number rendering goes through to_chars: locale-independent, so
// identical inputs give byte-identical output.
inline std::string fmt_fixed(double v, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

inline std::string fmt_shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// Base-channel rewards print with 4 decimals (they are small fractions),
/// factor-channel rewards in their shortest form.
inline std::string fmt_reward(const RewardValue& reward, const Query& query) {
    if (reward.infinite()) return "inf";
    if (query.factors.empty()) return fmt_fixed(reward.value(), 4);
    return fmt_shortest(reward.value());
}

inline nlohmann::ordered_json reward_to_json(const RewardValue& reward) {
    if (reward.infinite()) return "inf";
    return reward.value();
}

inline std::string pad_left(const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace detail

/// Goals/Cost/Reward rows: ids left aligned, numbers right aligned.
inline std::string render_table(const GoalSet& goals, const Query& query) {
    std::vector<std::array<std::string, 3>> rows{{"Goals", "Cost", "Reward"}};
    for (const Goal& goal : goals)
        rows.push_back({goal.node.token(), detail::fmt_fixed(goal.cost, 2),
                        detail::fmt_reward(goal.reward, query)});
    std::size_t w0 = 0, w1 = 0, w2 = 0;
    for (const auto& row : rows) {
        w0 = std::max(w0, row[0].size());
        w1 = std::max(w1, row[1].size());
        w2 = std::max(w2, row[2].size());
    }
    std::string out;
    for (const auto& row : rows) {
        out += detail::pad_right(row[0], w0);
        out += "  ";
        out += detail::pad_left(row[1], w1);
        out += "  ";
        out += detail::pad_left(row[2], w2);
        out += '\n';
    }
    return out;
}

/// Ordered goal records plus the query that produced them.
inline std::string render_json(const GoalSet& goals, const Query& query, const StarGraph& graph) {
    using nlohmann::ordered_json;
    ordered_json query_block;
    query_block["start"] = graph.start.token();
    query_block["budget"] = query.budget;
    query_block["delta"] = std::isinf(query.slack) ? ordered_json("inf") : ordered_json(query.slack);
    query_block["limit"] = std::isinf(query.limit) ? ordered_json("inf") : ordered_json(query.limit);
    query_block["k"] = query.k;
    query_block["objective"] = query.objective.name();
    query_block["factors"] = query.factors.factors();
    if (query.whitelist) {
        ordered_json only = ordered_json::array();
        for (const NodeId& id : *query.whitelist) only.push_back(id.token());
        query_block["only"] = std::move(only);
    }

    ordered_json doc;
    doc["query"] = std::move(query_block);
    doc["goals"] = ordered_json::array();
    for (std::size_t i = 0; i < goals.size(); ++i) {
        ordered_json g;
        g["rank"] = i + 1;
        g["id"] = goals[i].node.token();
        g["cost"] = goals[i].cost;
        g["reward"] = detail::reward_to_json(goals[i].reward);
        doc["goals"].push_back(std::move(g));
    }
    return doc.dump(2) + "\n";
}

/// Reads a render_json document back into a GoalSet.
inline GoalSet parse_goals(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("goals") || !doc["goals"].is_array())
        throw ParseError("document has no 'goals' array");
    GoalSet out;
    for (const auto& g : doc["goals"]) {
        RewardValue reward = g["reward"].is_string() ? RewardValue::infinity()
                                                     : RewardValue(g["reward"].get<double>());
        out.push_back({NodeId(g["id"].get<std::string>()), g["cost"].get<double>(), reward});
    }
    return out;
}

/// FeatureCollection with the start point, one ranked point per goal and a
/// straight-line edge from the start to each goal. Requires coordinates for
/// the start and every goal.
inline std::string render_geojson(const GoalSet& goals, const StarGraph& graph) {
    using nlohmann::ordered_json;
    if (!graph.start_geo)
        throw Error("dataset has no coordinates for start node '" + graph.start.token() +
                    "'; geojson output needs lat/lon");
    auto point = [](const GeoPoint& geo) {
        ordered_json g;
        g["type"] = "Point";
        g["coordinates"] = {geo.lon, geo.lat};
        return g;
    };

    ordered_json features = ordered_json::array();
    ordered_json start;
    start["type"] = "Feature";
    start["geometry"] = point(*graph.start_geo);
    start["properties"]["id"] = graph.start.token();
    start["properties"]["role"] = "start";
    if (graph.start_name) start["properties"]["name"] = *graph.start_name;
    features.push_back(std::move(start));

    for (std::size_t i = 0; i < goals.size(); ++i) {
        const Leaf* leaf = graph.find(goals[i].node);
        if (!leaf || !leaf->geo)
            throw Error("dataset has no coordinates for node '" + goals[i].node.token() +
                        "'; geojson output needs lat/lon");
        ordered_json feature;
        feature["type"] = "Feature";
        feature["geometry"] = point(*leaf->geo);
        feature["properties"]["id"] = leaf->id.token();
        feature["properties"]["role"] = "goal";
        feature["properties"]["rank"] = i + 1;
        feature["properties"]["cost"] = goals[i].cost;
        feature["properties"]["reward"] = detail::reward_to_json(goals[i].reward);
        if (leaf->name) feature["properties"]["name"] = *leaf->name;
        features.push_back(std::move(feature));

        ordered_json route;
        route["type"] = "Feature";
        route["geometry"]["type"] = "LineString";
        route["geometry"]["coordinates"] = {{graph.start_geo->lon, graph.start_geo->lat},
                                            {leaf->geo->lon, leaf->geo->lat}};
        route["properties"]["role"] = "route";
        route["properties"]["rank"] = i + 1;
        route["properties"]["from"] = graph.start.token();
        route["properties"]["to"] = leaf->id.token();
        features.push_back(std::move(route));
    }

    ordered_json doc;
    doc["type"] = "FeatureCollection";
    doc["features"] = std::move(features);
    return doc.dump(2) + "\n";
}

/// The whole star in graph-description language, goal nodes annotated with
/// their rank.
inline std::string render_dot(const GoalSet& goals, const StarGraph& graph) {
    std::string out = "digraph star {\n  rankdir=LR;\n";
    out += "  \"" + detail::dot_escape(graph.start.token()) + "\" [shape=doublecircle];\n";
    for (const Leaf& leaf : graph.leaves) {
        std::string line = "  \"" + detail::dot_escape(leaf.id.token()) + "\"";
        for (std::size_t i = 0; i < goals.size(); ++i) {
            if (goals[i].node == leaf.id) {
                line += " [label=\"" + detail::dot_escape(leaf.id.token()) + "\\nrank " +
                        std::to_string(i + 1) + "\", penwidth=2]";
                break;
            }
        }
        out += line + ";\n";
    }
    for (const Leaf& leaf : graph.leaves) {
        out += "  \"" + detail::dot_escape(graph.start.token()) + "\" -> \"" +
               detail::dot_escape(leaf.id.token()) + "\" [label=\"" +
               detail::fmt_fixed(leaf.cost, 2) + "\"];\n";
    }
    out += "}\n";
    return out;
}

inline std::string render_goals(const GoalSet& goals, OutputFormat format, const StarGraph& graph,
                                const Query& query) {
    switch (format) {
        case OutputFormat::table: return render_table(goals, query);
        case OutputFormat::json: return render_json(goals, query, graph);
        case OutputFormat::geojson: return render_geojson(goals, graph);
        case OutputFormat::dot: return render_dot(goals, graph);
    }
    throw InvalidParamsError("unknown output format");
}

/// Aligned text table for a scaling report, one row per size, followed by
/// the growth summary.
inline std::string render_scaling_table(const ScalingReport& report) {
    std::vector<std::array<std::string, 5>> rows{{"n", "k", "median_s", "peak", "t_per_nlog2n"}};
    for (const ScalingRow& row : report.rows) {
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.3e", row.ratio);
        rows.push_back({std::to_string(row.n), std::to_string(row.k),
                        detail::fmt_fixed(row.median_seconds, 6), std::to_string(row.peak_candidates),
                        ratio});
    }
    std::array<std::size_t, 5> widths{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += "  ";
            out += c == 0 ? detail::pad_right(row[c], widths[c]) : detail::pad_left(row[c], widths[c]);
        }
        out += '\n';
    }
    out += "growth: " + report.growth + "\n";
    out += std::string("super-linearithmic flag: ") + (report.superlinearithmic ? "raised" : "none") +
           "\n";
    return out;
}

inline std::string render_scaling_json(const ScalingReport& report) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (const ScalingRow& row : report.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["k"] = row.k;
        r["median_seconds"] = row.median_seconds;
        r["peak_candidates"] = row.peak_candidates;
        r["t_per_nlog2n"] = row.ratio;
        doc["rows"].push_back(std::move(r));
    }
    doc["growth"] = report.growth;
    doc["superlinearithmic"] = report.superlinearithmic;
    return doc.dump(2) + "\n";
}

}  // namespace starop
