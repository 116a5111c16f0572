#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "starop/errors.hpp"
#include "starop/node_id.hpp"

namespace starop {

/// Nonnegative reward, possibly +infinity. NaN and negatives are rejected
/// at construction, so downstream comparisons stay total.
class RewardValue {
  public:
    RewardValue() = default;
    explicit RewardValue(double value) : value_(value) {
        if (std::isnan(value)) throw InvalidParamsError("reward may not be NaN");
        if (value < 0.0) throw InvalidParamsError("reward may not be negative");
    }

    static RewardValue infinity() { return RewardValue(std::numeric_limits<double>::infinity()); }

    double value() const { return value_; }
    bool infinite() const { return std::isinf(value_); }

    auto operator<=>(const RewardValue&) const = default;

  private:
    double value_ = 0.0;
};

namespace detail {

/// Channel-key tokens may not contain '+' (the key separator), or the key
/// "a+b" for objective "a" would collide with objective "a+b".
inline void check_token(const std::string& token, const char* what) {
    if (token.empty())
        throw InvalidParamsError(std::string(what) + " token must be non-empty");
    if (token.find('+') != std::string::npos)
        throw InvalidParamsError(std::string(what) + " token '" + token + "' may not contain '+'");
}

inline std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace detail

/// What the caller wants at a node, e.g. "meeting_room" or "toilet".
class Objective {
  public:
    Objective() = default;
    explicit Objective(std::string name) : name_(std::move(name)) {
        detail::check_token(name_, "objective");
    }

    const std::string& name() const { return name_; }
    bool empty() const { return name_.empty(); }

    bool operator==(const Objective&) const = default;
    bool operator<(const Objective& other) const { return name_ < other.name_; }

  private:
    std::string name_;
};

/// Situational modifiers tweaking the reward, e.g. {"covid"}. Tokens are
/// lowercase-normalized, deduplicated and kept sorted.
class FactorSet {
  public:
    FactorSet() = default;
    FactorSet(std::initializer_list<std::string> factors)
        : FactorSet(std::vector<std::string>(factors)) {}
    explicit FactorSet(std::vector<std::string> factors) {
        for (auto& f : factors) {
            f = detail::to_lower(std::move(f));
            detail::check_token(f, "factor");
        }
        std::sort(factors.begin(), factors.end());
        factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
        factors_ = std::move(factors);
    }

    const std::vector<std::string>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    bool operator==(const FactorSet&) const = default;

  private:
    std::vector<std::string> factors_;
};

/// Deterministic channel key: objective name, then each factor ascending,
/// joined by "+". The empty factor set yields the bare objective name.
/// Injective over (objective, factor set) pairs and order-insensitive in
/// the factor argument.
inline std::string channel_key(const Objective& objective, const FactorSet& factors) {
    detail::check_token(objective.name(), "objective");
    std::string key = objective.name();
    for (const std::string& f : factors.factors()) {
        key += '+';
        key += f;
    }
    return key;
}

/// Per-channel node rewards, sorted ascending by id. Sorted storage lets the
/// solver stream it in lockstep with the graph's leaves.
using ChannelTable = std::vector<std::pair<NodeId, RewardValue>>;

/// Channelized reward model: per-node declared reward values for each
/// (objective, factor set) pair. The dataset never computes rewards from a
/// formula; channels carry whatever values the file declares. Immutable
/// after load; safe for concurrent readers.
class RewardModel {
  public:
    /// Registers the channel (and its objective/factor declarations) even if
    /// no node value is ever set, so queries on empty instances resolve.
    void declare(const Objective& objective, const FactorSet& factors) {
        channels_.try_emplace(channel_key(objective, factors));
        objectives_.insert(objective.name());
        for (const std::string& f : factors.factors()) factors_.insert(f);
    }

    /// Sets one node's value in a channel, declaring the channel as needed.
    /// Keeps the table sorted; bulk loaders should insert ids in ascending
    /// order to stay linear.
    void set(const Objective& objective, const FactorSet& factors, const NodeId& node,
             RewardValue value) {
        declare(objective, factors);
        ChannelTable& table = channels_[channel_key(objective, factors)];
        auto it = std::lower_bound(table.begin(), table.end(), node,
                                   [](const auto& e, const NodeId& v) { return e.first < v; });
        if (it != table.end() && it->first == node)
            it->second = value;
        else
            table.insert(it, {node, value});
    }

    /// The full table for one channel. Throws UnknownObjectiveError if the
    /// objective was never declared, UnknownChannelError if the objective
    /// exists but this exact factor combination does not.
    const ChannelTable& channel(const Objective& objective, const FactorSet& factors) const {
        auto it = channels_.find(channel_key(objective, factors));
        if (it != channels_.end()) return it->second;
        if (objectives_.count(objective.name()) == 0)
            throw UnknownObjectiveError("unknown objective '" + objective.name() + "'");
        throw UnknownChannelError("no channel '" + channel_key(objective, factors) + "'");
    }

    const std::map<std::string, ChannelTable>& channels() const { return channels_; }
    const std::set<std::string>& objectives() const { return objectives_; }
    const std::set<std::string>& factors() const { return factors_; }

    bool operator==(const RewardModel&) const = default;

  private:
    std::map<std::string, ChannelTable> channels_;
    std::set<std::string> objectives_;
    std::set<std::string> factors_;
};

/// The reward gained by visiting `node` under the given objective and
/// factors. A node with no entry in an existing channel earns 0; it simply
/// offers nothing for that combination.
inline RewardValue evaluate(const RewardModel& model, const NodeId& node,
                            const Objective& objective, const FactorSet& factors) {
    const ChannelTable& table = model.channel(objective, factors);
    auto it = std::lower_bound(table.begin(), table.end(), node,
                               [](const auto& e, const NodeId& v) { return e.first < v; });
    if (it != table.end() && it->first == node) return it->second;
    return RewardValue();
}

}  // namespace starop
