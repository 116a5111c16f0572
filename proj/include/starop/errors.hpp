#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starop {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, wrong field types).
struct ParseError : Error {
    using Error::Error;
};

/// One structural rule broken by a graph or dataset. Violations are data:
/// validation collects them all instead of stopping at the first.
struct Violation {
    std::string code;     // e.g. "self-edge", "negative-cost", "duplicate-id"
    std::string subject;  // offending node id / channel key / field
    std::string detail;

    std::string to_string() const {
        std::string s = code;
        if (!subject.empty()) {
            s += ": ";
            s += subject;
        }
        if (!detail.empty()) {
            s += " (";
            s += detail;
            s += ")";
        }
        return s;
    }

    bool operator==(const Violation&) const = default;
};

/// Thrown when a document parses but breaks dataset invariants.
class ValidationError : public Error {
  public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<Violation>& vs) {
        std::string s = "validation failed";
        for (const auto& v : vs) {
            s += "\n  ";
            s += v.to_string();
        }
        return s;
    }

    std::vector<Violation> violations_;
};

/// Node id not present in the graph (or not usable, e.g. the start node).
struct UnknownNodeError : Error {
    using Error::Error;
};

/// Objective never declared by any reward channel.
struct UnknownObjectiveError : Error {
    using Error::Error;
};

/// Objective declared, but no channel for this exact factor set.
struct UnknownChannelError : Error {
    using Error::Error;
};

/// Query breaks its construction invariants (e.g. B + delta > L).
struct InvalidQueryError : Error {
    using Error::Error;
};

/// Bad generator/benchmark parameters or malformed domain tokens.
struct InvalidParamsError : Error {
    using Error::Error;
};

}  // namespace starop
