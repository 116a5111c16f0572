#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starop/bench.hpp"
#include "starop/dataset.hpp"
#include "starop/render.hpp"
#include "starop/solver.hpp"

namespace starop {

// Exit codes: 0 success, 1 usage errors, 2 data or query errors.

namespace detail {

struct SolveOptions {
    std::string graph_path;
    std::string start;
    double budget = 0.0;
    double slack = 0.0;
    double limit = std::numeric_limits<double>::infinity();
    std::size_t k = 3;
    std::string objective;
    std::vector<std::string> factors;
    std::vector<std::string> only;
    std::string format = "table";
};

struct BenchOptions {
    std::vector<std::uint64_t> sizes;
    std::size_t k = 10;
    std::uint64_t seed = 42;
    std::size_t reps = 5;
    std::string format = "table";
};

inline int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    Dataset dataset = load_dataset_file(opt.graph_path);
    for (const std::string& warning : dataset.warnings) err << "warning: " << warning << "\n";
    if (!opt.start.empty() && NodeId(opt.start) != dataset.graph.start)
        throw InvalidQueryError("start node '" + opt.start + "' does not match dataset start '" +
                                dataset.graph.start.token() + "'");

    Query query;
    query.budget = opt.budget;
    query.slack = opt.slack;
    query.limit = opt.limit;
    query.k = opt.k;
    query.objective = Objective(opt.objective);
    query.factors = FactorSet(opt.factors);
    if (!opt.only.empty()) {
        std::vector<NodeId> whitelist;
        whitelist.reserve(opt.only.size());
        for (const std::string& id : opt.only) whitelist.emplace_back(id);
        query.whitelist = std::move(whitelist);
    }

    GoalSet goals = solve(dataset.graph, dataset.rewards, query);
    out << render_goals(goals, parse_format(opt.format), dataset.graph, query);
    return 0;
}

inline int run_validate(const std::string& graph_path, std::ostream& out, std::ostream& err) {
    Dataset dataset = load_dataset_file(graph_path);
    for (const std::string& warning : dataset.warnings) err << "warning: " << warning << "\n";
    out << "ok: start " << dataset.graph.start.token() << ", " << dataset.graph.size()
        << " nodes, " << dataset.rewards.channels().size() << " reward channels\n";
    return 0;
}

inline int run_bench(const BenchOptions& opt, std::ostream& out, std::ostream&) {
    std::vector<std::size_t> sizes(opt.sizes.begin(), opt.sizes.end());
    if (sizes.empty()) sizes = {10000, 100000, 1000000};
    ScalingReport report = scaling_run(sizes, opt.k, opt.seed, opt.reps);
    if (opt.format == "json")
        out << render_scaling_json(report);
    else
        out << render_scaling_table(report);
    return 0;
}

}  // namespace detail

/// Full command-line entry point, factored out of main() so tests can drive
/// it with in-memory streams. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-optimal goal selection on star graphs"};
    app.name("starop");
    app.require_subcommand(1);

    detail::SolveOptions solve_opt;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Rank goal nodes for a query");
    solve_cmd->add_option("--graph", solve_opt.graph_path, "Dataset JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    solve_cmd->add_option("--start", solve_opt.start,
                          "Start node id; must match the dataset's start");
    solve_cmd->add_option("--budget", solve_opt.budget, "Soft budget B")->required();
    solve_cmd->add_option("--delta", solve_opt.slack, "Allowed overrun above B (default 0)");
    solve_cmd->add_option("--limit", solve_opt.limit, "Hard budget L (default unlimited)");
    solve_cmd->add_option("-k,--goals", solve_opt.k, "Number of goals to report (default 3)");
    solve_cmd->add_option("--objective", solve_opt.objective, "Objective name")->required();
    solve_cmd->add_option("--factor", solve_opt.factors, "Situational factor; repeatable")
        ->take_all();
    solve_cmd->add_option("--only", solve_opt.only, "Restrict candidates to these ids; repeatable")
        ->take_all();
    solve_cmd->add_option("--format", solve_opt.format, "Output format (default table)")
        ->check(CLI::IsMember({"table", "json", "geojson", "dot"}));

    std::string validate_path;
    CLI::App* validate_cmd = app.add_subcommand("validate", "Check a dataset file");
    validate_cmd->add_option("--graph", validate_path, "Dataset JSON file")
        ->required()
        ->check(CLI::ExistingFile);

    detail::BenchOptions bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Measure solver scaling");
    bench_cmd->add_option("--sizes", bench_opt.sizes, "Comma-separated instance sizes")
        ->delimiter(',');
    bench_cmd->add_option("-k,--goals", bench_opt.k, "Goals per timed query (default 10)");
    bench_cmd->add_option("--seed", bench_opt.seed, "Instance generator seed (default 42)");
    bench_cmd->add_option("--reps", bench_opt.reps, "Timed repetitions per size (default 5)");
    bench_cmd->add_option("--format", bench_opt.format, "Output format (default table)")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(solve_cmd)) return detail::run_solve(solve_opt, out, err);
        if (app.got_subcommand(validate_cmd)) return detail::run_validate(validate_path, out, err);
        if (app.got_subcommand(bench_cmd)) return detail::run_bench(bench_opt, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        for (const Violation& v : e.violations()) err << "  " << v.to_string() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace starop
