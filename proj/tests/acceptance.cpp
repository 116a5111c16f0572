// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Run by ctest as the "acceptance" test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "starop/cli.hpp"
#include "support.hpp"

using namespace starop;

namespace {

// Pinned tolerances: published costs carry two decimals (half-ulp 0.005 m),
// published base rewards four decimals (half-ulp 0.00005).
constexpr double kCostTol = 0.005;
constexpr double kRewardTol = 0.00005;

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::string line = (ok ? "PASS" : "FAIL");
    line += " " + std::to_string(index) + ": " + name;
    if (!detail.empty()) line += " [" + detail + "]";
    std::puts(line.c_str());
    if (!ok) ++failures;
}

struct ExpectedGoal {
    const char* id;
    double cost;
    double reward;
};

bool matches(const GoalSet& goals, const std::vector<ExpectedGoal>& expected, std::string& why) {
    if (goals.size() != expected.size()) {
        why = "expected " + std::to_string(expected.size()) + " goals, got " +
              std::to_string(goals.size());
        return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (goals[i].node.token() != expected[i].id) {
            why = "rank " + std::to_string(i + 1) + " is " + goals[i].node.token() + ", expected " +
                  expected[i].id;
            return false;
        }
        if (std::abs(goals[i].cost - expected[i].cost) > kCostTol) {
            why = "cost mismatch at rank " + std::to_string(i + 1);
            return false;
        }
        if (std::abs(goals[i].reward.value() - expected[i].reward) > kRewardTol) {
            why = "reward mismatch at rank " + std::to_string(i + 1);
            return false;
        }
    }
    return true;
}

Query fixture_query(double budget, double slack, std::size_t k,
                    std::vector<std::string> factors = {}) {
    Query q;
    q.budget = budget;
    q.slack = slack;
    q.k = k;
    q.objective = Objective("meeting_room");
    q.factors = FactorSet(std::move(factors));
    return q;
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << text;
    return path.string();
}

int run_cli_capture(const std::vector<std::string>& args, std::string& out_text,
                    std::string& err_text) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    out_text = out.str();
    err_text = err.str();
    return rc;
}

// Shared tallies: criteria 4 and 5 generate the property-test instances;
// criterion 6 asserts the invariants observed across all of them.
std::size_t feasibility_violations = 0;
std::size_t ordering_violations = 0;
std::size_t invariant_samples = 0;

void observe_invariants(const GoalSet& goals, const Query& query) {
    ++invariant_samples;
    if (!testsupport::all_feasible(goals, query)) ++feasibility_violations;
    if (!testsupport::well_ordered(goals)) ++ordering_violations;
}

void criterion_1(const Dataset& dataset) {
    Query q = fixture_query(200.0, 0.0, 3);
    GoalSet goals = solve(dataset.graph, dataset.rewards, q);  // warm caches
    auto t0 = std::chrono::steady_clock::now();
    goals = solve(dataset.graph, dataset.rewards, q);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    std::string why;
    bool ok = matches(goals,
                      {{"260", 77.69, 0.0020}, {"204", 70.25, 0.0014}, {"104", 70.64, 0.0007}},
                      why);
    if (ok && ms >= 10.0) {
        ok = false;
        why = "solve took " + std::to_string(ms) + " ms, limit 10";
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "%.3f ms", ms);
    report(1, "base ranking at B=200", ok, ok ? std::string(detail) : why);
}

void criterion_2(const Dataset& dataset) {
    GoalSet goals = solve(dataset.graph, dataset.rewards, fixture_query(200.0, 50.0, 3));
    std::string why;
    bool ok = matches(goals,
                      {{"102", 246.39, 0.0034}, {"260", 77.69, 0.0020}, {"204", 70.25, 0.0014}},
                      why);
    report(2, "slack ranking at B+delta=250", ok, why);
}

void criterion_3(const Dataset& dataset) {
    std::string why;
    GoalSet tight = solve(dataset.graph, dataset.rewards, fixture_query(200.0, 0.0, 3, {"covid"}));
    bool ok = matches(tight, {{"110", 124.13, 126.0}, {"105", 130.83, 111.0}, {"104", 70.64, 93.0}},
                      why);
    if (ok) {
        GoalSet loose =
            solve(dataset.graph, dataset.rewards, fixture_query(200.0, 50.0, 3, {"covid"}));
        ok = matches(loose, {{"110", 124.13, 126.0}, {"102", 246.39, 117.0}, {"105", 130.83, 111.0}},
                     why);
    }
    report(3, "factor channel rankings", ok, why);
}

void criterion_4() {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::size_t> ndist(0, 200);
    std::size_t mismatches = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (int round = 0; round < 1000; ++round) {
        InstanceParams params;
        params.n = ndist(rng);
        params.seed = 900000 + static_cast<std::uint64_t>(round);
        Instance instance = random_instance(params);
        Query query = testsupport::random_query(rng, instance, /*allow_whitelist=*/false);
        GoalSet fast = solve(instance.graph, instance.rewards, query);
        GoalSet slow = solve_bruteforce(instance.graph, instance.rewards, query);
        if (fast != slow) ++mismatches;
        observe_invariants(fast, query);
    }
    auto t1 = std::chrono::steady_clock::now();
    double seconds = std::chrono::duration<double>(t1 - t0).count();

    bool ok = mismatches == 0 && seconds < 60.0;
    char detail[96];
    std::snprintf(detail, sizeof detail, "%zu/1000 mismatches, %.1f s", mismatches, seconds);
    report(4, "oracle equivalence on 1000 instances", ok, detail);
}

void criterion_5() {
    std::mt19937_64 rng(171717);
    std::uniform_int_distribution<std::size_t> ndist(0, 200);
    std::size_t breaks = 0;
    for (int round = 0; round < 100; ++round) {
        InstanceParams params;
        params.n = ndist(rng);
        params.seed = 800000 + static_cast<std::uint64_t>(round);
        Instance instance = random_instance(params);
        Query query = testsupport::random_query(rng, instance, /*allow_whitelist=*/false);
        GoalSet full = solve(instance.graph, instance.rewards, query);
        observe_invariants(full, query);
        for (std::size_t j = 0; j <= full.size(); ++j) {
            Query prefix_query = query;
            prefix_query.k = j;
            GoalSet prefix = solve(instance.graph, instance.rewards, prefix_query);
            if (prefix != GoalSet(full.begin(), full.begin() + static_cast<long>(j))) {
                ++breaks;
                break;
            }
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "%zu/100 instances broke the prefix property", breaks);
    report(5, "anytime prefix property", breaks == 0, detail);
}

void criterion_6() {
    bool ok = feasibility_violations == 0 && ordering_violations == 0 && invariant_samples >= 1100;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "%zu samples, %zu feasibility / %zu ordering violations", invariant_samples,
                  feasibility_violations, ordering_violations);
    report(6, "feasibility and ordering invariants", ok, detail);
}

void criterion_7() {
    std::string fixture = testsupport::data_path("parkville.json");
    std::string geo_fixture = write_temp("starop_acceptance_geo.json",
                                         testsupport::geo_dataset_text());
    struct Case {
        std::vector<std::string> args;
    };
    std::vector<Case> cases;
    for (const char* format : {"table", "json", "dot"})
        cases.push_back({{"solve", "--graph", fixture, "--budget", "200", "--delta", "50",
                          "--objective", "meeting_room", "--factor", "covid", "--format",
                          format}});
    cases.push_back({{"solve", "--graph", geo_fixture, "--budget", "100", "--objective", "room",
                      "--format", "geojson"}});

    bool ok = true;
    std::string why;
    for (const Case& c : cases) {
        std::string out1, out2, err1, err2;
        int rc1 = run_cli_capture(c.args, out1, err1);
        int rc2 = run_cli_capture(c.args, out2, err2);
        if (rc1 != 0 || rc2 != 0) {
            ok = false;
            why = "--format " + c.args.back() + " exited " + std::to_string(rc1);
            break;
        }
        if (out1 != out2 || out1.empty()) {
            ok = false;
            why = "--format " + c.args.back() + " output differed between runs";
            break;
        }
    }
    report(7, "byte-identical CLI output across reruns", ok, why);
}

void criterion_8() {
    bool peak_ok = true;
    for (std::size_t n : {std::size_t{0}, std::size_t{100}, std::size_t{5000}}) {
        if (memory_probe(n, 21) > n) peak_ok = false;
        if (memory_probe(n, 21, 100.0) > n) peak_ok = false;
    }

    ScalingReport scaling = scaling_run({10000, 100000, 1000000}, 10, 42, 5);
    double biggest_median = scaling.rows.back().median_seconds;
    bool scaling_ok = !scaling.superlinearithmic && biggest_median <= 5.0;
    for (const ScalingRow& row : scaling.rows)
        if (row.peak_candidates > row.n) peak_ok = false;

    bool ok = peak_ok && scaling_ok;
    char detail[160];
    std::snprintf(detail, sizeof detail, "peak<=n %s; %s; n=10^6 median %.3f s",
                  peak_ok ? "yes" : "NO", scaling.growth.c_str(), biggest_median);
    report(8, "occupancy bound and no super-linearithmic growth", ok, detail);
}

void criterion_9() {
    struct Case {
        const char* name;
        const char* code;
        std::string text;
    };
    std::vector<Case> cases{
        {"starop_acceptance_selfedge.json", "self-edge",
         R"({"start": "s", "nodes": [{"id": "s", "cost": 1.0}]})"},
        {"starop_acceptance_dup.json", "duplicate-id",
         R"({"start": "s", "nodes": [{"id": "a", "cost": 1.0}, {"id": "a", "cost": 2.0}]})"},
        {"starop_acceptance_neg.json", "negative-cost",
         R"({"start": "s", "nodes": [{"id": "a", "cost": -5.0}]})"},
    };

    bool ok = true;
    std::string why;
    for (const Case& c : cases) {
        std::string path = write_temp(c.name, c.text);
        std::string out, err;
        int rc = run_cli_capture({"validate", "--graph", path}, out, err);
        if (rc != 2) {
            ok = false;
            why = std::string(c.code) + " file exited " + std::to_string(rc) + ", expected 2";
            break;
        }
        if (err.find(c.code) == std::string::npos) {
            ok = false;
            why = std::string("stderr did not name ") + c.code;
            break;
        }
    }
    report(9, "non-star inputs rejected with named violations", ok, why);
}

}  // namespace

int main() {
    Dataset dataset = testsupport::load_parkville();
    criterion_1(dataset);
    criterion_2(dataset);
    criterion_3(dataset);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
