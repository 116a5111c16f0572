#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "starop/oracle.hpp"
#include "starop/solver.hpp"

namespace starop {

struct ScalingRow {
    std::size_t n = 0;
    std::size_t k = 0;
    double median_seconds = 0.0;
    std::size_t peak_candidates = 0;
    /// median_seconds / (n * log2(max(n, 2)))
    double ratio = 0.0;
};

/// Empirical scaling measurement. The claims are asymptotic, so the report
/// checks growth rates, not absolute times: a super-linearithmic flag is
/// raised when the time/(n*log2 n) ratios spread by more than 3x across the
/// sizes with n >= 10^4.
struct ScalingReport {
    std::vector<ScalingRow> rows;  // sorted by n
    std::string growth;
    bool superlinearithmic = false;
};

namespace bench_detail {

inline double nlogn(std::size_t n) {
    double d = static_cast<double>(n);
    return d * std::log2(std::max(d, 2.0));
}

inline Instance make_instance(std::size_t n, std::uint64_t seed) {
    InstanceParams params;
    params.n = n;
    params.seed = seed;
    return random_instance(params);
}

// All-feasible budget for instances from make_instance (costs <= 500).
inline constexpr double kFullBudget = 500.0;

}  // namespace bench_detail

/// Times solve() on one seeded instance per size and reports the median of
/// `repetitions` runs. Single-threaded to keep timings stable.
inline ScalingReport scaling_run(std::vector<std::size_t> sizes, std::size_t k,
                                 std::uint64_t seed, std::size_t repetitions) {
    if (sizes.empty()) throw InvalidParamsError("scaling run needs at least one size");
    if (repetitions < 1) throw InvalidParamsError("repetitions must be >= 1");
    std::sort(sizes.begin(), sizes.end());

    ScalingReport report;
    volatile std::size_t sink = 0;
    for (std::size_t n : sizes) {
        Instance instance = bench_detail::make_instance(n, seed + n);
        Query query;
        query.budget = bench_detail::kFullBudget;
        query.k = k;
        query.objective = instance.objective;
        query.factors = instance.factors;

        std::vector<double> times;
        times.reserve(repetitions);
        for (std::size_t rep = 0; rep < repetitions; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            GoalSet goals = solve(instance.graph, instance.rewards, query);
            auto t1 = std::chrono::steady_clock::now();
            sink = sink + goals.size();
            times.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];

        ScalingRow row;
        row.n = n;
        row.k = k;
        row.median_seconds = median;
        row.peak_candidates = build_queue(instance.graph, instance.rewards, query).peak_size();
        row.ratio = median / bench_detail::nlogn(n);
        report.rows.push_back(row);
    }

    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (const ScalingRow& row : report.rows) {
        if (row.n < 10000) continue;
        if (!any || row.ratio < lo) lo = any ? std::min(lo, row.ratio) : row.ratio;
        hi = std::max(hi, row.ratio);
        any = true;
    }
    if (any && lo > 0.0 && hi / lo > 3.0) report.superlinearithmic = true;

    // Log-log slope of time vs n, least squares over measurable rows.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (const ScalingRow& row : report.rows) {
        if (row.n < 2 || row.median_seconds <= 0.0) continue;
        double x = std::log(static_cast<double>(row.n)), y = std::log(row.median_seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m >= 2 && sxx * m - sx * sx != 0.0) {
        double slope = (sxy * m - sx * sy) / (sxx * m - sx * sx);
        char buf[64];
        std::snprintf(buf, sizeof buf, "log-log slope %.2f", slope);
        report.growth = buf;
        if (any && lo > 0.0) {
            std::snprintf(buf, sizeof buf, "; time/(n log2 n) max/min %.2f", hi / lo);
            report.growth += buf;
        }
    } else {
        report.growth = "too few measurable rows to fit growth";
    }
    return report;
}

/// Maximum number of Candidate entries simultaneously held while solving a
/// seeded instance of size n; always <= n because candidates are filtered
/// before insertion. Occupancy is counted logically (entries), not bytes.
inline std::size_t memory_probe(std::size_t n, std::uint64_t seed,
                                double budget = bench_detail::kFullBudget) {
    Instance instance = bench_detail::make_instance(n, seed);
    Query query;
    query.budget = budget;
    query.k = n;
    query.objective = instance.objective;
    query.factors = instance.factors;
    QueueState state = build_queue(instance.graph, instance.rewards, query);
    std::size_t peak = state.peak_size();
    while (state.pop_next()) {
    }
    return peak;
}

}  // namespace starop
