#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcgen/baseline.hpp"
#include "wcgen/inserter.hpp"
#include "wcgen/oracle.hpp"

namespace wcgen {

struct BenchConfig {
    std::vector<int> n_list;
    std::vector<double> density_list;  // target m = round(d * n), clamped to the valid range
    int seeds = 1;
    std::vector<Method> methods;
    OracleGate gate = OracleGate::Auto;
    int gate_threshold = 64;
    int verify_max_n = 64;  // emitted graphs up to this size are re-certified
};

struct BenchRecord {
    Method method = Method::Separator;
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    double layout_ms = 0.0;
    double insert_loop_ms = 0.0;
    double query_median_us = 0.0;
    double query_p95_us = 0.0;
    double mutation_median_ns = 0.0;
    long attempts = 0;
    long inserted = 0;
    long rejected_existing = 0;
    long rejected_long_path = 0;
    long rejected_forbidden = 0;
    long rejected_alternate = 0;
    long rejected_oracle_veto = 0;
    long fallback_insertions = 0;
    long oracle_vetoes = 0;
    bool early_return = false;
    int verified = -1;  // 1 pass, 0 fail, -1 skipped
};

namespace detail {

inline double percentile(std::vector<long> xs, double q) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const double pos = q * (static_cast<double>(xs.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, xs.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return static_cast<double>(xs[lo]) * (1.0 - frac) + static_cast<double>(xs[hi]) * frac;
}

}  // namespace detail

inline int density_to_edges(int n, double density) {
    const long max_edges = static_cast<long>(n) * (n - 1) / 2;
    long m = std::lround(density * n);
    m = std::max(m, static_cast<long>(n - 1));
    m = std::min(m, max_edges);
    return static_cast<int>(m);
}

inline std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    if (config.n_list.empty() || config.density_list.empty() || config.methods.empty() ||
        config.seeds < 1)
        throw std::invalid_argument("bench needs sizes, densities, methods and at least one seed");

    std::vector<BenchRecord> records;
    for (Method method : config.methods) {
        for (int n : config.n_list) {
            for (double density : config.density_list) {
                for (int s = 0; s < config.seeds; ++s) {
                    GenParams params;
                    params.n = n;
                    params.m = density_to_edges(n, density);
                    params.seed = static_cast<std::uint64_t>(s) + 1;
                    params.method = method;
                    params.gate = config.gate;
                    params.gate_threshold = config.gate_threshold;
                    params.record_timings = true;

                    Rng rng(params.seed);
                    auto [graph, trace] = method == Method::Separator
                                              ? generate(params, rng)
                                              : generate_two_pair_method(params, rng);

                    BenchRecord r;
                    r.method = method;
                    r.n = n;
                    r.m = params.m;
                    r.seed = params.seed;
                    r.layout_ms = trace.layout_ms;
                    r.insert_loop_ms = trace.insert_loop_ms;
                    r.query_median_us = detail::percentile(trace.query_ns, 0.5) / 1000.0;
                    r.query_p95_us = detail::percentile(trace.query_ns, 0.95) / 1000.0;
                    r.mutation_median_ns = detail::percentile(trace.mutation_ns, 0.5);
                    r.attempts = trace.counters.attempts;
                    r.inserted =
                        trace.counters.by_outcome[static_cast<std::size_t>(Outcome::Inserted)];
                    r.rejected_existing = trace.counters.by_outcome[static_cast<std::size_t>(
                        Outcome::RejectedExistingEdge)];
                    r.rejected_long_path = trace.counters.by_outcome[static_cast<std::size_t>(
                        Outcome::RejectedLongShortestPath)];
                    r.rejected_forbidden = trace.counters.by_outcome[static_cast<std::size_t>(
                        Outcome::RejectedForbiddenConfig)];
                    r.rejected_alternate = trace.counters.by_outcome[static_cast<std::size_t>(
                        Outcome::RejectedAlternateLongerPath)];
                    r.rejected_oracle_veto = trace.counters.by_outcome[static_cast<std::size_t>(
                        Outcome::RejectedOracleVeto)];
                    r.fallback_insertions = trace.counters.fallback_two_pair_insertions;
                    r.oracle_vetoes = trace.counters.oracle_vetoes;
                    r.early_return = trace.early_return;
                    if (n <= config.verify_max_n)
                        r.verified = is_weakly_chordal(graph).weakly_chordal ? 1 : 0;
                    records.push_back(r);
                }
            }
        }
    }
    return records;
}

inline std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "method,n,m,seed,layout_ms,insert_loop_ms,query_median_us,query_p95_us,"
           "mutation_median_ns,attempts,inserted,rejected_existing,rejected_long_path,"
           "rejected_forbidden,rejected_alternate,rejected_oracle_veto,fallback_insertions,"
           "oracle_vetoes,early_return,verified\n";
    for (const auto& r : records) {
        out << to_string(r.method) << ',' << r.n << ',' << r.m << ',' << r.seed << ','
            << r.layout_ms << ',' << r.insert_loop_ms << ',' << r.query_median_us << ','
            << r.query_p95_us << ',' << r.mutation_median_ns << ',' << r.attempts << ','
            << r.inserted << ',' << r.rejected_existing << ',' << r.rejected_long_path << ','
            << r.rejected_forbidden << ',' << r.rejected_alternate << ','
            << r.rejected_oracle_veto << ',' << r.fallback_insertions << ',' << r.oracle_vetoes
            << ',' << (r.early_return ? 1 : 0) << ','
            << (r.verified < 0 ? "skipped" : (r.verified ? "yes" : "no")) << '\n';
    }
    return out.str();
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("slope needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        const double lx = std::log(std::max(x, 1e-12));
        const double ly = std::log(std::max(y, 1e-12));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double k = static_cast<double>(points.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

// Median per n of the per-run medians, for the given method and field.
inline std::vector<std::pair<double, double>> median_by_n(
    const std::vector<BenchRecord>& records, Method method,
    double BenchRecord::* field) {
    std::map<int, std::vector<long>> grouped;
    for (const auto& r : records)
        if (r.method == method)
            grouped[r.n].push_back(static_cast<long>(r.*field * 1000.0));  // keep precision
    std::vector<std::pair<double, double>> points;
    for (auto& [n, xs] : grouped)
        points.emplace_back(static_cast<double>(n), detail::percentile(xs, 0.5) / 1000.0);
    return points;
}

}  // namespace wcgen
