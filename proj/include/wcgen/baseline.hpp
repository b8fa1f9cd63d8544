#pragma once

#include <chrono>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wcgen/graph.hpp"
#include "wcgen/oracle.hpp"
#include "wcgen/rng.hpp"
#include "wcgen/trace.hpp"

namespace wcgen {

// Uniform random labeled tree via sequence decoding (degree = multiplicity + 1,
// repeatedly attach the smallest leaf).
inline Graph random_spanning_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_spanning_tree requires n >= 1");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = static_cast<int>(rng.uniform_int(0, n - 1));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    for (int s : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, s);
        if (--degree[static_cast<std::size_t>(s)] == 1) leaves.push(s);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    g.add_edge(a, b);
    return g;
}

// Uniformly random two-pair of g, or nothing when the graph is complete. A
// plain scan over a shuffled pair list; the contract leaves room for a faster
// search behind the same signature.
inline std::optional<std::pair<Vertex, Vertex>> find_random_two_pair(const Graph& g, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> candidates;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) candidates.emplace_back(u, v);
    rng.shuffle(candidates);
    for (const auto& [u, v] : candidates)
        if (is_two_pair(g, u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

// Comparison generator: random spanning tree, then two-pair insertions until m
// edges. Every intermediate graph is weakly chordal, and a two-pair always
// exists below the complete graph, so this cannot stall.
inline std::pair<Graph, GenTrace> generate_two_pair_method(const GenParams& params, Rng& rng) {
    const int n = params.n;
    const long max_edges = static_cast<long>(n) * (n - 1) / 2;
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (params.m < n - 1 || static_cast<long>(params.m) > max_edges)
        throw std::invalid_argument("edge count must lie in [n-1, n(n-1)/2]");

    using clock = std::chrono::steady_clock;
    GenTrace trace;
    trace.params = params;

    const auto t0 = clock::now();
    Graph g = random_spanning_tree(n, rng);
    trace.layout_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    trace.initial_edge_count = g.edge_count();

    const auto t1 = clock::now();
    while (g.edge_count() < params.m) {
        const auto q0 = clock::now();
        const auto pair = find_random_two_pair(g, rng);
        if (params.record_timings)
            trace.query_ns.push_back(static_cast<long>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - q0).count()));
        if (!pair) throw std::logic_error("no two-pair available below the target edge count");
        const auto m0 = clock::now();
        g.add_edge(pair->first, pair->second);
        if (params.record_timings)
            trace.mutation_ns.push_back(static_cast<long>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - m0).count()));
        trace.fallback_insertions.push_back(*pair);
        ++trace.counters.fallback_two_pair_insertions;
    }
    trace.insert_loop_ms = std::chrono::duration<double, std::milli>(clock::now() - t1).count();
    return {std::move(g), std::move(trace)};
}

}  // namespace wcgen
