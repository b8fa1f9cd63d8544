#pragma once

// Shared test material: the fixture graphs used across the suites, exhaustive
// brute-force recognizers that act as independent ground truth, and small
// random-graph generators.

#include <algorithm>
#include <utility>
#include <vector>

#include "wcgen/baseline.hpp"
#include "wcgen/graph.hpp"
#include "wcgen/rng.hpp"

namespace testutil {

using wcgen::Graph;
using wcgen::Vertex;
using wcgen::VertexSet;

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Three 4-cycles in a row: squares (0,3,5,4), (4,5,6,7), (1,2,6,7).
inline Graph fixture_f1() {
    return graph_from_edges(8, {{0, 3}, {0, 4}, {3, 5}, {4, 5}, {4, 7},
                                {5, 6}, {6, 7}, {2, 6}, {1, 2}, {1, 7}});
}

// Two internally disjoint length-3 paths with both parallel cross edges and no
// alternates; adding (u, v) leaves a chordless six-cycle in the complement.
// ids: u=0 a=1 b=2 v=3 d=4 c=5
namespace f2 {
inline constexpr Vertex u = 0, a = 1, b = 2, v = 3, d = 4, c = 5;
}
inline Graph fixture_f2() {
    return graph_from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 5}, {5, 4}, {4, 3}, {1, 5}, {2, 4}});
}

// As f2 but with the alternate cross edges instead; adding (u, v) is safe.
inline Graph fixture_f3() {
    return graph_from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 5}, {5, 4}, {4, 3}, {1, 4}, {2, 5}});
}

// Candidate pair whose longer connections are only visible through the
// neighbors of neighbors of the single common neighbor.
// ids: u=0 v=1 a=2 b=3 c=4 d=5 e=6
namespace f4 {
inline constexpr Vertex u = 0, v = 1, a = 2, b = 3, c = 4, d = 5, e = 6;
}
inline Graph fixture_f4() {
    return graph_from_edges(7, {{0, 2}, {2, 1}, {2, 3}, {2, 5}, {3, 1},
                                {3, 5}, {0, 4}, {4, 5}, {5, 6}, {6, 1}});
}

// ---- exhaustive ground truth (small n only) ----

// Does any vertex subset of size >= 5 induce a cycle? A subset induces a cycle
// exactly when it is connected and every member has induced degree 2.
inline bool brute_has_hole(const Graph& g) {
    const int n = g.vertex_count();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (static_cast<int>(__builtin_popcountl(mask)) < 5) continue;
        std::vector<Vertex> members;
        for (int v = 0; v < n; ++v)
            if (mask & (1ul << v)) members.push_back(v);
        bool all_degree_two = true;
        for (Vertex v : members) {
            int deg = 0;
            for (Vertex w : members)
                if (w != v && g.has_edge(v, w)) ++deg;
            if (deg != 2) {
                all_degree_two = false;
                break;
            }
        }
        if (!all_degree_two) continue;
        // connected?
        std::vector<Vertex> queue{members.front()};
        VertexSet seen{members.front()};
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex w : members)
                if (!seen.count(w) && g.has_edge(queue[head], w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
        if (seen.size() == members.size()) return true;
    }
    return false;
}

inline bool brute_weakly_chordal(const Graph& g) {
    return !brute_has_hole(g) && !brute_has_hole(wcgen::complement(g));
}

// Checks a reported cycle really is a chordless cycle of length >= 5.
inline bool valid_hole(const Graph& g, const std::vector<Vertex>& cycle) {
    if (cycle.size() < 5) return false;
    VertexSet distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) return false;
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

// ---- random instances ----

inline Graph random_graph(int n, double edge_prob, wcgen::Rng& rng) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.coin(edge_prob)) g.add_edge(u, v);
    return g;
}

// Weakly chordal instance via the two-pair construction.
inline Graph random_wc_graph(int n, int m, wcgen::Rng& rng) {
    Graph g = wcgen::random_spanning_tree(n, rng);
    while (g.edge_count() < m) {
        const auto pair = wcgen::find_random_two_pair(g, rng);
        if (!pair) break;
        g.add_edge(pair->first, pair->second);
    }
    return g;
}

// Brute-force isomorphism for small graphs.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace testutil
