#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wcgen/graph.hpp"
#include "wcgen/rng.hpp"

namespace wcgen {

// Random tree with maximum degree 4 and no edge joining two degree-4 nodes.
struct TreeGraph {
    Graph graph;
    std::uint64_t rng_seed = 0;

    int node_count() const { return graph.vertex_count(); }
};

inline void require_bounded_tree(const Graph& t) {
    if (t.vertex_count() == 0) throw std::invalid_argument("tree must have at least one node");
    if (t.edge_count() != t.vertex_count() - 1 || !is_connected(t))
        throw std::invalid_argument("graph is not a tree");
    for (Vertex v = 0; v < t.vertex_count(); ++v)
        if (t.degree(v) > 4) throw std::invalid_argument("tree exceeds the degree-4 bound");
}

// Replaces every edge joining two degree-4 nodes by a path through a fresh
// node. Subdividing leaves all existing degrees unchanged and the new node has
// degree 2, so one pass over the offending edges settles the whole tree.
inline TreeGraph separate_adjacent_degree4(TreeGraph t) {
    require_bounded_tree(t.graph);
    std::vector<std::pair<Vertex, Vertex>> bad;
    for (const auto& [u, w] : t.graph.edges())
        if (t.graph.degree(u) == 4 && t.graph.degree(w) == 4) bad.emplace_back(u, w);
    for (const auto& [u, w] : bad) {
        const Vertex x = t.graph.add_vertex();
        t.graph.remove_edge(u, w);
        t.graph.add_edge(u, x);
        t.graph.add_edge(x, w);
    }
    return t;
}

// Grows a tree to at least k_target nodes: each step either splits a random
// edge in two or attaches a fresh leaf to a random node that still has a free
// slot. The degree-4 separation pass runs at the end and may add a few more
// nodes; callers trim later anyway.
inline TreeGraph grow_tree(int k_target, Rng& rng, double split_probability = 0.5) {
    if (k_target < 1) throw std::invalid_argument("grow_tree requires k_target >= 1");
    TreeGraph t;
    t.rng_seed = rng.seed();
    t.graph = Graph(1);
    while (t.graph.vertex_count() < k_target) {
        const bool split = t.graph.edge_count() > 0 && rng.coin(split_probability);
        if (split) {
            const auto es = t.graph.edges();
            const auto& [u, w] =
                es[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(es.size()) - 1))];
            const Vertex x = t.graph.add_vertex();
            t.graph.remove_edge(u, w);
            t.graph.add_edge(u, x);
            t.graph.add_edge(x, w);
        } else {
            std::vector<Vertex> open;
            for (Vertex v = 0; v < t.graph.vertex_count(); ++v)
                if (t.graph.degree(v) < 4) open.push_back(v);
            const Vertex at =
                open[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(open.size()) - 1))];
            const Vertex leaf = t.graph.add_vertex();
            t.graph.add_edge(at, leaf);
        }
    }
    return separate_adjacent_degree4(std::move(t));
}

}  // namespace wcgen
