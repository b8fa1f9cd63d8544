#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wcgen/graph.hpp"
#include "wcgen/rng.hpp"
#include "wcgen/tree.hpp"

namespace wcgen {

// The edge-sharing 4-cycle layout built from a bounded-degree tree, possibly
// after trimming down to a requested vertex count.
struct LayoutResult {
    Graph graph;
    int initial_edge_count = 0;  // edge count of this layout (m')
    // tree node -> its 4-cycle, in cycle order; entries become -1 once trimmed
    std::vector<std::array<Vertex, 4>> square_of_node;
    std::vector<Vertex> trimmed;       // deleted vertices, pre-trim ids
    std::vector<Vertex> original_ids;  // current id -> pre-trim id
    std::vector<char> in_leaf_square;  // current id -> lies in a tree-leaf square
};

// One 4-cycle per tree node; a child's square is glued onto a free side of its
// parent's square, so it shares that side's edge and two vertices. Fresh
// corners everywhere else give 2k+2 vertices and 3k+1 edges for k nodes. Sides
// are claimed opposite-first, which keeps chains of squares in a straight line.
inline LayoutResult layout_from_tree(const TreeGraph& t) {
    require_bounded_tree(t.graph);
    const int k = t.graph.vertex_count();

    LayoutResult r;
    r.graph = Graph(0);
    r.square_of_node.assign(static_cast<std::size_t>(k), {-1, -1, -1, -1});

    // Per node, the sides still available for children, each as an ordered
    // vertex pair of that node's square.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> free_sides(static_cast<std::size_t>(k));
    std::vector<char> placed(static_cast<std::size_t>(k), 0);

    auto place_square = [&](int node, std::pair<Vertex, Vertex> glued) {
        const bool root = glued.first < 0;
        Vertex a, b;
        if (root) {
            a = r.graph.add_vertex();
            b = r.graph.add_vertex();
        } else {
            a = glued.first;
            b = glued.second;
        }
        const Vertex c = r.graph.add_vertex();
        const Vertex d = r.graph.add_vertex();
        // cycle a-b-c-d; for a glued square the edge a-b already exists
        if (root) r.graph.add_edge(a, b);
        r.graph.add_edge(b, c);
        r.graph.add_edge(c, d);
        r.graph.add_edge(d, a);
        r.square_of_node[static_cast<std::size_t>(node)] = {a, b, c, d};
        auto& sides = free_sides[static_cast<std::size_t>(node)];
        sides.push_back({c, d});  // opposite the glued side first
        sides.push_back({b, c});
        sides.push_back({d, a});
        if (root) sides.push_back({a, b});
        placed[static_cast<std::size_t>(node)] = 1;
    };

    place_square(0, {-1, -1});
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int node = queue[head];
        for (Vertex child : t.graph.neighbors(node)) {
            if (placed[static_cast<std::size_t>(child)]) continue;
            auto& sides = free_sides[static_cast<std::size_t>(node)];
            if (sides.empty()) throw std::logic_error("layout: square ran out of sides");
            const auto side = sides.front();
            sides.erase(sides.begin());
            place_square(child, side);
            queue.push_back(child);
        }
    }

    if (r.graph.vertex_count() != 2 * k + 2 || r.graph.edge_count() != 3 * k + 1)
        throw std::logic_error("layout: vertex/edge counts off");

    r.initial_edge_count = r.graph.edge_count();
    r.original_ids.resize(static_cast<std::size_t>(r.graph.vertex_count()));
    for (Vertex v = 0; v < r.graph.vertex_count(); ++v)
        r.original_ids[static_cast<std::size_t>(v)] = v;
    r.in_leaf_square.assign(static_cast<std::size_t>(r.graph.vertex_count()), 0);
    for (int node = 0; node < k; ++node) {
        if (t.graph.degree(node) > 1) continue;
        for (Vertex v : r.square_of_node[static_cast<std::size_t>(node)])
            r.in_leaf_square[static_cast<std::size_t>(v)] = 1;
    }
    return r;
}

namespace detail {

inline bool connected_without(const Graph& g, const std::vector<char>& alive, Vertex skip,
                              int alive_count) {
    if (alive_count - 1 <= 1) return true;
    Vertex start = -1;
    for (Vertex v = 0; v < g.vertex_count() && start < 0; ++v)
        if (alive[static_cast<std::size_t>(v)] && v != skip) start = v;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int visited = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.neighbors(queue[head])) {
            if (seen[static_cast<std::size_t>(w)] || !alive[static_cast<std::size_t>(w)] || w == skip)
                continue;
            seen[static_cast<std::size_t>(w)] = 1;
            ++visited;
            queue.push_back(w);
        }
    }
    return visited == alive_count - 1;
}

}  // namespace detail

// Deletes vertices of degree at most two, one at a time, never disconnecting
// the graph, until exactly n remain. Leaf squares go first, and within one,
// lower current degree first, so a started square is consumed before the next
// one is touched. Ids are re-densified at the end.
inline void trim_to_n(LayoutResult& layout, int n) {
    if (n < 1) throw std::invalid_argument("trim_to_n requires n >= 1");
    if (n > layout.graph.vertex_count())
        throw std::invalid_argument("trim_to_n: target exceeds current vertex count");

    Graph work = layout.graph;
    std::vector<char> alive(static_cast<std::size_t>(work.vertex_count()), 1);
    int alive_count = work.vertex_count();
    std::vector<Vertex> deleted;

    while (alive_count > n) {
        Vertex best = -1;
        std::pair<int, int> best_key{0, 0};  // (leaf rank, degree)
        for (Vertex v = 0; v < work.vertex_count(); ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            const int deg = work.degree(v);
            if (deg > 2) continue;
            const std::pair<int, int> key{layout.in_leaf_square[static_cast<std::size_t>(v)] ? 0 : 1,
                                          deg};
            if (best >= 0 && key >= best_key) continue;
            if (!detail::connected_without(work, alive, v, alive_count)) continue;
            best = v;
            best_key = key;
        }
        if (best < 0) throw std::runtime_error("trim_to_n: no removable low-degree vertex");
        const VertexSet nbrs = work.neighbors(best);
        for (Vertex w : nbrs) work.remove_edge(best, w);
        alive[static_cast<std::size_t>(best)] = 0;
        --alive_count;
        deleted.push_back(best);
    }
    if (deleted.empty()) return;

    // compact ids
    std::vector<Vertex> to_new(static_cast<std::size_t>(work.vertex_count()), -1);
    Graph compacted(alive_count);
    std::vector<Vertex> new_original(static_cast<std::size_t>(alive_count));
    std::vector<char> new_leaf(static_cast<std::size_t>(alive_count), 0);
    int next = 0;
    for (Vertex v = 0; v < work.vertex_count(); ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        to_new[static_cast<std::size_t>(v)] = next;
        new_original[static_cast<std::size_t>(next)] =
            layout.original_ids[static_cast<std::size_t>(v)];
        new_leaf[static_cast<std::size_t>(next)] = layout.in_leaf_square[static_cast<std::size_t>(v)];
        ++next;
    }
    for (const auto& [u, w] : work.edges())
        compacted.add_edge(to_new[static_cast<std::size_t>(u)], to_new[static_cast<std::size_t>(w)]);

    for (auto& square : layout.square_of_node)
        for (auto& v : square)
            v = v >= 0 ? to_new[static_cast<std::size_t>(v)] : -1;
    for (Vertex v : deleted)
        layout.trimmed.push_back(layout.original_ids[static_cast<std::size_t>(v)]);
    layout.graph = std::move(compacted);
    layout.original_ids = std::move(new_original);
    layout.in_leaf_square = std::move(new_leaf);
    layout.initial_edge_count = layout.graph.edge_count();
}

struct InitialLayout {
    LayoutResult layout;
    bool early_return = false;  // the layout alone already reaches m edges
};

// Tree on ceil(n/2) nodes, squares, then trim to exactly n vertices. When the
// trimmed layout already has at least m edges the caller is told to stop and
// emit it as-is.
inline InitialLayout build_initial_layout(int n, int m, Rng& rng,
                                          double split_probability = 0.5) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    const long max_edges = static_cast<long>(n) * (n - 1) / 2;
    if (m < n - 1 || static_cast<long>(m) > max_edges)
        throw std::invalid_argument("edge count must lie in [n-1, n(n-1)/2]");

    TreeGraph t = grow_tree((n + 1) / 2, rng, split_probability);
    LayoutResult layout = layout_from_tree(t);
    trim_to_n(layout, n);
    const bool early = layout.initial_edge_count >= m;
    return {std::move(layout), early};
}

}  // namespace wcgen
