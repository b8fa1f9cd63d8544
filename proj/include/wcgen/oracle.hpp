#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wcgen/graph.hpp"

namespace wcgen {

// A chordless cycle of length >= 5, tagged with the side it was found on.
struct HoleWitness {
    enum class Side { Graph, Complement };
    Side side = Side::Graph;
    std::vector<Vertex> cycle;
};

inline const char* to_string(HoleWitness::Side s) {
    return s == HoleWitness::Side::Graph ? "graph" : "complement";
}

// Looks for a chordless cycle of length >= 5. Every such cycle contains an
// induced path w-x-y-z on four vertices, and conversely a shortest w-z
// reconnection that avoids N[x] and N[y] closes one: internal vertices see
// neither x nor y, shortest implies no chords among themselves, and w,z are
// non-adjacent, so the cycle has length >= 5 and no chord at all. Scanning all
// induced four-vertex paths is therefore a complete test.
inline std::optional<std::vector<Vertex>> find_hole(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> banned(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);

    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y : g.neighbors(x)) {
            if (y < x) continue;  // one orientation of the middle edge suffices
            for (Vertex v = 0; v < n; ++v) banned[static_cast<std::size_t>(v)] = 0;
            for (Vertex a : g.neighbors(x)) banned[static_cast<std::size_t>(a)] = 1;
            for (Vertex a : g.neighbors(y)) banned[static_cast<std::size_t>(a)] = 1;
            banned[static_cast<std::size_t>(x)] = 1;
            banned[static_cast<std::size_t>(y)] = 1;

            for (Vertex w : g.neighbors(x)) {
                if (w == y || g.has_edge(w, y)) continue;
                for (Vertex z : g.neighbors(y)) {
                    if (z == x || z == w || g.has_edge(z, x) || g.has_edge(z, w)) continue;

                    // shortest z -> w path outside N[x] u N[y]
                    std::vector<char> seen(banned);
                    seen[static_cast<std::size_t>(w)] = 0;
                    seen[static_cast<std::size_t>(z)] = 0;
                    std::vector<Vertex> queue{z};
                    seen[static_cast<std::size_t>(z)] = 1;
                    parent[static_cast<std::size_t>(z)] = -1;
                    bool found = false;
                    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
                        for (Vertex b : g.neighbors(queue[head])) {
                            if (seen[static_cast<std::size_t>(b)]) continue;
                            seen[static_cast<std::size_t>(b)] = 1;
                            parent[static_cast<std::size_t>(b)] = queue[head];
                            if (b == w) {
                                found = true;
                                break;
                            }
                            queue.push_back(b);
                        }
                    }
                    if (!found) continue;

                    std::vector<Vertex> cycle{x, y};
                    std::vector<Vertex> back;
                    for (Vertex b = w; b != -1; b = parent[static_cast<std::size_t>(b)])
                        back.push_back(b);
                    cycle.insert(cycle.end(), back.rbegin(), back.rend());
                    return cycle;
                }
            }
        }
    }
    return std::nullopt;
}

struct WcCheck {
    bool weakly_chordal = false;
    std::optional<HoleWitness> witness;
    explicit operator bool() const { return weakly_chordal; }
};

// Neither the graph nor its complement may contain a chordless cycle of
// length five or more.
inline WcCheck is_weakly_chordal(const Graph& g) {
    if (auto cycle = find_hole(g))
        return {false, HoleWitness{HoleWitness::Side::Graph, std::move(*cycle)}};
    if (auto cycle = find_hole(complement(g)))
        return {false, HoleWitness{HoleWitness::Side::Complement, std::move(*cycle)}};
    return {true, std::nullopt};
}

// A two-pair is a non-adjacent, connected pair whose chordless connecting
// paths all have length two; equivalently, removing the common neighborhood
// separates the endpoints. Pairs in different components are not accepted.
inline bool is_two_pair(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("is_two_pair requires distinct vertices");
    if (g.has_edge(u, v)) return false;
    if (!reachable(g, u, v)) return false;
    return !reachable(g, u, v, common_neighbors(g, u, v));
}

// An edge is peripheral when it is not the middle edge of any chordless
// four-vertex path.
inline bool is_peripheral_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("is_peripheral_edge: edge absent");
    for (Vertex x : g.neighbors(u)) {
        if (x == v || g.has_edge(x, v)) continue;
        for (Vertex z : g.neighbors(v)) {
            if (z == u || g.has_edge(z, u)) continue;
            if (!g.has_edge(x, z)) return false;  // induced x-u-v-z
        }
    }
    return true;
}

// Attachment statistics of the length-3 paths between a non-adjacent pair.
struct P3Stats {
    long l = 0;                  // distinct path vertices adjacent to v
    long k_att = 0;              // distinct path vertices adjacent to u
    std::vector<Vertex> v_side;  // sorted
    std::vector<long> d;         // d[i] = neighbors of v_side[i] among the u-side
    long t = 0;                  // sum of d
    long path_count = 0;
    long disjoint_pair_count = 0;  // unordered, internally vertex-disjoint pairs
};

inline P3Stats count_p3_stats(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("count_p3_stats requires distinct vertices");
    if (g.has_edge(u, v)) throw std::invalid_argument("count_p3_stats requires a non-edge");

    std::vector<std::pair<Vertex, Vertex>> paths;  // (x, y) for u-x-y-v
    VertexSet u_side, v_side;
    for (Vertex x : g.neighbors(u)) {
        if (x == v) continue;
        for (Vertex y : g.neighbors(x)) {
            if (y == u || y == v) continue;
            if (!g.has_edge(y, v)) continue;
            paths.emplace_back(x, y);
            u_side.insert(x);
            v_side.insert(y);
        }
    }

    P3Stats s;
    s.l = static_cast<long>(v_side.size());
    s.k_att = static_cast<long>(u_side.size());
    s.v_side.assign(v_side.begin(), v_side.end());
    s.path_count = static_cast<long>(paths.size());
    for (Vertex y : s.v_side) {
        long dy = 0;
        for (Vertex x : u_side)
            if (x != y && g.has_edge(x, y)) ++dy;
        s.d.push_back(dy);
        s.t += dy;
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            const auto& [a, b] = paths[i];
            const auto& [c, e] = paths[j];
            if (a != c && a != e && b != c && b != e) ++s.disjoint_pair_count;
        }
    if (s.path_count > s.l * s.k_att)
        throw std::logic_error("count_p3_stats: attachment bound violated");
    return s;
}

}  // namespace wcgen
