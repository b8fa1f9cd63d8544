#pragma once

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcgen {

using Vertex = int;
using VertexSet = std::set<Vertex>;

// Undirected simple graph over dense vertex ids 0..n-1. Adjacency is kept as
// sorted sets so that every traversal order, and hence every result that
// depends on one, is deterministic.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        adj_.resize(static_cast<std::size_t>(n));
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    Vertex add_vertex() {
        adj_.emplace_back();
        return static_cast<Vertex>(adj_.size()) - 1;
    }

    bool has_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

    const VertexSet& neighbors(Vertex v) const {
        require_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    VertexSet closed_neighbors(Vertex v) const {
        VertexSet s = neighbors(v);
        s.insert(v);
        return s;
    }

    bool has_edge(Vertex u, Vertex v) const {
        require_vertex(u);
        require_vertex(v);
        return adj_[static_cast<std::size_t>(u)].count(v) != 0;
    }

    // Returns false and leaves the graph unchanged if the edge is already present.
    bool add_edge(Vertex u, Vertex v) {
        require_pair(u, v);
        if (adj_[static_cast<std::size_t>(u)].count(v)) return false;
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
        ++edge_count_;
        return true;
    }

    // Returns false if the edge was absent.
    bool remove_edge(Vertex u, Vertex v) {
        require_pair(u, v);
        if (!adj_[static_cast<std::size_t>(u)].count(v)) return false;
        adj_[static_cast<std::size_t>(u)].erase(v);
        adj_[static_cast<std::size_t>(v)].erase(u);
        --edge_count_;
        return true;
    }

    // All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> es;
        es.reserve(static_cast<std::size_t>(edge_count_));
        for (Vertex u = 0; u < vertex_count(); ++u)
            for (Vertex v : adj_[static_cast<std::size_t>(u)])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    bool operator==(const Graph&) const = default;

private:
    void require_vertex(Vertex v) const {
        if (!has_vertex(v))
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(vertex_count()) + ")");
    }

    void require_pair(Vertex u, Vertex v) const {
        require_vertex(u);
        require_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
    }

    std::vector<VertexSet> adj_;
    int edge_count_ = 0;
};

inline Graph make_graph(int n) { return Graph(n); }

inline VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("common_neighbors requires distinct vertices");
    const VertexSet& a = g.neighbors(u);
    const VertexSet& b = g.neighbors(v);
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph c(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

// Induced subgraph plus the id translation both ways. Local ids follow the
// ascending order of the kept original ids.
struct InducedGraph {
    Graph graph;
    std::vector<Vertex> to_original;  // local id -> original id
    std::vector<Vertex> to_local;     // original id -> local id, -1 when dropped

    Vertex local(Vertex original) const {
        if (original < 0 || original >= static_cast<Vertex>(to_local.size()) ||
            to_local[static_cast<std::size_t>(original)] < 0)
            throw std::out_of_range("vertex not part of the induced subgraph");
        return to_local[static_cast<std::size_t>(original)];
    }

    std::vector<Vertex> originals(const std::vector<Vertex>& local_path) const {
        std::vector<Vertex> out;
        out.reserve(local_path.size());
        for (Vertex x : local_path) out.push_back(to_original.at(static_cast<std::size_t>(x)));
        return out;
    }
};

inline InducedGraph induced(const Graph& g, const VertexSet& keep) {
    InducedGraph r;
    r.to_local.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    r.to_original.reserve(keep.size());
    for (Vertex v : keep) {
        if (!g.has_vertex(v))
            throw std::out_of_range("induced: vertex " + std::to_string(v) + " out of range");
        r.to_local[static_cast<std::size_t>(v)] = static_cast<Vertex>(r.to_original.size());
        r.to_original.push_back(v);
    }
    r.graph = Graph(static_cast<int>(keep.size()));
    for (Vertex v : keep)
        for (Vertex w : g.neighbors(v))
            if (w > v && r.to_local[static_cast<std::size_t>(w)] >= 0)
                r.graph.add_edge(r.to_local[static_cast<std::size_t>(v)],
                                 r.to_local[static_cast<std::size_t>(w)]);
    return r;
}

// Breadth-first reachability in g minus the excluded vertices.
inline bool reachable(const Graph& g, Vertex u, Vertex v, const VertexSet& excluded = {}) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::out_of_range("reachable: endpoint out of range");
    for (Vertex x : excluded)
        if (!g.has_vertex(x))
            throw std::out_of_range("reachable: excluded vertex out of range");
    if (excluded.count(u) || excluded.count(v))
        throw std::invalid_argument("reachable: endpoint is excluded");
    if (u == v) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex x : excluded) seen[static_cast<std::size_t>(x)] = 1;
    std::vector<Vertex> queue{u};
    seen[static_cast<std::size_t>(u)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.neighbors(queue[head])) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            if (w == v) return true;
            seen[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
        }
    }
    return false;
}

// All shortest u-v paths, each listed from u to v. Empty when v is unreachable.
struct PathSet {
    Vertex from = -1;
    Vertex to = -1;
    std::vector<std::vector<Vertex>> paths;
    bool truncated = false;  // enumeration stopped at the caller's cap

    bool empty() const { return paths.empty(); }

    // Common edge length of the paths, -1 when there are none.
    int length() const {
        return paths.empty() ? -1 : static_cast<int>(paths.front().size()) - 1;
    }
};

// BFS records every shortest-path predecessor; the paths are then read off the
// predecessor DAG by a depth-first walk. A cap of 0 means unlimited.
inline PathSet all_shortest_paths(const Graph& g, Vertex u, Vertex v, long max_paths = 0) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::out_of_range("all_shortest_paths: endpoint out of range");
    if (u == v) throw std::invalid_argument("all_shortest_paths requires distinct endpoints");

    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> dist(n, -1);
    std::vector<std::vector<Vertex>> preds(n);
    std::vector<Vertex> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        if (x == v) continue;  // no need to expand beyond the target level
        for (Vertex w : g.neighbors(x)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (dw < 0) {
                dw = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(w);
            }
            if (dw == dist[static_cast<std::size_t>(x)] + 1)
                preds[static_cast<std::size_t>(w)].push_back(x);
        }
    }

    PathSet ps;
    ps.from = u;
    ps.to = v;
    if (dist[static_cast<std::size_t>(v)] < 0) return ps;

    std::vector<std::pair<Vertex, std::size_t>> stack{{v, 0}};
    std::vector<Vertex> cur{v};
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        if (x == u) {
            if (max_paths > 0 && static_cast<long>(ps.paths.size()) >= max_paths) {
                ps.truncated = true;
                break;
            }
            ps.paths.emplace_back(cur.rbegin(), cur.rend());
            stack.pop_back();
            cur.pop_back();
            continue;
        }
        const auto& pl = preds[static_cast<std::size_t>(x)];
        if (next >= pl.size()) {
            stack.pop_back();
            cur.pop_back();
            continue;
        }
        const Vertex p = pl[next++];
        stack.push_back({p, 0});
        cur.push_back(p);
    }
    return ps;
}

// True iff no edge joins non-consecutive path vertices. The sequence must be a
// genuine path of g (distinct vertices, consecutive ones adjacent).
inline bool is_chordless_path(const Graph& g, const std::vector<Vertex>& path) {
    if (path.empty()) throw std::invalid_argument("is_chordless_path: empty sequence");
    VertexSet seen;
    for (Vertex x : path) {
        if (!g.has_vertex(x)) throw std::out_of_range("is_chordless_path: vertex out of range");
        if (!seen.insert(x).second)
            throw std::invalid_argument("is_chordless_path: repeated vertex");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw std::invalid_argument("is_chordless_path: sequence is not a path");
    for (std::size_t i = 0; i + 2 < path.size(); ++i)
        for (std::size_t j = i + 2; j < path.size(); ++j)
            if (g.has_edge(path[i], path[j])) return false;
    return true;
}

// Partition of the vertices into connected components, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        std::vector<Vertex> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            comp.insert(queue[head]);
            for (Vertex w : g.neighbors(queue[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

}  // namespace wcgen
