#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "helpers.hpp"
#include "wcgen/tree.hpp"

using namespace wcgen;

namespace {

void check_tree_invariants(const TreeGraph& t) {
    const Graph& g = t.graph;
    REQUIRE(g.vertex_count() >= 1);
    CHECK(g.edge_count() == g.vertex_count() - 1);
    CHECK(is_connected(g));
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) <= 4);
    for (const auto& [u, w] : g.edges())
        CHECK_FALSE((g.degree(u) == 4 && g.degree(w) == 4));
}

std::multiset<int> degree_multiset(const Graph& g) {
    std::multiset<int> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.insert(g.degree(v));
    return out;
}

}  // namespace

TEST_CASE("smallest trees", "[tree]") {
    Rng rng(1);
    const TreeGraph one = grow_tree(1, rng);
    CHECK(one.node_count() == 1);
    CHECK(one.graph.edge_count() == 0);

    const TreeGraph two = grow_tree(2, rng);
    CHECK(two.node_count() == 2);
    CHECK(two.graph.has_edge(0, 1));
}

TEST_CASE("grown trees satisfy the degree constraints", "[tree]") {
    Rng rng(7);
    const TreeGraph t = grow_tree(10, rng);
    CHECK(t.node_count() >= 10);
    check_tree_invariants(t);
}

TEST_CASE("growth is reproducible per seed", "[tree]") {
    Rng a(99), b(99), c(100);
    const auto ta = grow_tree(40, a);
    const auto tb = grow_tree(40, b);
    const auto tc = grow_tree(40, c);
    CHECK(ta.graph == tb.graph);
    CHECK(ta.graph.edges() == tb.graph.edges());
    // a different seed almost surely differs
    CHECK(ta.graph != tc.graph);
}

TEST_CASE("degree-4 separation", "[tree]") {
    SECTION("adjacent degree-4 centers get a node between them") {
        // two degree-4 stars joined center to center
        TreeGraph t;
        t.graph = testutil::graph_from_edges(
            8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
        const auto before = degree_multiset(t.graph);
        const TreeGraph out = separate_adjacent_degree4(t);

        CHECK(out.node_count() == 9);
        CHECK_FALSE(out.graph.has_edge(0, 1));
        CHECK(out.graph.has_edge(0, 8));
        CHECK(out.graph.has_edge(8, 1));
        check_tree_invariants(out);

        // degrees preserved except for the fresh degree-2 node
        auto after = degree_multiset(out.graph);
        REQUIRE(after.count(2) >= 1);
        after.erase(after.find(2));
        CHECK(after == before);
    }

    SECTION("a path is left alone") {
        TreeGraph t;
        t.graph = testutil::graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        const Graph before = t.graph;
        CHECK(separate_adjacent_degree4(t).graph == before);
    }

    SECTION("a single node is left alone") {
        TreeGraph t;
        t.graph = Graph(1);
        CHECK(separate_adjacent_degree4(t).node_count() == 1);
    }
}

TEST_CASE("invariants hold across many seeds", "[tree][prop]") {
    Rng meta(424242);
    for (int iter = 0; iter < 1000; ++iter) {
        const int k_target = static_cast<int>(meta.uniform_int(1, 200));
        Rng rng(meta.next());
        const TreeGraph t = grow_tree(k_target, rng);
        REQUIRE(t.node_count() >= k_target);
        check_tree_invariants(t);
    }
}
