#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "wcgen/inserter.hpp"
#include "wcgen/oracle.hpp"

using namespace wcgen;
using testutil::fixture_f1;
using testutil::fixture_f2;
using testutil::fixture_f3;
using testutil::fixture_f4;
using testutil::graph_from_edges;

TEST_CASE("scope computation", "[inserter]") {
    SECTION("worked pair on the three-square fixture") {
        Graph f1 = fixture_f1();
        f1.add_edge(3, 4);
        const InsertionScope s = compute_scope(f1, 3, 6);
        CHECK(s.common == VertexSet{5});
        CHECK(s.aux_nodes == VertexSet{0, 2, 3, 4, 6, 7});
        CHECK(s.aux.graph.vertex_count() == 6);
    }

    SECTION("single common neighbor still reveals the detours") {
        const Graph f4 = fixture_f4();
        using namespace testutil::f4;
        const InsertionScope s = compute_scope(f4, u, v);
        CHECK(s.common == VertexSet{a});
        CHECK(s.aux_nodes == VertexSet{u, v, b, c, d, e});
    }

    SECTION("no common neighbors means the whole graph") {
        const Graph f2 = fixture_f2();
        const InsertionScope s = compute_scope(f2, testutil::f2::u, testutil::f2::v);
        CHECK(s.common.empty());
        CHECK(s.aux_nodes.size() == static_cast<std::size_t>(f2.vertex_count()));
    }

    SECTION("invariants") {
        Graph f1 = fixture_f1();
        const InsertionScope s = compute_scope(f1, 3, 4);
        for (Vertex x : s.common) CHECK_FALSE(s.aux_nodes.count(x));
        CHECK(s.aux_nodes.count(3));
        CHECK(s.aux_nodes.count(4));
    }

    CHECK_THROWS_AS(compute_scope(fixture_f1(), 0, 3), std::invalid_argument);  // existing edge
}

TEST_CASE("separation test", "[inserter]") {
    CHECK(case1_separated(compute_scope(fixture_f1(), 3, 4)));

    Graph f1 = fixture_f1();
    f1.add_edge(3, 4);
    CHECK_FALSE(case1_separated(compute_scope(f1, 3, 6)));

    const Graph f4 = fixture_f4();
    CHECK_FALSE(case1_separated(compute_scope(f4, testutil::f4::u, testutil::f4::v)));

    const InsertionScope empty_common = compute_scope(fixture_f2(), 0, 3);
    CHECK_THROWS_AS(case1_separated(empty_common), std::invalid_argument);
}

TEST_CASE("shortest paths inside the scope", "[inserter]") {
    SECTION("unique path on the worked pair") {
        Graph f1 = fixture_f1();
        f1.add_edge(3, 4);
        const PathSet ps = scoped_shortest_paths(compute_scope(f1, 3, 6));
        REQUIRE(ps.paths.size() == 1);
        CHECK(ps.paths.front() == std::vector<Vertex>{3, 4, 7, 6});
    }

    SECTION("two disjoint length-3 paths in the forbidden pair") {
        const PathSet ps =
            scoped_shortest_paths(compute_scope(fixture_f2(), testutil::f2::u, testutil::f2::v));
        CHECK(ps.length() == 3);
        CHECK(ps.paths.size() == 2);
    }

    SECTION("the detour pair has only length-4 connections in scope") {
        const Graph f4 = fixture_f4();
        using namespace testutil::f4;
        const PathSet ps = scoped_shortest_paths(compute_scope(f4, u, v));
        CHECK(ps.length() == 4);
        CHECK(ps.paths.size() == 2);
        for (const auto& p : ps.paths) {
            CHECK(p.front() == u);
            CHECK(p.back() == v);
            CHECK(p[1] == c);
            CHECK(p[2] == d);
        }
    }
}

TEST_CASE("forbidden configuration detection", "[inserter]") {
    SECTION("parallel cross edges with no alternates trip it") {
        const Graph f2 = fixture_f2();
        const PathSet ps =
            scoped_shortest_paths(compute_scope(f2, testutil::f2::u, testutil::f2::v));
        const auto witness = forbidden_configuration(f2, ps);
        REQUIRE(witness.has_value());
        CHECK(witness->first_path.size() == 4);
        CHECK(witness->second_path.size() == 4);
    }

    SECTION("alternate cross edges clear it") {
        const Graph f3 = fixture_f3();
        const PathSet ps =
            scoped_shortest_paths(compute_scope(f3, testutil::f2::u, testutil::f2::v));
        CHECK(ps.paths.size() == 4);
        CHECK_FALSE(forbidden_configuration(f3, ps).has_value());
    }

    SECTION("a single path has no disjoint pair") {
        const Graph p = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
        const PathSet ps = all_shortest_paths(p, 0, 3);
        CHECK_FALSE(forbidden_configuration(p, ps).has_value());
    }

    SECTION("wrong path length is refused") {
        const Graph p = graph_from_edges(3, {{0, 1}, {1, 2}});
        const PathSet ps = all_shortest_paths(p, 0, 2);
        CHECK_THROWS_AS(forbidden_configuration(p, ps), std::invalid_argument);
    }
}

TEST_CASE("alternate longer path search", "[inserter]") {
    SECTION("detour fixture with the short cut removed") {
        // dropping the a-v edge leaves a single length-3 path u-a-b-v plus the
        // u-c-d-e-v detour
        Graph g = fixture_f4();
        using namespace testutil::f4;
        g.remove_edge(a, v);
        const PathSet ps = all_shortest_paths(g, u, v);
        REQUIRE(ps.paths.size() == 1);
        REQUIRE(ps.paths.front() == std::vector<Vertex>{u, a, b, v});
        const auto alt = alternate_longer_path(g, ps, u, v, {});
        REQUIRE(alt.has_value());
        CHECK(*alt == std::vector<Vertex>{u, c, d, e, v});
        CHECK(is_chordless_path(g, *alt));
    }

    SECTION("worked pair has no surviving detour") {
        Graph f1 = fixture_f1();
        f1.add_edge(3, 4);
        const InsertionScope s = compute_scope(f1, 3, 6);
        const PathSet ps = scoped_shortest_paths(s);
        CHECK_FALSE(alternate_longer_path(f1, ps, 3, 6, s.common).has_value());
    }

    SECTION("a lone path has nothing else to find") {
        const Graph p = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
        const PathSet ps = all_shortest_paths(p, 0, 3);
        CHECK_FALSE(alternate_longer_path(p, ps, 0, 3, {}).has_value());
    }
}

TEST_CASE("insertion decisions on the fixtures", "[inserter]") {
    const InsertOptions gate_on{OracleGate::On, 64};

    SECTION("separated pair goes in as case 1.1") {
        Graph f1 = fixture_f1();
        const Verdict verdict = try_insert_in_place(f1, 3, 4, gate_on);
        CHECK(verdict.outcome == Outcome::Inserted);
        CHECK(verdict.case_label == CaseLabel::C1_1);
        CHECK(f1.has_edge(3, 4));
        CHECK(f1.edge_count() == 11);
    }

    SECTION("unique short path with no detour goes in as case 1.2.1") {
        Graph f1 = fixture_f1();
        f1.add_edge(3, 4);
        const Verdict verdict = try_insert_in_place(f1, 3, 6, gate_on);
        CHECK(verdict.outcome == Outcome::Inserted);
        CHECK(verdict.case_label == CaseLabel::C1_2_1);
        CHECK(f1.edge_count() == 12);
        CHECK(is_weakly_chordal(f1).weakly_chordal);
    }

    SECTION("long shortest path rejects with a witness") {
        Graph f4 = fixture_f4();
        using namespace testutil::f4;
        const Verdict verdict = try_insert_in_place(f4, u, v, gate_on);
        CHECK(verdict.outcome == Outcome::RejectedLongShortestPath);
        const bool via_e = verdict.witness_path == std::vector<Vertex>{u, c, d, e, v};
        const bool via_b = verdict.witness_path == std::vector<Vertex>{u, c, d, b, v};
        CHECK((via_e || via_b));
        CHECK_FALSE(f4.has_edge(u, v));
    }

    SECTION("forbidden configuration rejects") {
        Graph f2 = fixture_f2();
        const Verdict verdict = try_insert_in_place(f2, testutil::f2::u, testutil::f2::v, gate_on);
        CHECK(verdict.outcome == Outcome::RejectedForbiddenConfig);
        CHECK(verdict.case_label == CaseLabel::C2_2);
        CHECK_FALSE(f2.has_edge(testutil::f2::u, testutil::f2::v));
    }

    SECTION("the safe variant goes in as case 2.2") {
        Graph f3 = fixture_f3();
        const Verdict verdict = try_insert_in_place(f3, testutil::f2::u, testutil::f2::v, gate_on);
        CHECK(verdict.outcome == Outcome::Inserted);
        CHECK(verdict.case_label == CaseLabel::C2_2);
        CHECK(is_weakly_chordal(f3).weakly_chordal);
    }

    SECTION("existing edges are reported as such") {
        Graph f1 = fixture_f1();
        const Verdict verdict = try_insert_in_place(f1, 0, 3, gate_on);
        CHECK(verdict.outcome == Outcome::RejectedExistingEdge);
        CHECK(verdict.case_label == CaseLabel::None);
    }

    SECTION("bridging two components is accepted") {
        Graph g = graph_from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
        const Verdict verdict = try_insert_in_place(g, 0, 3, gate_on);
        CHECK(verdict.outcome == Outcome::Inserted);
        CHECK(verdict.case_label == CaseLabel::C2_1);
        CHECK(is_weakly_chordal(g).weakly_chordal);
    }

    SECTION("value-returning wrapper leaves the input alone") {
        const Graph f1 = fixture_f1();
        const auto [augmented, verdict] = try_insert(f1, 3, 4, gate_on);
        CHECK(verdict.inserted());
        CHECK(f1.edge_count() == 10);
        CHECK(augmented.edge_count() == 11);
    }

    CHECK_THROWS_AS(try_insert(fixture_f1(), 0, 99), std::out_of_range);
    CHECK_THROWS_AS(try_insert(fixture_f1(), 2, 2), std::invalid_argument);
}

TEST_CASE("cross-edge subsets match the recognizer exactly", "[inserter]") {
    // base: two internally disjoint length-3 paths 0-1-2-3 and 0-4-5-3
    const std::vector<std::pair<int, int>> base = {{0, 1}, {1, 2}, {2, 3},
                                                   {0, 4}, {4, 5}, {5, 3}};
    const std::vector<std::pair<int, int>> cross = {{1, 4}, {1, 5}, {2, 4}, {2, 5}};
    for (unsigned mask = 0; mask < 16; ++mask) {
        Graph g(6);
        for (const auto& [a, b] : base) g.add_edge(a, b);
        for (unsigned bit = 0; bit < 4; ++bit)
            if (mask & (1u << bit)) g.add_edge(cross[bit].first, cross[bit].second);

        Graph plus = g;
        plus.add_edge(0, 3);
        const bool expected =
            testutil::brute_weakly_chordal(g) && !testutil::brute_weakly_chordal(plus);

        const PathSet ps = scoped_shortest_paths(compute_scope(g, 0, 3));
        REQUIRE(ps.length() == 3);
        const bool fired = forbidden_configuration(g, ps).has_value();
        INFO("cross-edge mask " << mask);
        CHECK(fired == expected);
    }
}

TEST_CASE("generation end to end", "[inserter]") {
    SECTION("the worked instance") {
        GenParams params;
        params.n = 8;
        params.m = 12;
        params.seed = 42;
        Rng rng(params.seed);
        const auto [g, trace] = generate(params, rng);
        CHECK(g.vertex_count() == 8);
        CHECK(g.edge_count() == 12);
        CHECK_FALSE(trace.early_return);
        CHECK(is_weakly_chordal(g).weakly_chordal);
        const long inserted =
            trace.counters.by_outcome[static_cast<std::size_t>(Outcome::Inserted)];
        CHECK(inserted + trace.counters.fallback_two_pair_insertions ==
              g.edge_count() - trace.initial_edge_count);
    }

    SECTION("early return keeps the layout") {
        GenParams params;
        params.n = 8;
        params.m = 9;
        params.seed = 1;
        Rng rng(params.seed);
        const auto [g, trace] = generate(params, rng);
        CHECK(trace.early_return);
        CHECK(g.edge_count() == 10);
        CHECK(is_weakly_chordal(g).weakly_chordal);
    }

    SECTION("dense targets finish via the fallback") {
        GenParams params;
        params.n = 6;
        params.m = 15;
        params.seed = 3;
        params.stall_limit = 32;  // force the fallback path to exercise itself
        Rng rng(params.seed);
        const auto [g, trace] = generate(params, rng);
        CHECK(g.edge_count() == 15);
        CHECK(is_weakly_chordal(g).weakly_chordal);  // complete graphs qualify
        for (Vertex u = 0; u < 6; ++u)
            for (Vertex v = u + 1; v < 6; ++v) CHECK(g.has_edge(u, v));
    }

    SECTION("invalid parameters are rejected") {
        GenParams params;
        params.n = 5;
        params.m = 11;
        Rng rng(0);
        CHECK_THROWS_AS(generate(params, rng), std::invalid_argument);
    }
}

TEST_CASE("generation is deterministic per seed", "[inserter]") {
    GenParams params;
    params.n = 20;
    params.m = 40;
    params.seed = 7;
    Rng a(params.seed), b(params.seed);
    const auto [ga, ta] = generate(params, a);
    const auto [gb, tb] = generate(params, b);
    CHECK(ga == gb);
    REQUIRE(ta.events.size() == tb.events.size());
    for (std::size_t i = 0; i < ta.events.size(); ++i) {
        CHECK(ta.events[i].u == tb.events[i].u);
        CHECK(ta.events[i].v == tb.events[i].v);
        CHECK(ta.events[i].verdict.outcome == tb.events[i].verdict.outcome);
        CHECK(ta.events[i].verdict.case_label == tb.events[i].verdict.case_label);
    }
    CHECK(ta.fallback_insertions == tb.fallback_insertions);
}

TEST_CASE("trace bookkeeping and rejection justification", "[inserter][prop]") {
    Rng meta(121212);
    for (int iter = 0; iter < 12; ++iter) {
        GenParams params;
        params.n = static_cast<int>(meta.uniform_int(6, 16));
        const long max_edges = static_cast<long>(params.n) * (params.n - 1) / 2;
        params.m = static_cast<int>(meta.uniform_int(params.n, std::min(max_edges, 3L * params.n)));
        params.seed = meta.next();
        Rng rng(params.seed);
        const auto [g, trace] = generate(params, rng);

        CHECK(is_weakly_chordal(g).weakly_chordal);

        long outcome_total = 0;
        for (long c : trace.counters.by_outcome) outcome_total += c;
        CHECK(outcome_total == trace.counters.attempts);
        CHECK(static_cast<long>(trace.events.size()) == trace.counters.attempts);

        if (!trace.early_return) {
            const long inserted =
                trace.counters.by_outcome[static_cast<std::size_t>(Outcome::Inserted)];
            CHECK(inserted + trace.counters.fallback_two_pair_insertions ==
                  params.m - trace.initial_edge_count);
        }

        for (const auto& event : trace.events) {
            const Verdict& verdict = event.verdict;
            if (verdict.inserted()) CHECK(verdict.case_label != CaseLabel::None);
            if (verdict.outcome == Outcome::RejectedLongShortestPath) {
                CHECK(verdict.witness_path.size() >= 5);
                CHECK(verdict.witness_path.front() == event.u);
                CHECK(verdict.witness_path.back() == event.v);
            }
        }
    }
}

TEST_CASE("long-path rejections close into holes", "[inserter][prop]") {
    Rng meta(343434);
    int rejections_checked = 0;
    for (int iter = 0; iter < 30 && rejections_checked < 25; ++iter) {
        const int n = static_cast<int>(meta.uniform_int(7, 14));
        Rng rng(meta.next());
        const Graph g = testutil::random_wc_graph(
            n, static_cast<int>(meta.uniform_int(n - 1, 2L * n)), rng);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                Graph work = g;
                const Verdict verdict =
                    try_insert_in_place(work, u, v, {OracleGate::Off, 64});
                if (verdict.outcome != Outcome::RejectedLongShortestPath) continue;
                ++rejections_checked;
                REQUIRE(is_chordless_path(g, verdict.witness_path));
                Graph plus = g;
                plus.add_edge(u, v);
                CHECK(find_hole(plus).has_value());
            }
    }
    CHECK(rejections_checked > 0);
}

TEST_CASE("case labels track the common neighborhood", "[inserter][prop]") {
    Rng meta(565656);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = static_cast<int>(meta.uniform_int(5, 12));
        Rng rng(meta.next());
        const Graph g = testutil::random_wc_graph(
            n, static_cast<int>(meta.uniform_int(n - 1, 2L * n)), rng);
        const Vertex u = static_cast<Vertex>(meta.uniform_int(0, n - 1));
        Vertex v = static_cast<Vertex>(meta.uniform_int(0, n - 2));
        if (v >= u) ++v;
        if (g.has_edge(u, v)) continue;

        const bool has_common = !common_neighbors(g, u, v).empty();
        Graph work = g;
        const Verdict verdict = try_insert_in_place(work, u, v, {OracleGate::On, 64});
        CHECK_FALSE(verdict.anomaly);
        switch (verdict.case_label) {
            case CaseLabel::C1_1:
            case CaseLabel::C1_2_1:
            case CaseLabel::C1_2_2:
                CHECK(has_common);
                break;
            case CaseLabel::C2_1:
            case CaseLabel::C2_2:
                CHECK_FALSE(has_common);
                break;
            case CaseLabel::None:
                CHECK_FALSE(verdict.inserted());
                break;
        }
        if (verdict.inserted()) {
            CHECK(work.edge_count() == g.edge_count() + 1);
            CHECK(is_weakly_chordal(work).weakly_chordal);
        } else {
            CHECK(work == g);
        }
    }
}
