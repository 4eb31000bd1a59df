#include <algorithm>

#include "cforce/graph.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cforce;

TEST_CASE("vertex set basics") {
    VertexSet s(70);
    CHECK(s.empty());
    s.add(0);
    s.add(64);
    s.add(69);
    CHECK(s.count() == 3);
    CHECK(s.contains(64));
    CHECK(!s.contains(63));
    CHECK(s.first() == 0);
    CHECK(s.next_after(0) == 64);
    CHECK(s.next_after(64) == 69);
    CHECK(s.next_after(69) == -1);
    s.remove(64);
    CHECK(s.count() == 2);

    CHECK(s.to_string() == "{0 69}");
    CHECK(VertexSet(5).to_string() == "{}");
    CHECK(s.to_vector() == std::vector<int>{0, 69});
}

TEST_CASE("vertex set algebra") {
    auto a = VertexSet::of(6, {0, 1, 4});
    auto b = VertexSet::of(6, {1, 2});
    CHECK((a | b) == VertexSet::of(6, {0, 1, 2, 4}));
    CHECK((a & b) == VertexSet::of(6, {1}));
    CHECK((a - b) == VertexSet::of(6, {0, 4}));
    CHECK(a.complement() == VertexSet::of(6, {2, 3, 5}));
    CHECK(a.intersects(b));
    CHECK(!VertexSet::of(6, {0}).intersects(b));
    CHECK(VertexSet::of(6, {1}).is_subset_of(a));
    CHECK(!b.is_subset_of(a));
    CHECK(VertexSet::full(6).count() == 6);
    CHECK(VertexSet::full(6).complement().empty());

    CHECK(VertexSet::unique_member_of_difference(a, b) == -1);  // {0,4}
    CHECK(VertexSet::unique_member_of_difference(b, a) == 2);
    CHECK(VertexSet::unique_member_of_difference(a, a) == -1);  // empty difference
}

TEST_CASE("vertex set ordering by member sequence") {
    auto a = VertexSet::of(8, {0, 5});
    auto b = VertexSet::of(8, {1, 2});
    CHECK(VertexSet::lex_less(a, b));
    CHECK(!VertexSet::lex_less(b, a));
    CHECK(VertexSet::lex_less(VertexSet::of(8, {0}), a));  // prefix comes first
    CHECK(!VertexSet::lex_less(a, a));
}

TEST_CASE("graph construction") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.degree(0) == 2);

    Graph single(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    Graph dedup(2, {{0, 1}, {1, 0}});
    CHECK(dedup.edge_count() == 1);
    CHECK(dedup.has_edge(0, 1));
    CHECK(dedup.has_edge(1, 0));
}

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidEdgeError);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), InvalidEdgeError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidEdgeError);
    CHECK_THROWS_AS(Graph(0, {}), PreconditionError);
}

TEST_CASE("adjacency stays symmetric and loop-free") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = testutil::random_graph(9, seed);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(!g.neighbors(v).contains(v));
            for (int u : g.neighbors(v)) CHECK(g.neighbors(u).contains(v));
        }
        auto edges = g.edge_list();
        CHECK(static_cast<int>(edges.size()) == g.edge_count());
        CHECK(std::is_sorted(edges.begin(), edges.end()));
    }
}

TEST_CASE("vertex removal renumbers densely") {
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto [rest, to_old] = p4.without_vertices(VertexSet::of(4, {1}));
    CHECK(rest.vertex_count() == 3);
    CHECK(to_old == std::vector<int>{0, 2, 3});
    CHECK(rest.edge_count() == 1);
    CHECK(rest.has_edge(1, 2));  // old edge (2,3)

    CHECK_THROWS_AS(p4.without_vertices(VertexSet::full(4)), PreconditionError);
}
