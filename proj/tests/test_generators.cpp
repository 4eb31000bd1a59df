#include <set>

#include "cforce/generators.hpp"
#include "cforce/structure.hpp"
#include "doctest.h"

using namespace cforce;

namespace {

bool regular(const Graph& g, int d) {
    return g.min_degree() == d && g.max_degree() == d;
}

bool bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool bridgeless(const Graph& g) {
    for (const auto& b : blocks(g))
        if (b.count() == 2) return false;
    return true;
}

// Labeled connected graph count by inclusion-exclusion over the component of
// vertex 0: c_n = 2^C(n,2) - sum_k C(n-1,k-1) c_k 2^C(n-k,2).
long long connected_labeled_count(int n) {
    auto choose = [](int a, int b) {
        long long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
    c[1] = 1;
    for (int m = 2; m <= n; ++m) {
        long long total = 1ll << (m * (m - 1) / 2);
        for (int k = 1; k < m; ++k)
            total -= choose(m - 1, k - 1) * c[static_cast<std::size_t>(k)] *
                     (1ll << ((m - k) * (m - k - 1) / 2));
        c[static_cast<std::size_t>(m)] = total;
    }
    return c[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("family shapes") {
    CHECK(make_path(1).vertex_count() == 1);
    CHECK(make_path(5).edge_count() == 4);
    CHECK(regular(make_cycle(6), 2));

    Graph q3 = make_hypercube(3);
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(regular(q3, 3));
    CHECK(bipartite(q3));
    CHECK(bipartite(make_hypercube(4)));

    Graph t34 = make_torus(3, 4);
    CHECK(t34.vertex_count() == 12);
    CHECK(regular(t34, 4));
    CHECK(regular(make_torus(3, 3), 4));

    Graph j28 = make_flower_snark(7);
    CHECK(j28.vertex_count() == 28);
    CHECK(j28.edge_count() == 42);
    CHECK(regular(j28, 3));
    CHECK(bridgeless(j28));
    CHECK(bridgeless(make_flower_snark(3)));

    Graph g2 = make_pendant_path(2);
    CHECK(g2.vertex_count() == 6);
    CHECK(leaf_number(g2) == 4);
    CHECK(leaf_number(make_pendant_path(5)) == 4);

    Graph h10 = make_pendant_cycle(10);
    CHECK(h10.vertex_count() == 14);
    CHECK(leaf_number(h10) == 4);
    CHECK(is_connected(h10));
}

TEST_CASE("flower snark girth grows past the first member") {
    // shortest cycle length via one BFS per root
    auto girth = [](const Graph& g) {
        int best = g.vertex_count() + 1;
        for (int root = 0; root < g.vertex_count(); ++root) {
            std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
            std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -1);
            std::vector<int> queue{root};
            dist[static_cast<std::size_t>(root)] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int v = queue[head];
                for (int u : g.neighbors(v)) {
                    if (dist[static_cast<std::size_t>(u)] == -1) {
                        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                        parent[static_cast<std::size_t>(u)] = v;
                        queue.push_back(u);
                    } else if (u != parent[static_cast<std::size_t>(v)]) {
                        best = std::min(best,
                                        dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(u)] + 1);
                    }
                }
            }
        }
        return best;
    };
    CHECK(girth(make_flower_snark(3)) == 3);  // the B-cycle is a triangle
    CHECK(girth(make_flower_snark(5)) == 5);
    CHECK(girth(make_flower_snark(7)) >= 5);
    CHECK(girth(make_cycle(6)) == 6);
    CHECK(girth(make_hypercube(3)) == 4);
}

TEST_CASE("family spec parsing") {
    CHECK(make(FamilySpec::parse("torus", {3, 5})).vertex_count() == 15);
    CHECK(make(FamilySpec::parse("flower_snark", {5})).vertex_count() == 20);
    CHECK(FamilySpec::parse("star", {4}).name() == "star");

    CHECK_THROWS_AS(FamilySpec::parse("grid", {3}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("path", {}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("path", {0}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("cycle", {2}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("torus", {4, 3}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("torus", {2, 5}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("flower_snark", {4}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("flower_snark", {1}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("pendant_cycle", {5}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("pendant_cycle", {2}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("pendant_path", {1}), FamilyError);
    CHECK_THROWS_AS(FamilySpec::parse("hypercube", {0}), FamilyError);
}

TEST_CASE("generated orders are capped") {
    CHECK(make_path(4096).vertex_count() == 4096);
    CHECK_THROWS_AS(make_path(4097), FamilyError);
    CHECK_THROWS_AS(make_torus(100, 100), FamilyError);
    CHECK_THROWS_AS(make_flower_snark(2049), FamilyError);
    CHECK_THROWS_AS(make_hypercube(13), FamilyError);
    CHECK(make_hypercube(12).vertex_count() == 4096);
}

TEST_CASE("random trees") {
    CHECK(random_tree(1, 7).vertex_count() == 1);
    CHECK(random_tree(2, 7).edge_count() == 1);

    Graph t = random_tree(8, 42);
    CHECK(t.vertex_count() == 8);
    CHECK(t.edge_count() == 7);
    CHECK(is_connected(t));
    CHECK(random_tree(8, 42) == t);       // deterministic
    CHECK(!(random_tree(8, 43) == t));    // seed matters
}

TEST_CASE("labeled tree enumeration") {
    long long three = 0;
    all_labeled_trees(3, [&](const Graph&) { ++three; });
    CHECK(three == 3);

    std::set<std::vector<std::pair<int, int>>> distinct;
    all_labeled_trees(5, [&](const Graph& t) {
        CHECK(t.edge_count() == 4);
        CHECK(is_connected(t));
        distinct.insert(t.edge_list());
    });
    CHECK(distinct.size() == 125);

    long long seven = 0;
    all_labeled_trees(7, [&](const Graph&) { ++seven; });
    CHECK(seven == 16807);

    CHECK_THROWS_AS(all_labeled_trees(9, [](const Graph&) {}), BudgetError);
}

TEST_CASE("connected graph enumeration") {
    for (int n = 1; n <= 6; ++n) {
        long long count = 0;
        all_connected_graphs(n, [&](const Graph& g) {
            ++count;
            if (count == 1) CHECK(is_connected(g));
        });
        CHECK(count == connected_labeled_count(n));
    }
    long long n3 = 0, n4 = 0;
    all_connected_graphs(3, [&](const Graph&) { ++n3; });
    all_connected_graphs(4, [&](const Graph&) { ++n4; });
    CHECK(n3 == 4);
    CHECK(n4 == 38);
    CHECK_THROWS_AS(all_connected_graphs(8, [](const Graph&) {}), BudgetError);
}

TEST_CASE("isomorphism-reduced enumeration") {
    std::vector<long long> want{1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        long long count = 0;
        all_connected_graphs_up_to_iso(n, [&](const Graph& g) {
            ++count;
            CHECK(is_connected(g));
        });
        CHECK(count == want[static_cast<std::size_t>(n - 1)]);
    }
    CHECK_THROWS_AS(all_connected_graphs_up_to_iso(7, [](const Graph&) {}), BudgetError);
}

TEST_CASE("random connected graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_connected_graph(7, seed);
        CHECK(g.vertex_count() == 7);
        CHECK(is_connected(g));
        CHECK(random_connected_graph(7, seed) == g);
    }
}
