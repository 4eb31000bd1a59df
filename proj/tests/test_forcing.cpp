#include <random>
#include <sstream>

#include "cforce/forcing.hpp"
#include "cforce/generators.hpp"
#include "cforce/solvers.hpp"
#include "cforce/structure.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cforce;

namespace {

bool chain_induces_path(const Graph& g, const std::vector<int>& chain) {
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            if (g.has_edge(chain[i], chain[j]) != (j == i + 1)) return false;
    return true;
}

}  // namespace

TEST_CASE("closure basics") {
    Graph p4 = make_path(4);
    auto trace = forcing_closure(p4, VertexSet::of(4, {0}));
    CHECK(trace.final == VertexSet::full(4));
    CHECK(trace.steps == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    CHECK(forcing_closure(make_cycle(4), VertexSet::of(4, {0})).final == VertexSet::of(4, {0}));

    // three forcers compete for the same vertex; only the smallest id fires
    auto k4 = forcing_closure(make_complete(4), VertexSet::of(4, {0, 1, 2}));
    CHECK(k4.final == VertexSet::full(4));
    CHECK(k4.steps == std::vector<std::pair<int, int>>{{0, 3}});

    // colored vertices with no uncolored neighbor never fire
    CHECK(forcing_closure(p4, VertexSet::full(4)).steps.empty());
    CHECK(forcing_closure(p4, VertexSet(4)).final.empty());
}

TEST_CASE("forcing set predicates") {
    CHECK(is_forcing_set(make_cycle(5), VertexSet::of(5, {0, 1})));
    CHECK(!is_forcing_set(make_cycle(5), VertexSet::of(5, {0})));

    for (int n = 4; n <= 6; ++n) {
        Graph kn = make_complete(n);
        VertexSet all_but_one = VertexSet::full(n);
        all_but_one.remove(n - 1);
        CHECK(is_forcing_set(kn, all_but_one));
        VertexSet all_but_two = all_but_one;
        all_but_two.remove(n - 2);
        CHECK(!is_forcing_set(kn, all_but_two));
    }
}

TEST_CASE("connected forcing set predicate") {
    CHECK(is_connected_forcing_set(make_cycle(5), VertexSet::of(5, {0, 1})));
    // {0,5} forces P_6 from both ends but is not connected
    Graph p6 = make_path(6);
    CHECK(is_forcing_set(p6, VertexSet::of(6, {0, 5})));
    CHECK(!is_connected_forcing_set(p6, VertexSet::of(6, {0, 5})));
    // a facial 4-cycle of the 3-cube
    CHECK(is_connected_forcing_set(make_hypercube(3), VertexSet::of(8, {0, 1, 2, 3})));
    CHECK_THROWS_AS(is_connected_forcing_set(p6, VertexSet(6)), PreconditionError);
}

TEST_CASE("forcing chains") {
    Graph p5 = make_path(5);
    auto chains = forcing_chains(forcing_closure(p5, VertexSet::of(5, {0})), p5);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0] == std::vector<int>{0, 1, 2, 3, 4});

    Graph star = make_star(4);
    auto star_chains = forcing_chains(forcing_closure(star, VertexSet::of(4, {0, 1, 2})), star);
    REQUIRE(star_chains.size() == 3);
    CHECK(star_chains[0] == std::vector<int>{0, 3});
    CHECK(star_chains[1] == std::vector<int>{1});
    CHECK(star_chains[2] == std::vector<int>{2});

    // a minimum connected forcing set of the double star: 4 chains, each
    // carrying at most one leaf
    Graph ds = testutil::double_star();
    VertexSet w = connected_forcing_number(ds).witnesses.at(0);
    REQUIRE(w.count() == 4);
    auto ds_chains = forcing_chains(forcing_closure(ds, w), ds);
    CHECK(ds_chains.size() == 4);
    VertexSet leaf_set = leaves(ds);
    for (const auto& chain : ds_chains) {
        int leaves_here = 0;
        for (int v : chain)
            if (leaf_set.contains(v)) ++leaves_here;
        CHECK(leaves_here <= 1);
    }
}

TEST_CASE("tampered traces are rejected") {
    Graph p4 = make_path(4);
    auto trace = forcing_closure(p4, VertexSet::of(4, {0}));

    auto bad = trace;
    bad.steps[0] = {3, 2};  // forcer was never colored
    CHECK_THROWS_AS(forcing_chains(bad, p4), InvalidTraceError);

    bad = trace;
    bad.steps.pop_back();  // no longer reproduces final
    CHECK_THROWS_AS(forcing_chains(bad, p4), InvalidTraceError);

    bad = trace;
    bad.final.remove(3);
    bad.initial = VertexSet::of(4, {0});
    CHECK_THROWS_AS(forcing_chains(bad, p4), InvalidTraceError);

    bad = trace;
    bad.steps[1] = {0, 2};  // 0 already used its force and 2 is not its neighbor state
    CHECK_THROWS_AS(forcing_chains(bad, p4), InvalidTraceError);
}

TEST_CASE("trace serialization") {
    std::ostringstream out;
    write_trace(out, forcing_closure(make_path(3), VertexSet::of(3, {0})));
    CHECK(out.str() == "0 0 1\n1 1 2\n");
}

TEST_CASE("closure laws on random instances") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = testutil::random_graph(n, rng());
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) s.add(v);

        auto trace = forcing_closure(g, s);
        CHECK(trace.initial.is_subset_of(trace.final));

        // confluence under randomized single-force orders
        for (int r = 0; r < 20; ++r)
            CHECK(forcing_closure_random_order(g, s, rng()).final == trace.final);

        // idempotence
        CHECK(forcing_closure(g, trace.final).steps.empty());

        // monotonicity and superset forcing
        VertexSet t = s;
        for (int v = 0; v < n; ++v)
            if (rng() % 4 == 0) t.add(v);
        VertexSet t_final = closure_final(g, t);
        CHECK(trace.final.is_subset_of(t_final));
        if (trace.final.count() == n) CHECK(t_final.count() == n);

        // chains partition the final set and induce paths
        auto chains = forcing_chains(trace, g);
        VertexSet covered(n);
        int covered_count = 0;
        for (const auto& chain : chains) {
            CHECK(chain_induces_path(g, chain));
            for (int v : chain) {
                CHECK(!covered.contains(v));
                covered.add(v);
                ++covered_count;
            }
        }
        CHECK(covered == trace.final);
        CHECK(covered_count == trace.final.count());

        // a forcer never fires twice
        VertexSet forcers(n);
        for (auto [f, u] : trace.steps) {
            CHECK(!forcers.contains(f));
            forcers.add(f);
        }
    }
}
