#include "cforce/verify.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <random>
#include <sstream>
#include <thread>

#include "cforce/forcing.hpp"
#include "cforce/generators.hpp"
#include "cforce/solvers.hpp"
#include "cforce/structural.hpp"
#include "cforce/structure.hpp"

namespace cforce::verify {

namespace {

// Runs fn(i) for i in [0,count); fn returns an empty string on pass. Results
// land in index order no matter how many workers run.
template <class Fn>
std::vector<std::string> run_indexed(long long count, int threads, Fn&& fn) {
    std::vector<std::string> out(static_cast<std::size_t>(count));
    auto guarded = [&](long long i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(i);
        } catch (const std::exception& e) {
            out[static_cast<std::size_t>(i)] = std::string("unexpected error: ") + e.what();
        }
    };
    threads = std::max(1, threads);
    if (threads == 1 || count < 2) {
        for (long long i = 0; i < count; ++i) guarded(i);
        return out;
    }
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (long long i; (i = next.fetch_add(1)) < count;) guarded(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t + 1 < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

Check summarize(std::string name, const std::vector<std::string>& results, std::string ok_detail) {
    long long failures = 0;
    std::string samples;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].empty()) continue;
        ++failures;
        if (failures <= 3) samples += " [#" + std::to_string(i) + ": " + results[i] + "]";
    }
    if (failures == 0) return {std::move(name), true, std::move(ok_detail)};
    return {std::move(name), false, std::to_string(failures) + " failure(s)" + samples};
}

std::vector<Graph> tree_corpus() {
    std::vector<Graph> out;
    out.reserve(17307);
    all_labeled_trees(7, [&](const Graph& t) { out.push_back(t); });
    for (int i = 0; i < 500; ++i) out.push_back(random_tree(8 + i % 5, 9000 + static_cast<std::uint64_t>(i)));
    return out;
}

std::vector<Graph> small_connected_corpus() {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n) all_connected_graphs(n, [&](const Graph& g) { out.push_back(g); });
    for (int i = 0; i < 1000; ++i) out.push_back(random_connected_graph(7, 40000 + static_cast<std::uint64_t>(i)));
    return out;
}

Graph random_single_clique_instance(int index) {
    std::mt19937_64 rng(7000 + static_cast<std::uint64_t>(index));
    int q = 3 + static_cast<int>(rng() % 3);
    int n = q + static_cast<int>(rng() % static_cast<std::uint64_t>(12 - q + 1));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) edges.emplace_back(i, j);
    for (int v = q; v < n; ++v)
        edges.emplace_back(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
    return Graph(n, edges);
}

// Hand-picked shapes that stress the clique formula's case split.
std::vector<Graph> crafted_single_clique_instances() {
    std::vector<Graph> out;
    out.push_back(make_complete(3));
    out.push_back(make_complete(4));
    out.push_back(make_complete(5));
    // triangle with one pendant
    out.push_back(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}));
    // net: triangle with a pendant on every vertex
    out.push_back(Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}));
    // triangle with a pendant path of length 2
    out.push_back(Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}}));
    // two leaves on vertex 1 and on vertex 2: vertex 0 is the only clique
    // vertex with no leaf and also the only one outside R1, so nobody can
    // stay uncolored
    out.push_back(Graph(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}));
    // two leaves on every triangle vertex
    out.push_back(Graph(9, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}}));
    // one leaf on vertex 1, two leaves on vertex 2
    out.push_back(Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {2, 5}}));
    // bridge to a star: clique {0,1,2}, 0-3, 3-4, leaves 5,6 on 4
    out.push_back(Graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}}));
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(u)] != -1) continue;
            dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
            q.push(u);
        }
    }
    return dist;
}

// Smallest cycle vertex of the pendant cycle H_k lying strictly inside an
// arc: at distance >= 2 from every pendant and from every pendant
// attachment. A vertex adjacent to an attachment sits at distance exactly 2
// from a pendant and deleting it yields a smaller value.
int far_cycle_vertex(const Graph& h, int k) {
    std::vector<std::vector<int>> dist;
    for (int p = k; p < k + 4; ++p) dist.push_back(bfs_distances(h, p));
    for (int v = 0; v < k; ++v) {
        bool ok = true;
        for (const auto& d : dist)
            if (d[static_cast<std::size_t>(v)] < 3) ok = false;
        if (ok) return v;
    }
    throw Error("internal: pendant cycle has no vertex far from all pendants");
}

std::string check_structural_vs_oracle(const Graph& g, bool tree) {
    auto [value, witness] = tree ? tree_connected_forcing(g) : single_clique_connected_forcing(g);
    SolveResult oracle = connected_forcing_number(g);
    if (value != oracle.value)
        return "structural value " + std::to_string(value) + " vs exhaustive " +
               std::to_string(oracle.value);
    if (witness.count() != value) return "witness has size " + std::to_string(witness.count());
    if (!is_connected_forcing_set(g, witness)) return "witness " + witness.to_string() + " does not force";
    return {};
}

bool chain_induces_path(const Graph& g, const std::vector<int>& chain) {
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
            bool adjacent = g.has_edge(chain[i], chain[j]);
            if (adjacent != (j == i + 1)) return false;
        }
    return true;
}

Graph random_graph_any(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace

Suite tree_formula(const Options& opt) {
    auto corpus = tree_corpus();
    auto results = run_indexed(static_cast<long long>(corpus.size()), opt.threads, [&](long long i) {
        return check_structural_vs_oracle(corpus[static_cast<std::size_t>(i)], true);
    });
    return {"trees",
            {summarize("tree solver value and witness match exhaustive search", results,
                       std::to_string(corpus.size()) + " trees (all labeled n=7 plus 500 random n=8..12)")}};
}

Suite tree_counting(const Options& opt) {
    auto corpus = tree_corpus();
    auto results = run_indexed(static_cast<long long>(corpus.size()), opt.threads, [&](long long i) {
        const Graph& t = corpus[static_cast<std::size_t>(i)];
        if (is_path_graph(t)) return std::string{};
        long long formula = tree_count_minimum_sets(t);
        long long exhaustive = count_minimum_connected_forcing_sets(t);
        if (formula != exhaustive)
            return "count formula " + std::to_string(formula) + " vs enumeration " +
                   std::to_string(exhaustive);
        return std::string{};
    });
    return {"trees",
            {summarize("tree minimum-set count matches exhaustive enumeration", results,
                       std::to_string(corpus.size()) + " trees, paths skipped")}};
}

Suite single_clique(const Options& opt) {
    std::vector<Graph> corpus = crafted_single_clique_instances();
    for (int i = 0; i < 250; ++i) corpus.push_back(random_single_clique_instance(i));
    auto results = run_indexed(static_cast<long long>(corpus.size()), opt.threads, [&](long long i) {
        const Graph& g = corpus[static_cast<std::size_t>(i)];
        if (!detect_single_clique(g).is_single_clique_graph)
            return std::string("instance is not a single-clique graph");
        return check_structural_vs_oracle(g, false);
    });
    return {"clique",
            {summarize("single-clique solver value and witness match exhaustive search", results,
                       std::to_string(corpus.size()) + " generated graphs, clique size 3..5, n <= 12")}};
}

Suite known_values(const Options& opt) {
    (void)opt;
    Suite suite{"spreads", {}};
    auto expect = [&](std::string name, long long got, long long want) {
        bool ok = got == want;
        suite.checks.push_back({std::move(name), ok,
                                ok ? "value " + std::to_string(got)
                                   : "got " + std::to_string(got) + ", want " + std::to_string(want)});
    };

    expect("Fc(Q_3) = 4", connected_forcing_number(make_hypercube(3)).value, 4);
    expect("Fc(Q_4) = 8", connected_forcing_number(make_hypercube(4)).value, 8);
    expect("Fc(C_3 x C_3) = 6", connected_forcing_number(make_torus(3, 3)).value, 6);
    expect("Fc(C_3 x C_4) = 6", connected_forcing_number(make_torus(3, 4)).value, 6);

    for (int k = 2; k <= 6; ++k) {
        Graph g = make_pendant_path(k);
        expect("F(pendant_path " + std::to_string(k) + ") = 3", forcing_number(g).value, 3);
        expect("Fc(pendant_path " + std::to_string(k) + ") = " + std::to_string(k + 2),
               connected_forcing_number(g).value, k + 2);
    }
    {
        Graph g = make_pendant_path(4);
        expect("fc-spread of a leaf of pendant_path 4 = 3",
               connected_forcing_spread(g, g.vertex_count() - 1), 3);
    }

    for (int k : {10, 12}) {
        Graph h = make_pendant_cycle(k);
        std::string name = "pendant_cycle " + std::to_string(k);
        expect("Fc(" + name + ") = 4", connected_forcing_number(h).value, 4);
        int v = far_cycle_vertex(h, k);
        auto [rest, to_old] = h.without_vertices(VertexSet::of(h.vertex_count(), {v}));
        expect("Fc(" + name + " - v) = " + std::to_string(k / 2 + 4),
               connected_forcing_number(rest).value, k / 2 + 4);
        expect("fc-spread of far cycle vertex of " + name + " = -" + std::to_string(k / 2),
               connected_forcing_spread(h, v), -k / 2);
    }
    return suite;
}

Suite snark_bound(const Options& opt) {
    (void)opt;
    Suite suite{"snark", {}};
    for (int k : {3, 5, 7}) {
        Graph j = make_flower_snark(k);
        VertexSet s = flower_snark_upper_set(k);
        bool ok = s.count() == k + 2 && is_connected_forcing_set(j, s);
        suite.checks.push_back({"construction set of size k+2 forces J_" + std::to_string(4 * k), ok,
                                ok ? "set " + s.to_string() : "construction failed"});
    }
    for (int k : {3, 5}) {
        Graph j = make_flower_snark(k);
        int fc = connected_forcing_number(j).value;
        bool ok = fc <= k + 2;
        std::string eq = fc == k + 2 ? "meets the bound with equality" : "beats the bound";
        suite.checks.push_back({"Fc(J_" + std::to_string(4 * k) + ") <= " + std::to_string(k + 2), ok,
                                "exact value " + std::to_string(fc) + (ok ? ", " + eq : "")});
    }
    return suite;
}

Suite extremal(const Options& opt) {
    std::vector<Graph> corpus;
    for (int n = 2; n <= 6; ++n) all_connected_graphs(n, [&](const Graph& g) { corpus.push_back(g); });
    auto results = run_indexed(static_cast<long long>(corpus.size()), opt.threads, [&](long long i) {
        const Graph& g = corpus[static_cast<std::size_t>(i)];
        const int n = g.vertex_count();
        int fc = connected_forcing_number(g).value;
        bool path = is_path_graph(g);
        bool complete = g.edge_count() == n * (n - 1) / 2;
        bool star = n >= 4 && g.edge_count() == n - 1 && g.max_degree() == n - 1;
        if ((fc == 1) != path) return "Fc=" + std::to_string(fc) + " but path=" + std::to_string(path);
        if ((fc == n - 1) != (complete || star))
            return "Fc=" + std::to_string(fc) + " with n=" + std::to_string(n) +
                   " disagrees with complete/star shape";
        ExtremalClass want = path        ? ExtremalClass::fc_is_1
                             : complete  ? ExtremalClass::fc_is_n_minus_1_complete
                             : star      ? ExtremalClass::fc_is_n_minus_1_star
                                         : ExtremalClass::neither;
        if (classify_extremal(g) != want)
            return std::string("classifier returned ") + to_string(classify_extremal(g));
        return std::string{};
    });
    return {"extremal",
            {summarize("Fc = 1 exactly for paths and Fc = n-1 exactly for K_n and stars", results,
                       std::to_string(corpus.size()) + " labeled connected graphs, 2 <= n <= 6")}};
}

Suite bounds(const Options& opt) {
    auto corpus = small_connected_corpus();
    constexpr int kProps = 7;
    const char* names[kProps] = {
        "F <= Fc on every connected graph",
        "Fc >= leaf count on every connected non-path",
        "Fc >= path cover number",
        "|f(G;v)| <= 1 for every vertex",
        "R1 and R2 lie inside every minimum connected forcing set",
        "every minimum connected forcing set keeps all-but-one leaves per bundle",
        "leaf reduction preserves Fc",
    };

    auto results = run_indexed(static_cast<long long>(corpus.size()), opt.threads, [&](long long i) {
        const Graph& g = corpus[static_cast<std::size_t>(i)];
        const int n = g.vertex_count();
        std::string bad;
        auto fail = [&](int prop, const std::string& msg) {
            bad += std::to_string(prop) + ":" + msg + "\n";
        };

        SolveResult fc = connected_forcing_number(g, true);
        SolveResult f = forcing_number(g);
        bool path = is_path_graph(g);

        if (f.value > fc.value) fail(0, "F=" + std::to_string(f.value) + " > Fc=" + std::to_string(fc.value));
        if (!path && fc.value < leaf_number(g))
            fail(1, "Fc=" + std::to_string(fc.value) + " < L=" + std::to_string(leaf_number(g)));
        if (fc.value < path_cover_number(g))
            fail(2, "Fc=" + std::to_string(fc.value) + " < P=" + std::to_string(path_cover_number(g)));
        if (n >= 2) {
            for (int v = 0; v < n; ++v) {
                int spread = forcing_spread(g, v);
                if (spread < -1 || spread > 1)
                    fail(3, "f(G;" + std::to_string(v) + ")=" + std::to_string(spread));
            }
        }

        StructuralReport rep = compute_r_sets(g);
        VertexSet mandatory = rep.r1 | rep.r2;
        for (const auto& w : fc.witnesses)
            if (!mandatory.is_subset_of(w)) fail(4, "witness " + w.to_string() + " misses R1/R2");

        if (!path) {
            for (int v = 0; v < rep.reduced.vertex_count(); ++v) {
                VertexSet bundle(n);
                for (int u : rep.reduced.neighbors(v))
                    if (rep.reduced.degree(u) == 1)
                        bundle.add(rep.reduced_to_original[static_cast<std::size_t>(u)]);
                if (bundle.count() < 1) continue;
                for (const auto& w : fc.witnesses)
                    if ((bundle - w).count() > 1)
                        fail(5, "witness " + w.to_string() + " misses two leaves of a bundle");
            }
            int fc_reduced = connected_forcing_number(rep.reduced).value;
            if (fc_reduced != fc.value)
                fail(6, "Fc=" + std::to_string(fc.value) + " but reduced Fc=" + std::to_string(fc_reduced));
        }
        return bad;
    });

    Suite suite{"bounds", {}};
    for (int p = 0; p < kProps; ++p) {
        long long failures = 0;
        std::string samples;
        std::string prefix = std::to_string(p) + ":";
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (results[i].empty()) continue;
            std::istringstream ss(results[i]);
            std::string line;
            while (std::getline(ss, line)) {
                if (line.rfind(prefix, 0) != 0) continue;
                ++failures;
                if (failures <= 3) samples += " [#" + std::to_string(i) + ": " + line.substr(prefix.size()) + "]";
            }
        }
        suite.checks.push_back({names[p], failures == 0,
                                failures == 0
                                    ? std::to_string(corpus.size()) + " graphs (all connected n <= 6, 1000 random n=7)"
                                    : std::to_string(failures) + " failure(s)" + samples});
    }
    return suite;
}

Suite engine_properties(const Options& opt) {
    constexpr int kInstances = 1000;
    auto results = run_indexed(kInstances, opt.threads, [&](long long i) {
        std::mt19937_64 rng(123000 + static_cast<std::uint64_t>(i));
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph_any(rng, n);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) s.add(v);

        ForcingTrace trace = forcing_closure(g, s);
        for (int r = 0; r < 20; ++r) {
            ForcingTrace other = forcing_closure_random_order(g, s, rng());
            if (!(other.final == trace.final)) return std::string("randomized order changed the closure");
            for (const auto& chain : forcing_chains(other, g))
                if (!chain_induces_path(g, chain)) return std::string("random-order chain is not an induced path");
        }
        if (!forcing_closure(g, trace.final).steps.empty()) return std::string("closure is not idempotent");

        VertexSet bigger = s;
        for (int v = 0; v < n; ++v)
            if (rng() % 4 == 0) bigger.add(v);
        VertexSet bigger_final = closure_final(g, bigger);
        if (!trace.final.is_subset_of(bigger_final)) return std::string("closure is not monotone");
        if (trace.final.count() == n && bigger_final.count() != n)
            return std::string("superset of a forcing set failed to force");

        for (const auto& chain : forcing_chains(trace, g))
            if (!chain_induces_path(g, chain)) return std::string("chain is not an induced path");

        if (n >= 2 && is_connected(g) && !is_path_graph(g)) {
            VertexSet w = connected_forcing_number(g).witnesses.at(0);
            VertexSet leaf_set = leaves(g);
            for (const auto& chain : forcing_chains(forcing_closure(g, w), g)) {
                int chain_leaves = 0;
                for (int v : chain)
                    if (leaf_set.contains(v)) ++chain_leaves;
                if (chain_leaves > 1) return std::string("chain of a connected forcing set holds two leaves");
            }
        }
        return std::string{};
    });
    return {"bounds",
            {summarize("closure confluence, monotonicity, idempotence, and chain laws", results,
                       std::to_string(kInstances) + " random instances, n <= 10, 20 random orders each")}};
}

std::vector<Suite> run_suites(const std::string& which, const Options& opt) {
    std::vector<Suite> out;
    auto want = [&](const char* name) { return which == name || which == "all"; };
    if (want("trees")) {
        out.push_back(tree_formula(opt));
        out.push_back(tree_counting(opt));
    }
    if (want("clique")) out.push_back(single_clique(opt));
    if (want("spreads")) out.push_back(known_values(opt));
    if (want("snark")) out.push_back(snark_bound(opt));
    if (want("extremal")) out.push_back(extremal(opt));
    if (want("bounds")) {
        out.push_back(bounds(opt));
        out.push_back(engine_properties(opt));
    }
    if (out.empty()) throw PreconditionError("unknown verify suite '" + which + "'");
    return out;
}

}  // namespace cforce::verify
