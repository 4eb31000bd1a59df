#include "cforce/forcing.hpp"

#include <random>

namespace cforce {

ForcingTrace forcing_closure(const Graph& g, const VertexSet& start) {
    assert(start.ambient_size() == g.vertex_count());
    ForcingTrace trace{start, {}, start};
    bool progress = true;
    while (progress) {
        progress = false;
        VertexSet snapshot = trace.final;
        for (int v : snapshot) {
            int u = VertexSet::unique_member_of_difference(g.neighbors(v), snapshot);
            if (u == -1 || trace.final.contains(u)) continue;
            trace.final.add(u);
            trace.steps.emplace_back(v, u);
            progress = true;
        }
    }
    return trace;
}

ForcingTrace forcing_closure_random_order(const Graph& g, const VertexSet& start, std::uint64_t seed) {
    assert(start.ambient_size() == g.vertex_count());
    std::mt19937_64 rng(seed);
    ForcingTrace trace{start, {}, start};
    while (true) {
        std::vector<std::pair<int, int>> available;
        for (int v : trace.final) {
            int u = VertexSet::unique_member_of_difference(g.neighbors(v), trace.final);
            if (u != -1) available.emplace_back(v, u);
        }
        if (available.empty()) break;
        auto [v, u] = available[rng() % available.size()];
        trace.final.add(u);
        trace.steps.emplace_back(v, u);
    }
    return trace;
}

VertexSet closure_final(const Graph& g, const VertexSet& start) {
    assert(start.ambient_size() == g.vertex_count());
    VertexSet colored = start;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = colored.first(); v != -1; v = colored.next_after(v)) {
            int u = VertexSet::unique_member_of_difference(g.neighbors(v), colored);
            if (u == -1) continue;
            colored.add(u);
            progress = true;
        }
    }
    return colored;
}

bool is_forcing_set(const Graph& g, const VertexSet& s) {
    return closure_final(g, s).count() == g.vertex_count();
}

bool induces_connected_subgraph(const Graph& g, const VertexSet& s) {
    if (s.count() <= 1) return true;
    VertexSet seen(g.vertex_count());
    seen.add(s.first());
    VertexSet frontier = seen;
    while (frontier.any()) {
        VertexSet next(g.vertex_count());
        for (int v : frontier) next |= g.neighbors(v);
        next &= s;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

bool is_connected_forcing_set(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw PreconditionError("is_connected_forcing_set requires a nonempty set");
    return induces_connected_subgraph(g, s) && is_forcing_set(g, s);
}

std::vector<std::vector<int>> forcing_chains(const ForcingTrace& trace, const Graph& g) {
    const int n = g.vertex_count();
    if (trace.initial.ambient_size() != n || trace.final.ambient_size() != n)
        throw InvalidTraceError("trace does not match the graph's vertex count");
    if (!trace.initial.is_subset_of(trace.final))
        throw InvalidTraceError("initial set not contained in final set");

    std::vector<int> next(static_cast<std::size_t>(n), -1);
    VertexSet colored = trace.initial;
    for (auto [f, u] : trace.steps) {
        if (f < 0 || f >= n || u < 0 || u >= n) throw InvalidTraceError("step vertex out of range");
        if (!colored.contains(f)) throw InvalidTraceError("forcer was not colored at its step");
        if (colored.contains(u)) throw InvalidTraceError("vertex forced twice");
        if (VertexSet::unique_member_of_difference(g.neighbors(f), colored) != u)
            throw InvalidTraceError("forcer did not have the forced vertex as its only uncolored neighbor");
        next[static_cast<std::size_t>(f)] = u;
        colored.add(u);
    }
    if (!(colored == trace.final)) throw InvalidTraceError("steps do not reproduce the final set");

    std::vector<std::vector<int>> chains;
    for (int v : trace.initial) {
        std::vector<int> chain;
        for (int x = v; x != -1; x = next[static_cast<std::size_t>(x)]) chain.push_back(x);
        chains.push_back(std::move(chain));
    }
    return chains;
}

void write_trace(std::ostream& out, const ForcingTrace& trace) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
        out << i << ' ' << trace.steps[i].first << ' ' << trace.steps[i].second << '\n';
}

}  // namespace cforce
