#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cforce/forcing.hpp"
#include "cforce/graph.hpp"

namespace cforce {

struct SolveResult {
    int value = 0;
    std::vector<VertexSet> witnesses;  // all minimum sets when collect_all, else the first found
    long long explored = 0;            // candidate sets tested
};

// Minimum size of a forcing set, by exhaustive search in increasing
// cardinality. Disconnected graphs are solved per component (the closure
// never crosses components) and the per-component answers combined. With
// collect_all, every minimum set is returned, sorted by member sequence.
// A budget bounds the number of candidates tested; exceeding it throws
// BudgetError rather than returning a wrong value.
SolveResult forcing_number(const Graph& g, bool collect_all = false,
                           std::optional<long long> budget = std::nullopt);

// Minimum size of a connected forcing set. Candidates are generated by
// growing connected subsets level by cardinality level, never testing a
// disconnected set. Requires a connected graph.
SolveResult connected_forcing_number(const Graph& g, bool collect_all = false,
                                     std::optional<long long> budget = std::nullopt);

long long count_minimum_connected_forcing_sets(const Graph& g);

// F(G) - F(G - v). Requires a connected graph with at least 2 vertices;
// G - v may be disconnected.
int forcing_spread(const Graph& g, int v);

// Fc(G) - Fc(G - v). Requires v to be a non-articulation point.
int connected_forcing_spread(const Graph& g, int v);

// Minimum number of vertex-disjoint induced paths covering V, by dynamic
// programming over vertex subsets. Supports n <= 16.
int path_cover_number(const Graph& g);

namespace detail {

template <class Visit>
bool esu_extend(const Graph& g, int k, VertexSet& sub, int sub_size, VertexSet ext,
                const VertexSet& nbhd, const VertexSet& above_root, Visit& visit) {
    if (sub_size == k) return visit(std::as_const(sub));
    while (ext.any()) {
        int w = ext.first();
        ext.remove(w);
        VertexSet ext_w = ext | ((g.neighbors(w) & above_root) - nbhd);
        sub.add(w);
        bool keep_going = esu_extend(g, k, sub, sub_size + 1, std::move(ext_w),
                                     nbhd | g.neighbors(w), above_root, visit);
        sub.remove(w);
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace detail

// Visits every vertex set of size exactly k that induces a connected
// subgraph, each set exactly once (grown from its smallest member, with new
// candidates restricted to ids above that root). Visit is bool(const
// VertexSet&); returning false stops the enumeration.
template <class Visit>
void for_each_connected_subset(const Graph& g, int k, Visit&& visit) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) return;
    for (int root = 0; root < n; ++root) {
        VertexSet sub(n);
        sub.add(root);
        if (k == 1) {
            if (!visit(std::as_const(sub))) return;
            continue;
        }
        VertexSet above_root(n);
        for (int v = root + 1; v < n; ++v) above_root.add(v);
        VertexSet nbhd = g.neighbors(root);
        nbhd.add(root);
        VertexSet ext = g.neighbors(root) & above_root;
        if (!detail::esu_extend(g, k, sub, 1, std::move(ext), nbhd, above_root, visit)) return;
    }
}

}  // namespace cforce
