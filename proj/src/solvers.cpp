#include "cforce/solvers.hpp"

#include <algorithm>
#include <bit>

#include "cforce/structure.hpp"

namespace cforce {

namespace {

void charge(long long& explored, const std::optional<long long>& budget) {
    ++explored;
    if (budget && explored > *budget)
        throw BudgetError("candidate budget of " + std::to_string(*budget) + " exceeded");
}

// All k-subsets of 0..n-1 in lexicographic order.
template <class Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!visit(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void validate_witnesses(const Graph& g, const SolveResult& res, bool connected) {
    for (const auto& w : res.witnesses) {
        bool ok = connected ? is_connected_forcing_set(g, w) : is_forcing_set(g, w);
        if (!ok || w.count() != res.value)
            throw Error("internal: solver produced an invalid witness");
    }
}

SolveResult forcing_number_connected(const Graph& g, bool collect_all,
                                     const std::optional<long long>& budget) {
    const int n = g.vertex_count();
    SolveResult res;
    for (int k = 1; k <= n; ++k) {
        bool found = false;
        for_each_subset(n, k, [&](const std::vector<int>& idx) {
            charge(res.explored, budget);
            VertexSet s(n);
            for (int v : idx) s.add(v);
            if (is_forcing_set(g, s)) {
                res.witnesses.push_back(std::move(s));
                found = true;
                return collect_all;
            }
            return true;
        });
        if (found) {
            res.value = k;
            break;
        }
    }
    return res;
}

}  // namespace

SolveResult forcing_number(const Graph& g, bool collect_all, std::optional<long long> budget) {
    if (is_connected(g)) {
        SolveResult res = forcing_number_connected(g, collect_all, budget);
        validate_witnesses(g, res, false);
        return res;
    }

    // Per-component solve; a minimum forcing set is a union of per-component
    // minimum sets, so witnesses combine as a cartesian product.
    const int n = g.vertex_count();
    SolveResult res;
    std::vector<VertexSet> combined{VertexSet(n)};
    for (const auto& comp : connected_components(g)) {
        auto [sub, to_old] = g.without_vertices(comp.complement());
        SolveResult part = forcing_number_connected(sub, collect_all, budget);
        res.value += part.value;
        res.explored += part.explored;
        std::vector<VertexSet> grown;
        grown.reserve(combined.size() * part.witnesses.size());
        for (const auto& base : combined) {
            for (const auto& w : part.witnesses) {
                VertexSet s = base;
                for (int v : w) s.add(to_old[static_cast<std::size_t>(v)]);
                grown.push_back(std::move(s));
                if (!collect_all) break;
            }
            if (!collect_all) break;
        }
        combined = std::move(grown);
    }
    res.witnesses = std::move(combined);
    std::sort(res.witnesses.begin(), res.witnesses.end(), VertexSet::lex_less);
    validate_witnesses(g, res, false);
    return res;
}

SolveResult connected_forcing_number(const Graph& g, bool collect_all,
                                     std::optional<long long> budget) {
    if (!is_connected(g))
        throw PreconditionError("disconnected graphs have no connected forcing set");
    const int n = g.vertex_count();
    SolveResult res;
    for (int k = 1; k <= n; ++k) {
        bool found = false;
        for_each_connected_subset(g, k, [&](const VertexSet& s) {
            charge(res.explored, budget);
            if (is_forcing_set(g, s)) {
                res.witnesses.push_back(s);
                found = true;
                return collect_all;
            }
            return true;
        });
        if (found) {
            res.value = k;
            break;
        }
    }
    if (collect_all) std::sort(res.witnesses.begin(), res.witnesses.end(), VertexSet::lex_less);
    validate_witnesses(g, res, true);
    return res;
}

long long count_minimum_connected_forcing_sets(const Graph& g) {
    return static_cast<long long>(connected_forcing_number(g, true).witnesses.size());
}

int forcing_spread(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("forcing_spread requires at least 2 vertices");
    if (v < 0 || v >= n) throw PreconditionError("forcing_spread: vertex out of range");
    if (!is_connected(g)) throw PreconditionError("forcing_spread requires a connected graph");
    int before = forcing_number(g).value;
    auto [rest, to_old] = g.without_vertices(VertexSet::of(n, {v}));
    return before - forcing_number(rest).value;
}

int connected_forcing_spread(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("connected_forcing_spread requires at least 2 vertices");
    if (v < 0 || v >= n) throw PreconditionError("connected_forcing_spread: vertex out of range");
    if (!is_connected(g)) throw PreconditionError("connected_forcing_spread requires a connected graph");
    if (articulation_points(g).contains(v))
        throw PreconditionError("connected_forcing_spread is undefined for articulation points");
    int before = connected_forcing_number(g).value;
    auto [rest, to_old] = g.without_vertices(VertexSet::of(n, {v}));
    return before - connected_forcing_number(rest).value;
}

int path_cover_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw BudgetError("path_cover_number supports up to 16 vertices");

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edge_list()) {
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
    }
    const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);

    // mask induces a path: connected, degrees <= 2, and tree edge count.
    std::vector<char> is_path(static_cast<std::size_t>(all) + 1, 0);
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        int members = std::popcount(mask);
        int edges2 = 0;
        bool degrees_ok = true;
        for (std::uint32_t m = mask; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int d = std::popcount(adj[static_cast<std::size_t>(v)] & mask);
            if (d > 2) {
                degrees_ok = false;
                break;
            }
            edges2 += d;
        }
        if (!degrees_ok || edges2 != 2 * (members - 1)) continue;
        std::uint32_t seen = mask & (~mask + 1);
        while (true) {
            std::uint32_t grow = seen;
            for (std::uint32_t m = seen; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                grow |= adj[static_cast<std::size_t>(v)] & mask;
            }
            if (grow == seen) break;
            seen = grow;
        }
        is_path[mask] = (seen == mask);
    }

    std::vector<int> cover(static_cast<std::size_t>(all) + 1, n + 1);
    cover[0] = 0;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
            if ((sub & low) && is_path[sub])
                cover[mask] = std::min(cover[mask], cover[mask ^ sub] + 1);
            if (sub == 0) break;
        }
    }
    return cover[all];
}

}  // namespace cforce
