#include "cforce/structure.hpp"

#include <algorithm>
#include <set>

namespace cforce {

namespace {

VertexSet reach_from(const Graph& g, int start, const VertexSet& allowed) {
    VertexSet seen(g.vertex_count());
    seen.add(start);
    VertexSet frontier = seen;
    while (frontier.any()) {
        VertexSet next(g.vertex_count());
        for (int v : frontier) next |= g.neighbors(v);
        next &= allowed;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
    return reach_from(g, 0, g.full_set()).count() == g.vertex_count();
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_after_removal(g, VertexSet(g.vertex_count()));
}

std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed) {
    VertexSet left = g.full_set() - removed;
    std::vector<VertexSet> out;
    while (left.any()) {
        VertexSet comp = reach_from(g, left.first(), left);
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

struct BlockDecomposition {
    VertexSet articulation;
    std::vector<VertexSet> blocks;
};

// Iterative depth-first lowpoint pass from vertex 0; assumes g connected.
BlockDecomposition decompose_blocks(const Graph& g) {
    const int n = g.vertex_count();
    BlockDecomposition out{VertexSet(n), {}};
    if (n == 1) return out;

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;

    struct Frame {
        int v;
        int parent;
        int last;  // last neighbor id handled; -1 before any
    };
    std::vector<Frame> stack;
    int timer = 0;
    int root_children = 0;

    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, -1});

    while (!stack.empty()) {
        Frame& f = stack.back();
        int u = g.neighbors(f.v).next_after(f.last);
        if (u != -1) {
            f.last = u;
            if (u == f.parent) continue;
            if (disc[static_cast<std::size_t>(u)] == -1) {
                if (f.v == 0) ++root_children;
                edge_stack.emplace_back(f.v, u);
                disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
                stack.push_back({u, f.v, -1});
            } else if (disc[static_cast<std::size_t>(u)] < disc[static_cast<std::size_t>(f.v)]) {
                edge_stack.emplace_back(f.v, u);
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(u)]);
            }
        } else {
            int v = f.v, p = f.parent;
            stack.pop_back();
            if (p == -1) break;
            low[static_cast<std::size_t>(p)] =
                std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
            if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
                if (p != 0) out.articulation.add(p);
                VertexSet block(n);
                while (true) {
                    auto [a, b] = edge_stack.back();
                    edge_stack.pop_back();
                    block.add(a);
                    block.add(b);
                    if (a == p && b == v) break;
                }
                out.blocks.push_back(std::move(block));
            }
        }
    }
    if (root_children >= 2) out.articulation.add(0);
    std::sort(out.blocks.begin(), out.blocks.end(), VertexSet::lex_less);
    return out;
}

}  // namespace

VertexSet articulation_points(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("articulation_points requires a connected graph");
    return decompose_blocks(g).articulation;
}

std::vector<VertexSet> blocks(const Graph& g) {
    if (g.vertex_count() < 2) throw PreconditionError("blocks requires at least 2 vertices");
    if (!is_connected(g)) throw PreconditionError("blocks requires a connected graph");
    return decompose_blocks(g).blocks;
}

VertexSet leaves(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.add(v);
    return out;
}

int leaf_number(const Graph& g) { return leaves(g).count(); }

int leaf_count_at(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("leaf_count_at: vertex out of range");
    int c = 0;
    for (int u : g.neighbors(v))
        if (g.degree(u) == 1) ++c;
    return c;
}

bool is_path_graph(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && g.max_degree() <= 2 && is_connected(g);
}

LeafReduction reduce_leaves(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("reduce_leaves requires a connected graph");
    if (is_path_graph(g)) throw PreconditionError("reduce_leaves is undefined for paths");

    const int n = g.vertex_count();
    VertexSet alive = g.full_set();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    auto alive_neighbor = [&](int v) -> int {  // the unique one when deg[v] == 1
        for (int u : g.neighbors(v))
            if (alive.contains(u)) return u;
        return -1;
    };
    auto eligible = [&](int v) {
        if (!alive.contains(v) || deg[static_cast<std::size_t>(v)] != 1) return false;
        return deg[static_cast<std::size_t>(alive_neighbor(v))] == 2;
    };

    std::set<int> queue;
    for (int v = 0; v < n; ++v)
        if (eligible(v)) queue.insert(v);

    while (!queue.empty()) {
        int leaf = *queue.begin();
        queue.erase(queue.begin());
        int v = alive_neighbor(leaf);
        alive.remove(leaf);
        deg[static_cast<std::size_t>(leaf)] = 0;
        --deg[static_cast<std::size_t>(v)];
        // Re-examine the vertices whose eligibility depends on deg[v].
        for (int x : g.neighbors(v)) {
            if (!alive.contains(x)) continue;
            if (eligible(x))
                queue.insert(x);
            else
                queue.erase(x);
        }
        if (eligible(v))
            queue.insert(v);
        else
            queue.erase(v);
    }

    auto [reduced, to_old] = g.without_vertices(alive.complement());
    return {std::move(reduced), std::move(to_old)};
}

bool is_pendant_path(const Graph& g, int v, const VertexSet& comp) {
    VertexSet attach = g.neighbors(v) & comp;
    if (attach.count() != 1) return false;
    int u = attach.first();
    int internal_edges = 0;
    for (int x : comp) {
        int d = (g.neighbors(x) & comp).count();
        if (d > 2) return false;
        internal_edges += d;
    }
    if (internal_edges / 2 != comp.count() - 1) return false;  // component is connected, so this means a tree
    return (g.neighbors(u) & comp).count() <= 1;               // attachment at an endpoint
}

StructuralReport compute_r_sets(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("compute_r_sets requires a connected graph");
    const int n = g.vertex_count();

    VertexSet arts = decompose_blocks(g).articulation;
    VertexSet r1(n), r2(n);
    for (int v : arts) {
        auto comps = components_after_removal(g, VertexSet::of(n, {v}));
        if (comps.size() >= 3) {
            r1.add(v);
        } else if (comps.size() == 2 && !is_pendant_path(g, v, comps[0]) &&
                   !is_pendant_path(g, v, comps[1])) {
            r2.add(v);
        }
    }

    StructuralReport rep{
        std::move(r1),
        std::move(r2),
        VertexSet(n),
        leaves(g),
        std::move(arts),
        0,
        0,
        n >= 2 ? blocks(g) : std::vector<VertexSet>{},
        g,
        {},
    };
    rep.leaf_number = rep.leaves.count();

    if (is_path_graph(g)) {
        rep.reduced_to_original.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) rep.reduced_to_original[static_cast<std::size_t>(v)] = v;
    } else {
        auto red = reduce_leaves(g);
        rep.reduced = std::move(red.graph);
        rep.reduced_to_original = std::move(red.to_original);
    }

    for (int v = 0; v < rep.reduced.vertex_count(); ++v) {
        int lc = leaf_count_at(rep.reduced, v);
        if (lc == 0) continue;
        rep.r3_reduced.add(rep.reduced_to_original[static_cast<std::size_t>(v)]);
        rep.curly_l += lc - 1;
    }
    return rep;
}

}  // namespace cforce
