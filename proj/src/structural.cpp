#include "cforce/structural.hpp"

#include <algorithm>
#include <vector>

namespace cforce {

namespace {

// Colors all-but-one leaves of every leaf-adjacent vertex of the reduced
// graph (skipping the largest-id leaf of each bundle), in original ids.
// Returns the number of leaves colored.
int color_mandatory_leaves(const Graph& reduced, const std::vector<int>& to_original,
                           VertexSet& out) {
    int colored = 0;
    for (int v = 0; v < reduced.vertex_count(); ++v) {
        std::vector<int> bundle;
        for (int u : reduced.neighbors(v))
            if (reduced.degree(u) == 1) bundle.push_back(u);
        if (bundle.empty()) continue;
        for (std::size_t i = 0; i + 1 < bundle.size(); ++i) {
            out.add(to_original[static_cast<std::size_t>(bundle[i])]);
            ++colored;
        }
    }
    return colored;
}

}  // namespace

CliqueStructure detect_single_clique(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("detect_single_clique requires a connected graph");
    const int n = g.vertex_count();
    if (n < 3) return {VertexSet(n), false};

    VertexSet big(n);
    int big_count = 0;
    for (const auto& b : blocks(g)) {
        if (b.count() < 3) continue;
        ++big_count;
        big = b;
    }
    if (big_count != 1) return {VertexSet(n), false};
    for (int v : big)
        if ((g.neighbors(v) & big).count() != big.count() - 1) return {VertexSet(n), false};
    return {big, true};
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::pair<int, VertexSet> tree_connected_forcing(const Graph& t) {
    if (!is_tree(t)) throw PreconditionError("tree_connected_forcing requires a tree");
    const int n = t.vertex_count();

    if (t.max_degree() < 3) {  // a path or a single vertex
        int pick = 0;
        for (int v = 1; v < n; ++v)
            if (t.degree(v) < t.degree(pick)) pick = v;
        return {1, VertexSet::of(n, {pick})};
    }

    // One rooted pass computes, for every directed edge (v,u), whether the
    // component of T - v containing u is a path with u as an endpoint.
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    {
        VertexSet seen(n);
        seen.add(0);
        order.push_back(0);
        for (std::size_t head = 0; head < order.size(); ++head) {
            int v = order[head];
            for (int u : t.neighbors(v)) {
                if (seen.contains(u)) continue;
                seen.add(u);
                parent[static_cast<std::size_t>(u)] = v;
                order.push_back(u);
            }
        }
    }

    std::vector<char> down(static_cast<std::size_t>(n), 1);  // subtree below v, v an endpoint
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        int kids = 0, only = -1;
        for (int u : t.neighbors(v)) {
            if (u == parent[static_cast<std::size_t>(v)]) continue;
            ++kids;
            only = u;
        }
        if (kids == 0)
            down[static_cast<std::size_t>(v)] = 1;
        else if (kids == 1)
            down[static_cast<std::size_t>(v)] = down[static_cast<std::size_t>(only)];
        else
            down[static_cast<std::size_t>(v)] = 0;
    }

    std::vector<char> up(static_cast<std::size_t>(n), 1);  // rest of tree seen from v, parent an endpoint
    for (int v : order) {
        int p = parent[static_cast<std::size_t>(v)];
        if (p == -1) continue;
        int others = t.degree(p) - 1;
        if (others == 0) {
            up[static_cast<std::size_t>(v)] = 1;
        } else if (others == 1) {
            int o = -1;
            for (int u : t.neighbors(p))
                if (u != v) o = u;
            up[static_cast<std::size_t>(v)] = (o == parent[static_cast<std::size_t>(p)])
                                                  ? up[static_cast<std::size_t>(p)]
                                                  : down[static_cast<std::size_t>(o)];
        } else {
            up[static_cast<std::size_t>(v)] = 0;
        }
    }

    auto pendant_path_toward = [&](int v, int u) -> bool {
        return (u == parent[static_cast<std::size_t>(v)]) ? up[static_cast<std::size_t>(v)]
                                                          : down[static_cast<std::size_t>(u)];
    };

    VertexSet witness(n);
    int value = 0;
    for (int v = 0; v < n; ++v) {
        int d = t.degree(v);
        if (d >= 3) {
            witness.add(v);
            ++value;
        } else if (d == 2) {
            int u1 = t.neighbors(v).first();
            int u2 = t.neighbors(v).next_after(u1);
            if (!pendant_path_toward(v, u1) && !pendant_path_toward(v, u2)) {
                witness.add(v);
                ++value;
            }
        }
    }

    LeafReduction red = reduce_leaves(t);
    value += color_mandatory_leaves(red.graph, red.to_original, witness);
    return {value, witness};
}

long long tree_count_minimum_sets(const Graph& t) {
    if (!is_tree(t)) throw PreconditionError("tree_count_minimum_sets requires a tree");
    if (is_path_graph(t))
        throw PreconditionError("tree_count_minimum_sets requires a non-path tree");
    LeafReduction red = reduce_leaves(t);
    long long product = 1;
    for (int v = 0; v < red.graph.vertex_count(); ++v) {
        int lc = leaf_count_at(red.graph, v);
        if (lc > 0) product *= lc;
    }
    return product;
}

std::pair<int, VertexSet> single_clique_connected_forcing(const Graph& g) {
    CliqueStructure cs = detect_single_clique(g);
    if (!cs.is_single_clique_graph)
        throw PreconditionError("single_clique_connected_forcing requires a single-clique graph");

    StructuralReport rep = compute_r_sets(g);
    VertexSet r12 = rep.r1 | rep.r2;
    VertexSet clique_free = cs.clique - r12;           // may be left uncolored
    VertexSet clique_leafless = cs.clique - rep.r3_reduced;  // can fire the force into the clique

    // Leaving w uncolored needs a distinct leafless clique vertex to force it.
    int skip = -1;
    for (int w : clique_free) {
        VertexSet forcers = clique_leafless;
        if (forcers.contains(w)) forcers.remove(w);
        if (forcers.any()) {
            skip = w;
            break;
        }
    }

    VertexSet witness = r12 | cs.clique;
    int value = witness.count();
    if (skip != -1) {
        witness.remove(skip);
        --value;
    }
    value += color_mandatory_leaves(rep.reduced, rep.reduced_to_original, witness);
    return {value, witness};
}

const char* to_string(ExtremalClass c) {
    switch (c) {
        case ExtremalClass::fc_is_1: return "fc_is_1";
        case ExtremalClass::fc_is_n_minus_1_complete: return "fc_is_n_minus_1_complete";
        case ExtremalClass::fc_is_n_minus_1_star: return "fc_is_n_minus_1_star";
        default: return "neither";
    }
}

ExtremalClass classify_extremal(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("classify_extremal requires at least 2 vertices");
    if (!is_connected(g)) throw PreconditionError("classify_extremal requires a connected graph");
    if (is_path_graph(g)) return ExtremalClass::fc_is_1;
    if (g.edge_count() == n * (n - 1) / 2) return ExtremalClass::fc_is_n_minus_1_complete;
    if (n >= 4 && g.edge_count() == n - 1 && g.max_degree() == n - 1)
        return ExtremalClass::fc_is_n_minus_1_star;
    return ExtremalClass::neither;
}

VertexSet flower_snark_upper_set(int k) {
    if (k < 3 || k % 2 == 0)
        throw PreconditionError("flower_snark_upper_set requires an odd k >= 3");
    VertexSet s(4 * k);
    s.add(0);       // A_1
    s.add(3 * k);   // D_1
    for (int j = 0; j < k; ++j) s.add(2 * k + j);  // C_1..C_k
    return s;
}

}  // namespace cforce
