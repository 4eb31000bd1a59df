#include "cforce/graph.hpp"

namespace cforce {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n <= 0) throw PreconditionError("graph must have at least one vertex");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidEdgeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw InvalidEdgeError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }
    int deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v);
    m_ = deg_sum / 2;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = neighbors(u).next_after(u); v != -1; v = neighbors(u).next_after(v))
            out.emplace_back(u, v);
    return out;
}

std::pair<Graph, std::vector<int>> Graph::without_vertices(const VertexSet& removed) const {
    assert(removed.ambient_size() == n_);
    std::vector<int> to_old;
    std::vector<int> to_new(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) {
        if (removed.contains(v)) continue;
        to_new[static_cast<std::size_t>(v)] = static_cast<int>(to_old.size());
        to_old.push_back(v);
    }
    if (to_old.empty()) throw PreconditionError("cannot remove every vertex of a graph");

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : edge_list()) {
        int nu = to_new[static_cast<std::size_t>(u)];
        int nv = to_new[static_cast<std::size_t>(v)];
        if (nu != -1 && nv != -1) edges.emplace_back(nu, nv);
    }
    return {Graph(static_cast<int>(to_old.size()), edges), std::move(to_old)};
}

}  // namespace cforce
