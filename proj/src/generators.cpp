#include "cforce/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cforce/structure.hpp"

namespace cforce {

namespace {

// The dense adjacency representation costs n^2 bits per graph; generated
// orders stay within desk scale.
constexpr int kMaxOrder = 4096;

void require(bool ok, const std::string& what) {
    if (!ok) throw FamilyError(what);
}

void require_order(long long n) {
    require(n <= kMaxOrder, "generated graphs support at most " + std::to_string(kMaxOrder) +
                                " vertices, requested " + std::to_string(n));
}

Graph from_prufer(const std::vector<int>& seq, int n) {
    if (n == 1) return Graph(1, {});
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<std::size_t>(s)];

    std::set<int> leaves_now;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves_now.insert(v);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int s : seq) {
        int leaf = *leaves_now.begin();
        leaves_now.erase(leaves_now.begin());
        edges.emplace_back(leaf, s);
        if (--deg[static_cast<std::size_t>(s)] == 1) leaves_now.insert(s);
    }
    int a = *leaves_now.begin();
    int b = *std::next(leaves_now.begin());
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

// Edge bit order: (0,1),(0,2),...,(0,n-1),(1,2),...
std::vector<std::pair<int, int>> edge_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    return slots;
}

Graph from_mask(int n, const std::vector<std::pair<int, int>>& slots, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask & (1u << b)) edges.push_back(slots[b]);
    return Graph(n, edges);
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& name, const std::vector<int>& params) {
    auto arity = [&](std::size_t want) {
        require(params.size() == want, "family '" + name + "' takes " + std::to_string(want) +
                                           " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "path") {
        arity(1);
        require(params[0] >= 1, "path needs n >= 1");
        return {Family::path, params};
    }
    if (name == "cycle") {
        arity(1);
        require(params[0] >= 3, "cycle needs n >= 3");
        return {Family::cycle, params};
    }
    if (name == "complete") {
        arity(1);
        require(params[0] >= 1, "complete needs n >= 1");
        return {Family::complete, params};
    }
    if (name == "star") {
        arity(1);
        require(params[0] >= 2, "star needs order n >= 2");
        return {Family::star, params};
    }
    if (name == "hypercube") {
        arity(1);
        require(params[0] >= 1 && params[0] <= 12, "hypercube needs 1 <= d <= 12");
        return {Family::hypercube, params};
    }
    if (name == "torus") {
        arity(2);
        require(params[0] >= 3 && params[0] <= params[1], "torus needs 3 <= rows <= cols");
        return {Family::torus, params};
    }
    if (name == "flower_snark") {
        arity(1);
        require(params[0] >= 3 && params[0] % 2 == 1, "flower_snark needs odd k >= 3");
        return {Family::flower_snark, params};
    }
    if (name == "pendant_path") {
        arity(1);
        require(params[0] >= 2, "pendant_path needs k >= 2");
        return {Family::pendant_path, params};
    }
    if (name == "pendant_cycle") {
        arity(1);
        require(params[0] >= 4 && params[0] % 2 == 0, "pendant_cycle needs even k >= 4");
        return {Family::pendant_cycle, params};
    }
    throw FamilyError("unknown family '" + name + "'");
}

std::string FamilySpec::name() const {
    switch (family) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::hypercube: return "hypercube";
        case Family::torus: return "torus";
        case Family::flower_snark: return "flower_snark";
        case Family::pendant_path: return "pendant_path";
        default: return "pendant_cycle";
    }
}

Graph make(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return make_path(spec.params[0]);
        case Family::cycle: return make_cycle(spec.params[0]);
        case Family::complete: return make_complete(spec.params[0]);
        case Family::star: return make_star(spec.params[0]);
        case Family::hypercube: return make_hypercube(spec.params[0]);
        case Family::torus: return make_torus(spec.params[0], spec.params[1]);
        case Family::flower_snark: return make_flower_snark(spec.params[0]);
        case Family::pendant_path: return make_pendant_path(spec.params[0]);
        default: return make_pendant_cycle(spec.params[0]);
    }
}

Graph make_path(int n) {
    require(n >= 1, "path needs n >= 1");
    require_order(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    require_order(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

Graph make_complete(int n) {
    require(n >= 1, "complete needs n >= 1");
    require_order(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph make_star(int n) {
    require(n >= 2, "star needs order n >= 2");
    require_order(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, edges);
}

Graph make_hypercube(int d) {
    require(d >= 1 && d <= 12, "hypercube needs 1 <= d <= 12");
    int n = 1 << d;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
    return Graph(n, edges);
}

Graph make_torus(int rows, int cols) {
    require(rows >= 3 && rows <= cols, "torus needs 3 <= rows <= cols");
    require_order(static_cast<long long>(rows) * cols);
    auto id = [cols](int i, int j) { return i * cols + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            edges.emplace_back(id(i, j), id((i + 1) % rows, j));
            edges.emplace_back(id(i, j), id(i, (j + 1) % cols));
        }
    return Graph(rows * cols, edges);
}

Graph make_flower_snark(int k) {
    require(k >= 3 && k % 2 == 1, "flower_snark needs odd k >= 3");
    require_order(4ll * k);
    auto A = [&](int j) { return j - 1; };
    auto B = [&](int j) { return k + j - 1; };
    auto C = [&](int j) { return 2 * k + j - 1; };
    auto D = [&](int j) { return 3 * k + j - 1; };
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j <= k; ++j) {
        edges.emplace_back(A(j), B(j));
        edges.emplace_back(A(j), C(j));
        edges.emplace_back(A(j), D(j));
    }
    for (int j = 1; j <= k; ++j) edges.emplace_back(B(j), B(j % k + 1));
    for (int j = 1; j < k; ++j) edges.emplace_back(C(j), C(j + 1));
    edges.emplace_back(C(k), D(1));
    for (int j = 1; j < k; ++j) edges.emplace_back(D(j), D(j + 1));
    edges.emplace_back(D(k), C(1));
    return Graph(4 * k, edges);
}

Graph make_pendant_path(int k) {
    require(k >= 2, "pendant_path needs k >= 2");
    require_order(k + 4ll);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, k);
    edges.emplace_back(0, k + 1);
    edges.emplace_back(k - 1, k + 2);
    edges.emplace_back(k - 1, k + 3);
    return Graph(k + 4, edges);
}

Graph make_pendant_cycle(int k) {
    require(k >= 4 && k % 2 == 0, "pendant_cycle needs even k >= 4");
    require_order(k + 4ll);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(k - 1, 0);
    edges.emplace_back(0, k);
    edges.emplace_back(1, k + 1);
    edges.emplace_back(k / 2, k + 2);
    edges.emplace_back(k / 2 + 1, k + 3);
    return Graph(k + 4, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "random_tree needs n >= 1");
    if (n <= 2) return make_path(n);
    std::mt19937_64 rng(seed);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return from_prufer(seq, n);
}

Graph random_connected_graph(int n, std::uint64_t seed) {
    if (n < 1 || n > 7) throw BudgetError("random_connected_graph supports 1 <= n <= 7");
    if (n == 1) return Graph(1, {});
    auto slots = edge_slots(n);
    std::mt19937_64 rng(seed);
    while (true) {
        auto mask = static_cast<std::uint32_t>(rng() & ((1ull << slots.size()) - 1));
        Graph g = from_mask(n, slots, mask);
        if (is_connected(g)) return g;
    }
}

void all_labeled_trees(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 8) throw BudgetError("all_labeled_trees supports 1 <= n <= 8");
    if (n <= 2) {
        fn(make_path(n));
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        fn(from_prufer(seq, n));
        int i = n - 3;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
            seq[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
    }
}

void all_connected_graphs(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw BudgetError("all_connected_graphs supports 1 <= n <= 7");
    auto slots = edge_slots(n);
    std::uint32_t total = 1u << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Graph g = from_mask(n, slots, mask);
        if (is_connected(g)) fn(g);
    }
}

void all_connected_graphs_up_to_iso(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 6) throw BudgetError("all_connected_graphs_up_to_iso supports 1 <= n <= 6");
    auto slots = edge_slots(n);
    std::vector<std::vector<int>> slot_index(static_cast<std::size_t>(n),
                                             std::vector<int>(static_cast<std::size_t>(n), -1));
    for (std::size_t b = 0; b < slots.size(); ++b) {
        auto [i, j] = slots[b];
        slot_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(b);
        slot_index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<int>(b);
    }

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::uint32_t total = 1u << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool canonical = true;
        for (const auto& p : perms) {
            std::uint32_t mapped = 0;
            for (std::size_t b = 0; b < slots.size(); ++b) {
                if (!(mask & (1u << b))) continue;
                auto [i, j] = slots[b];
                mapped |= 1u << slot_index[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]
                                          [static_cast<std::size_t>(p[static_cast<std::size_t>(j)])];
            }
            if (mapped < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        Graph g = from_mask(n, slots, mask);
        if (is_connected(g)) fn(g);
    }
}

}  // namespace cforce
