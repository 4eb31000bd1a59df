#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cforce/graph.hpp"

namespace cforce {

enum class Family {
    path,
    cycle,
    complete,
    star,
    hypercube,
    torus,
    flower_snark,
    pendant_path,
    pendant_cycle,
};

struct FamilySpec {
    Family family;
    std::vector<int> params;

    // Validates the name, arity, and parameter constraints; throws FamilyError.
    static FamilySpec parse(const std::string& name, const std::vector<int>& params);
    std::string name() const;
};

Graph make(const FamilySpec& spec);

// Fixed vertex labelings, so constructions can be written as concrete id sets:
//   path n:          0-1-...-(n-1); n >= 1
//   cycle n:         path n plus the edge (n-1,0); n >= 3
//   complete n:      K_n; n >= 1
//   star n:          K_{1,n-1} on n vertices, center 0; n >= 2
//   hypercube d:     vertex = d-bit mask, edges across single bit flips; 1 <= d <= 12
//   torus r c:       C_r x C_c, vertex (i,j) -> i*c + j, wraparound both ways; 3 <= r <= c
//   flower_snark k:  n = 4k; star centers A_j = j-1, outer B_j = k+j-1,
//                    C_j = 2k+j-1, D_j = 3k+j-1 (j = 1..k); the B's form a
//                    k-cycle and C_1..C_k,D_1..D_k a 2k-cycle; odd k >= 3
//   pendant_path k:  path 0..k-1 with pendant pairs {k,k+1} on 0 and
//                    {k+2,k+3} on k-1; k >= 2
//   pendant_cycle k: cycle 0..k-1 with pendants k->0, k+1->1, k+2->k/2,
//                    k+3->k/2+1 (two maximally distant cycle edges); even k >= 4
// Generated orders are capped at 4096 vertices (the adjacency representation
// is dense).
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int n);
Graph make_hypercube(int d);
Graph make_torus(int rows, int cols);
Graph make_flower_snark(int k);
Graph make_pendant_path(int k);
Graph make_pendant_cycle(int k);

// Uniform labeled tree from a random length-(n-2) Prufer sequence;
// deterministic for a fixed seed. n >= 1.
Graph random_tree(int n, std::uint64_t seed);

// Rejection-sampled connected graph with edge probability 1/2; n <= 7.
Graph random_connected_graph(int n, std::uint64_t seed);

// All n^(n-2) labeled trees by exhaustive Prufer sequences; 1 <= n <= 8.
void all_labeled_trees(int n, const std::function<void(const Graph&)>& fn);

// All connected graphs on labeled vertices 0..n-1; 1 <= n <= 7.
void all_connected_graphs(int n, const std::function<void(const Graph&)>& fn);

// One representative per isomorphism class, by canonical adjacency-mask
// minimization over all vertex permutations; 1 <= n <= 6.
void all_connected_graphs_up_to_iso(int n, const std::function<void(const Graph&)>& fn);

}  // namespace cforce
