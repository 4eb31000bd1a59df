#pragma once

#include <utility>

#include "cforce/graph.hpp"
#include "cforce/structure.hpp"

namespace cforce {

struct CliqueStructure {
    VertexSet clique;  // the unique block of size > 2, when present
    bool is_single_clique_graph = false;
};

// True when exactly one block has 3 or more vertices and that block induces
// a complete subgraph; every other block is then a bridge. Requires a
// connected graph.
CliqueStructure detect_single_clique(const Graph& g);

bool is_tree(const Graph& g);

// Connected forcing number of a tree with a witness set, in one structural
// pass (no exhaustive search): 1 for paths, otherwise |R1| + |R2| plus one
// mandatory leaf short of every leaf bundle of the reduced tree. Requires a
// tree.
std::pair<int, VertexSet> tree_connected_forcing(const Graph& t);

// Number of distinct minimum connected forcing sets of a non-path tree:
// the product of the reduced tree's per-vertex leaf counts. Requires a
// non-path tree.
long long tree_count_minimum_sets(const Graph& t);

// Connected forcing number of a single-clique graph with a witness set.
// Requires detect_single_clique(g).is_single_clique_graph.
std::pair<int, VertexSet> single_clique_connected_forcing(const Graph& g);

enum class ExtremalClass {
    fc_is_1,                  // paths: the only graphs forced by one connected vertex
    fc_is_n_minus_1_complete, // complete graphs
    fc_is_n_minus_1_star,     // stars on at least 4 vertices
    neither,
};

const char* to_string(ExtremalClass c);

// Pure shape test (path / complete / star), no search. K_2 is both a path
// and complete; the path class wins. Requires a connected graph, n >= 2.
ExtremalClass classify_extremal(const Graph& g);

// The size-(k+2) connected forcing set of the flower snark on 4k vertices,
// in make_flower_snark's labeling: the whole C-cycle half plus A_1 and D_1.
// Requires odd k >= 3.
VertexSet flower_snark_upper_set(int k);

}  // namespace cforce
