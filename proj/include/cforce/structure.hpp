#pragma once

#include <vector>

#include "cforce/graph.hpp"

namespace cforce {

bool is_connected(const Graph& g);

// Components in ascending order of their smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Components of the induced subgraph on V - removed, as vertex sets over the
// original ids. Empty list when everything was removed.
std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed);

// Cut vertices, by one depth-first lowpoint pass. Requires a connected graph.
VertexSet articulation_points(const Graph& g);

// Vertex sets of the biconnected components, sorted by member sequence.
// Requires a connected graph with at least 2 vertices.
std::vector<VertexSet> blocks(const Graph& g);

VertexSet leaves(const Graph& g);
int leaf_number(const Graph& g);
int leaf_count_at(const Graph& g, int v);

// True for P_n, n >= 1 (connected, acyclic, max degree <= 2).
bool is_path_graph(const Graph& g);

struct LeafReduction {
    Graph graph;
    std::vector<int> to_original;  // new id -> original id, ascending
};

// Fixed point of repeatedly deleting a leaf whose unique neighbor has
// degree 2; deletion picks the smallest eligible original id each step, and
// the result is independent of that choice. Requires a connected non-path
// graph (a path would reduce to nothing).
LeafReduction reduce_leaves(const Graph& g);

// Component `comp` of g - v hangs off v as a pendant path: v attaches to it
// by exactly one edge, the component induces a path, and the attachment
// vertex is an endpoint of that path. Once v and all its other neighbors are
// colored, v can color such a component vertex by vertex; any other shape
// stalls the coloring.
bool is_pendant_path(const Graph& g, int v, const VertexSet& comp);

struct StructuralReport {
    VertexSet r1;          // removal leaves >= 3 components
    VertexSet r2;          // removal leaves exactly 2 components, neither a pendant path
    VertexSet r3_reduced;  // vertices adjacent to a leaf in the reduced graph (original ids)
    VertexSet leaves;
    VertexSet articulation_points;
    int leaf_number = 0;
    int curly_l = 0;  // sum over r3_reduced of (reduced leaf count - 1)
    std::vector<VertexSet> blocks;
    Graph reduced;  // leaf reduction of g; g itself when g is a path
    std::vector<int> reduced_to_original;
};

// Requires a connected graph. r1/r2 are computed on g, r3/curly_l on the
// leaf-reduced graph.
StructuralReport compute_r_sets(const Graph& g);

}  // namespace cforce
