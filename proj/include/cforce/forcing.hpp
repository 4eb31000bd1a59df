#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "cforce/graph.hpp"

namespace cforce {

// Record of one closure run. Each step (forcer, forced) fires while the
// forcer is colored with the forced vertex as its only uncolored neighbor;
// replaying the steps in order from `initial` reproduces `final`. A vertex
// forces at most once: after its force it has no uncolored neighbors left.
struct ForcingTrace {
    VertexSet initial;
    std::vector<std::pair<int, int>> steps;
    VertexSet final;
};

// Applies forces until no colored vertex has exactly one uncolored neighbor.
// `final` is the unique closure of `start`; the recorded order applies all
// forces available at the start of a round in ascending forcer id, then
// recomputes.
ForcingTrace forcing_closure(const Graph& g, const VertexSet& start);

// Same closure, but applies one uniformly random available force at a time.
// `final` always matches forcing_closure's.
ForcingTrace forcing_closure_random_order(const Graph& g, const VertexSet& start, std::uint64_t seed);

// Closure without trace bookkeeping.
VertexSet closure_final(const Graph& g, const VertexSet& start);

bool is_forcing_set(const Graph& g, const VertexSet& s);

// True for empty and singleton sets.
bool induces_connected_subgraph(const Graph& g, const VertexSet& s);

// Requires a nonempty s.
bool is_connected_forcing_set(const Graph& g, const VertexSet& s);

// Partitions trace.final into the chains of successive forces: each chain
// starts at a vertex of trace.initial, and every vertex of trace.final lies
// in exactly one chain. Chains are listed by ascending start vertex. The
// trace is re-validated against g first.
std::vector<std::vector<int>> forcing_chains(const ForcingTrace& trace, const Graph& g);

// One line per force: "step_index forcer forced".
void write_trace(std::ostream& out, const ForcingTrace& trace);

}  // namespace cforce
