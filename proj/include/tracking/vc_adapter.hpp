#pragma once

#include "tracking/dcm_solver.hpp"
#include "tracking/graph.hpp"

namespace tracking {

/// Every edge has at least one endpoint in `cover`.
bool validate_vertex_cover(const Graph& g, const VertexSet& cover);

/// Minimum vertex cover by ascending-size subset search (smallest, then
/// lexicographically first). Intended for instance generation and the CLI;
/// exponential in |V|.
VertexSet min_vertex_cover(const Graph& g);

/// Pipeline for a vertex-cover modulator: validate, reduce with the VC
/// variant (which repairs the cover when a contraction exposes an uncovered
/// edge), then run the DCM engine. After reduction a vertex cover of a
/// min-degree-2 graph is automatically a DCM.
Solution solve_vc(const Instance& inst, const SolveOptions& opts = {});

}  // namespace tracking
