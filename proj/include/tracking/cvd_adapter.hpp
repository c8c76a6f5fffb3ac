#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tracking/dcm_solver.hpp"
#include "tracking/graph.hpp"

namespace tracking {

/// Every component of G - S is a clique.
bool validate_cvd(const Graph& g, const VertexSet& modulator);

/// Minimum cluster-vertex-deletion set by ascending-size subset search
/// (smallest, then lexicographically first). Exponential in |V|; intended
/// for instance generation and the CLI.
VertexSet min_cvd_set(const Graph& g);

/// Snapshot of one clique component of G - S as the analysis sees it.
struct ComponentInfo {
  VertexSet vertices;
  VertexSet attachments;  // vertices with >= 1 modulator neighbor
  std::vector<std::pair<VertexId, VertexId>> local_pairs;
  bool contains_s = false;
  bool contains_t = false;
  VertexSet unmarked;
};

ComponentInfo inspect_component(const Graph& g, const VertexSet& modulator,
                                const VertexSet& marks, const VertexSet& comp);

/// Per-component audit trail for the CLI's explain output.
struct ComponentReport {
  std::string case_label;
  VertexSet vertices;
  VertexSet to_x;
  VertexSet to_y;
  std::map<VertexId, VertexId> partner;  // X-vertex -> shadow
  VertexSet ignored;
  std::optional<VertexId> virtual_id;
};

std::string serialize_component_reports(const std::vector<ComponentReport>& reports);

struct CvdAnalysis {
  CandidateUniverse universe;
  std::vector<ComponentReport> reports;
};

/// Components containing s or t: the unmarked local-pair attachment goes to
/// X when it has >= 2 modulator neighbors, otherwise to the reserve Y.
void analyze_terminal_components(const Graph& g, const VertexSet& modulator,
                                 const VertexSet& marks, CvdAnalysis& out);

/// Non-terminal components: the seven-way case split over local pairs and
/// attachment degrees. May add virtual vertices to `g` (gadgets standing in
/// for degree-deficient local pairs).
void analyze_cluster_components(Graph& g, const VertexSet& modulator,
                                const VertexSet& marks, CvdAnalysis& out);

/// Full pipeline for a CVD modulator: reduce with the CVD variant, base
/// marking, component analysis, then the guess loop restricted to X.
Solution solve_cvd(const Instance& inst, const SolveOptions& opts = {});

}  // namespace tracking
