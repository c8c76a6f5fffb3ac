#pragma once

#include <string>
#include <vector>

#include "tracking/graph.hpp"

namespace tracking {

enum class Variant { Plain, Vc, Cvd };

Variant variant_for(ModulatorKind kind);

enum class RuleId {
  Rr1Vertex,   // vertices: {v}
  Rr1Edge,     // vertices: {u, v}
  Rr2Trivial,  // vertices: {}
  Rr2Promote,  // vertices: {deleted terminal, promoted neighbor}
  Rr3Contract, // vertices: {v, u, w}: v deleted, edge (u, w) added
};

struct TraceStep {
  RuleId rule;
  std::vector<VertexId> vertices;
  std::vector<VertexId> modulator_removed;
  std::vector<VertexId> modulator_added;
};

/// Auditable record of a reduction run. Replaying the steps from the
/// original instance must reproduce the reduced instance exactly.
struct RuleTrace {
  std::vector<TraceStep> steps;
};

std::string serialize_trace(const RuleTrace& trace);

/// Applies trace steps literally to `original` (no rule re-evaluation).
/// Throws if a step does not apply; used by the replay audit.
Instance replay_trace(const Instance& original, const RuleTrace& trace);

struct ReducedInstance {
  Instance instance;
  RuleTrace trace;
  bool solved_trivially = false;  // empty tracking set is optimal
};

struct RuleDelta {
  bool changed = false;
  bool trivially_solved = false;
};

// Individual passes, each run to local exhaustion. Exposed for unit tests;
// reduce_fixpoint is the real entry point.
RuleDelta rr1_prune(Instance& inst, RuleTrace& trace);
RuleDelta rr2_terminal(Instance& inst, RuleTrace& trace);
RuleDelta rr3_contract(Instance& inst, RuleTrace& trace, Variant variant);

/// Rules 1-3 looped to a fixpoint (order RR1, RR2, RR3). Validates the
/// modulator property for the variant and audits the reduced-graph
/// invariants before returning; violations throw.
ReducedInstance reduce_fixpoint(const Instance& inst, Variant variant);

/// Reduced-graph invariant audit: min degree >= 2, every vertex and edge on
/// some s-t path, no contractible adjacent degree-2 pair of non-terminals.
/// Returns a diagnostic message, or empty when all invariants hold.
std::string audit_reduced(const Instance& inst);

/// Kind-specific modulator property (VC cover / CVD cluster / DCM).
bool modulator_property_holds(const Instance& inst);

}  // namespace tracking
