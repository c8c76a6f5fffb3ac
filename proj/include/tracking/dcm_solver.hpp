#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tracking/graph.hpp"
#include "tracking/reductions.hpp"
#include "tracking/verifier.hpp"

namespace tracking {

/// Every vertex of V \ S has >= 2 neighbors in S, and G - S is a disjoint
/// union of cliques.
bool check_dcm(const Graph& g, const VertexSet& modulator);

/// Hypothesized intersection of the tracking set with S.
struct Guess {
  VertexSet t_prime;  // trackers inside S
  VertexSet a_set;    // S \ t_prime, excluded from trackers
};

struct BClassification {
  VertexSet v1;       // >= 2 neighbors in A
  VertexSet v2;       // >= 1 in A and >= 1 in S - A
  VertexSet v3;       // >= 2 in S - A
  VertexSet v3_only;  // V3 members with no neighbor in A
};

/// Per-guess marking record.
///
/// The case machines hit "arbitrarily mark one of ..." points; committing to
/// one choice can lose the optimum, so each such point consumes an entry of
/// `decisions` instead. A machine that runs out of decisions sets
/// `pending_choices` to the fan-out and stops, and the guess loop explores
/// every extension (choice 0 is always the smallest-id pick).
struct MarkState {
  VertexSet base_marks;   // guess-independent forced trackers
  VertexSet guess_marks;
  VertexSet candidates;   // unmarked V1/V2 plus v3_prime (plus adapter extras)
  VertexSet v3_prime;
  std::optional<std::string> rejected;
  std::vector<int> decisions;
  std::size_t decision_cursor = 0;
  std::optional<int> pending_choices;
};

/// Gadget standing in for a local pair (a, b) whose members each have a
/// single modulator neighbor (c resp. d).
struct VirtualVertex {
  VertexId id;
  VertexId a, b;
  VertexId c, d;
};

/// CVD-adapter context threaded through the guess machinery. For plain
/// DCM/VC runs the universe is all of V \ S and everything else is empty.
struct CandidateUniverse {
  VertexSet universe;                   // X: vertices fed to the case machines
  VertexSet reserve;                    // Y: always enumerated, |Y| <= 2
  std::map<VertexId, VertexId> partner; // candidate -> shadow vertex
  std::vector<VirtualVertex> virtuals;
  VertexSet ignored;                    // provably redundant vertices
};

struct GuessRecord {
  std::uint64_t mask = 0;
  std::string rejected_by;              // empty when the guess survived
  std::size_t candidate_count = 0;
  std::optional<std::size_t> best_size; // best verified size for this guess
};

struct SolveStats {
  std::size_t modulator_size = 0;  // |S| as seen by the guess loop
  std::size_t guesses_tried = 0;
  std::map<std::string, std::size_t> rejections;
  std::size_t bound_violations = 0;
  std::size_t max_candidates = 0;
  std::size_t max_v3_prime = 0;
  bool fallback_used = false;   // all guesses failed; oracle answered
  bool verifier_unknown = false;
  std::vector<GuessRecord> guesses;
};

struct Solution {
  VertexSet trackers;
  Verdict verdict;
  SolveStats stats;
  RuleTrace trace;

  std::size_t size() const { return trackers.size(); }
};

struct SolveOptions {
  std::size_t path_cap = kDefaultPathCap;
  bool collect_guess_records = true;
};

// --- per-guess rejection rules (exposed for unit tests) ---

/// A = S \ T' must induce a forest.
bool rr4_forest_ok(const Graph& g, const VertexSet& a_set);

struct ForcedTriangle {
  std::array<VertexId, 3> triangle;
  VertexId forced;  // third vertex forced as tracker; lies in S
};

/// Guess-independent triangle marking: forced vertices outside S are marked,
/// forced vertices inside S are reported for the per-guess rejection check.
VertexSet rr5_triangle_mark_global(const Graph& g, const VertexSet& modulator,
                                   std::vector<ForcedTriangle>* forced_in_s = nullptr);

/// Clique marking over the components of G - S: for every local pair of a
/// component, the rest of the component is marked. Marked interiors are kept
/// in the graph; removing them can cascade into degree-based deletions of
/// vertices the original graph still needs to distinguish its paths.
VertexSet rr6_clique_mark(const Graph& g, const VertexSet& modulator,
                          const VertexSet& already_marked);

/// Reject when some pair of T' vertices is a local pair for a cycle routed
/// through A.
bool rr7_cycle_guard_ok(const Graph& g, const VertexSet& t_prime, const VertexSet& a_set);

BClassification classify_B(const Graph& g, const VertexSet& modulator,
                           const VertexSet& a_set, const VertexSet& universe);

// Case machines; mark into state.guess_marks, may set state.rejected.
void process_V1(const Graph& g, const Guess& guess, const BClassification& cls,
                MarkState& state);
void process_V2(const Graph& g, const Guess& guess, const BClassification& cls,
                MarkState& state);
void process_V3(const Graph& g, const Guess& guess, const BClassification& cls,
                MarkState& state);

/// Base (guess-independent) marking phase: RR5 global + RR6 clique marking,
/// iterated until the mark set is stable. Returns the accumulated marks and
/// fills `forced_in_s` for the per-guess RR5 check.
struct BaseMarking {
  VertexSet marks;
  std::vector<ForcedTriangle> forced_in_s;
};
BaseMarking run_base_marking(Instance& inst, Variant variant, RuleTrace& trace);

/// Core FPT engine over a reduced instance. `working` may contain virtual
/// vertices; verification always runs against `original`. The universe
/// restricts which V \ S vertices the case machines may treat as candidates.
Solution solve_dcm_core(const Instance& working, const Graph& original,
                        const VertexSet& base_marks,
                        const std::vector<ForcedTriangle>& forced_in_s,
                        const CandidateUniverse& universe,
                        const SolveOptions& opts);

/// Full pipeline for a DCM-kind instance: reduce (plain variant), base
/// marking, guess loop. Verifies against the input graph.
Solution solve_dcm(const Instance& inst, const SolveOptions& opts = {});

/// Shared trivial-solution constructor (empty tracking set, verified).
Solution trivial_solution(const Graph& original, const SolveOptions& opts);

}  // namespace tracking
