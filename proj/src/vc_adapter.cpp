#include "tracking/vc_adapter.hpp"

#include <stdexcept>
#include <vector>

#include "tracking/combinatorics.hpp"

namespace tracking {

bool validate_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (VertexId v : cover)
    if (!g.has_vertex(v)) return false;
  for (const auto& [u, v] : g.edges())
    if (!cover.count(u) && !cover.count(v)) return false;
  return true;
}

VertexSet min_vertex_cover(const Graph& g) {
  VertexSet vset = g.vertices();
  std::vector<VertexId> verts(vset.begin(), vset.end());
  auto edges = g.edges();
  VertexSet best;
  bool found = false;
  for_each_subset_ascending(verts.size(), [&](const std::vector<std::size_t>& idx) {
    VertexSet cover;
    for (std::size_t i : idx) cover.insert(verts[i]);
    for (const auto& [u, v] : edges)
      if (!cover.count(u) && !cover.count(v)) return true;
    best = std::move(cover);
    found = true;
    return false;
  });
  if (!found) throw std::logic_error("min_vertex_cover: search exhausted");
  return best;
}

Solution solve_vc(const Instance& inst, const SolveOptions& opts) {
  if (!validate_vertex_cover(inst.graph, inst.modulator))
    throw std::invalid_argument("modulator is not a vertex cover");
  const Graph original = inst.graph;
  auto reduced = reduce_fixpoint(inst, Variant::Vc);
  if (reduced.solved_trivially) {
    Solution sol = trivial_solution(original, opts);
    sol.trace = reduced.trace;
    return sol;
  }
  if (!check_dcm(reduced.instance.graph, reduced.instance.modulator))
    throw std::runtime_error("vertex cover is not a DCM after reduction");

  RuleTrace trace = reduced.trace;
  Instance working = reduced.instance;
  auto base = run_base_marking(working, Variant::Vc, trace);
  CandidateUniverse universe;
  for (VertexId v : working.graph.vertices())
    if (!working.modulator.count(v) && v != working.graph.s() && v != working.graph.t())
      universe.universe.insert(v);
  Solution sol = solve_dcm_core(working, original, base.marks, base.forced_in_s,
                                universe, opts);
  sol.trace = trace;
  return sol;
}

}  // namespace tracking
