#include "tracking/reductions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tracking/cvd_adapter.hpp"
#include "tracking/dcm_solver.hpp"
#include "tracking/vc_adapter.hpp"

namespace tracking {

Variant variant_for(ModulatorKind kind) {
  switch (kind) {
    case ModulatorKind::Vc: return Variant::Vc;
    case ModulatorKind::Cvd: return Variant::Cvd;
    case ModulatorKind::Dcm: return Variant::Plain;
  }
  return Variant::Plain;
}

bool modulator_property_holds(const Instance& inst) {
  switch (inst.kind) {
    case ModulatorKind::Vc: return validate_vertex_cover(inst.graph, inst.modulator);
    case ModulatorKind::Cvd: return validate_cvd(inst.graph, inst.modulator);
    case ModulatorKind::Dcm: return check_dcm(inst.graph, inst.modulator);
  }
  return false;
}

namespace {

const char* rule_name(RuleId id) {
  switch (id) {
    case RuleId::Rr1Vertex: return "rr1-v";
    case RuleId::Rr1Edge: return "rr1-e";
    case RuleId::Rr2Trivial: return "rr2-trivial";
    case RuleId::Rr2Promote: return "rr2";
    case RuleId::Rr3Contract: return "rr3";
  }
  return "?";
}

void erase_from_modulator(Instance& inst, VertexId v, TraceStep& step) {
  if (inst.modulator.erase(v)) step.modulator_removed.push_back(v);
}

struct Rr3Candidate {
  VertexId v, u, w;  // delete v, connect u - w
};

// Variant-aware RR3 applicability. Both v (deleted) and its degree-2 partner
// u must be non-terminal, and the contraction may not create a parallel
// edge. The Cvd variant deletes only from G - S when the pair straddles the
// modulator; the Plain variant refuses applications that would break the
// declared modulator property.
std::optional<Rr3Candidate> find_rr3_candidate(const Instance& inst, Variant variant) {
  const Graph& g = inst.graph;
  for (const auto& [v, nbrs] : g.adjacency()) {
    if (v == g.s() || v == g.t() || nbrs.size() != 2) continue;
    for (VertexId u : nbrs) {
      if (u == g.s() || u == g.t() || g.degree(u) != 2) continue;
      VertexId w = (*nbrs.begin() == u) ? *nbrs.rbegin() : *nbrs.begin();
      if (g.has_edge(u, w)) continue;  // parallel-edge guard
      bool v_in_s = inst.modulator.count(v) != 0;
      bool u_in_s = inst.modulator.count(u) != 0;
      if (variant == Variant::Cvd && v_in_s && !u_in_s) continue;
      if (variant == Variant::Plain && v_in_s) {
        Instance probe = inst;
        probe.graph.remove_vertex(v);
        probe.graph.add_edge(u, w);
        probe.modulator.erase(v);
        if (!modulator_property_holds(probe)) continue;
      }
      return Rr3Candidate{v, u, w};
    }
  }
  return std::nullopt;
}

}  // namespace

RuleDelta rr1_prune(Instance& inst, RuleTrace& trace) {
  Graph& g = inst.graph;
  RuleDelta delta;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : g.vertices()) {
      if (v == g.s() || v == g.t()) continue;
      if (!participates(g, v)) {
        TraceStep step{RuleId::Rr1Vertex, {v}, {}, {}};
        erase_from_modulator(inst, v, step);
        g.remove_vertex(v);
        trace.steps.push_back(std::move(step));
        changed = delta.changed = true;
        break;
      }
    }
    if (changed) continue;
    for (const auto& [u, v] : g.edges()) {
      if (!participates_edge(g, u, v)) {
        g.remove_edge(u, v);
        trace.steps.push_back({RuleId::Rr1Edge, {u, v}, {}, {}});
        changed = delta.changed = true;
        break;
      }
    }
  }
  return delta;
}

RuleDelta rr2_terminal(Instance& inst, RuleTrace& trace) {
  Graph& g = inst.graph;
  RuleDelta delta;
  while (true) {
    if (g.num_vertices() == 2) {
      trace.steps.push_back({RuleId::Rr2Trivial, {}, {}, {}});
      delta.changed = delta.trivially_solved = true;
      return delta;
    }
    VertexId old_terminal = -1, keep = -1;
    if (g.degree(g.s()) == 1 && *g.neighbors(g.s()).begin() != g.t()) {
      old_terminal = g.s();
      keep = g.t();
    } else if (g.degree(g.t()) == 1 && *g.neighbors(g.t()).begin() != g.s()) {
      old_terminal = g.t();
      keep = g.s();
    } else {
      return delta;
    }
    VertexId promoted = *g.neighbors(old_terminal).begin();
    TraceStep step{RuleId::Rr2Promote, {old_terminal, promoted}, {}, {}};
    erase_from_modulator(inst, old_terminal, step);
    if (old_terminal == g.s())
      g.set_terminals(promoted, keep);
    else
      g.set_terminals(keep, promoted);
    g.remove_vertex(old_terminal);
    trace.steps.push_back(std::move(step));
    delta.changed = true;
  }
}

RuleDelta rr3_contract(Instance& inst, RuleTrace& trace, Variant variant) {
  RuleDelta delta;
  while (auto cand = find_rr3_candidate(inst, variant)) {
    auto [v, u, w] = *cand;
    TraceStep step{RuleId::Rr3Contract, {v, u, w}, {}, {}};
    erase_from_modulator(inst, v, step);
    inst.graph.remove_vertex(v);
    inst.graph.add_edge(u, w);
    if (variant == Variant::Vc && !inst.modulator.count(u) && !inst.modulator.count(w)) {
      VertexId repair = std::min(u, w);
      inst.modulator.insert(repair);
      step.modulator_added.push_back(repair);
    }
    trace.steps.push_back(std::move(step));
    delta.changed = true;
  }
  return delta;
}

ReducedInstance reduce_fixpoint(const Instance& input, Variant variant) {
  ReducedInstance out{input, {}, false};
  Instance& inst = out.instance;
  while (true) {
    bool changed = rr1_prune(inst, out.trace).changed;
    RuleDelta r2 = rr2_terminal(inst, out.trace);
    if (r2.trivially_solved) {
      out.solved_trivially = true;
      return out;
    }
    changed |= r2.changed;
    changed |= rr3_contract(inst, out.trace, variant).changed;
    if (!changed) break;
  }
  if (!modulator_property_holds(inst))
    throw std::runtime_error("modulator property violated after reduction (kind " +
                             to_string(inst.kind) + ")");
  if (auto msg = audit_reduced(inst); !msg.empty())
    throw std::logic_error("reduced-instance invariant violated: " + msg);
  return out;
}

std::string audit_reduced(const Instance& inst) {
  const Graph& g = inst.graph;
  for (const auto& [v, nbrs] : g.adjacency())
    if (nbrs.size() <= 1)
      return "vertex " + std::to_string(v) + " has degree <= 1";
  for (VertexId v : g.vertices())
    if (!participates(g, v))
      return "vertex " + std::to_string(v) + " participates in no s-t path";
  for (const auto& [u, v] : g.edges())
    if (!participates_edge(g, u, v))
      return "edge (" + std::to_string(u) + "," + std::to_string(v) +
             ") participates in no s-t path";
  for (Variant variant : {Variant::Plain, Variant::Vc, Variant::Cvd}) {
    if (variant != variant_for(inst.kind)) continue;
    if (auto cand = find_rr3_candidate(inst, variant))
      return "contractible adjacent degree-2 pair (" + std::to_string(cand->u) +
             "," + std::to_string(cand->v) + ")";
  }
  return {};
}

std::string serialize_trace(const RuleTrace& trace) {
  std::ostringstream os;
  for (const auto& step : trace.steps) {
    os << rule_name(step.rule);
    for (VertexId v : step.vertices) os << ' ' << v;
    for (VertexId v : step.modulator_removed) os << " m-" << v;
    for (VertexId v : step.modulator_added) os << " m+" << v;
    os << '\n';
  }
  return os.str();
}

Instance replay_trace(const Instance& original, const RuleTrace& trace) {
  Instance inst = original;
  for (const auto& step : trace.steps) {
    switch (step.rule) {
      case RuleId::Rr1Vertex:
        inst.graph.remove_vertex(step.vertices.at(0));
        break;
      case RuleId::Rr1Edge:
        if (!inst.graph.has_edge(step.vertices.at(0), step.vertices.at(1)))
          throw std::logic_error("replay: missing edge for rr1-e");
        inst.graph.remove_edge(step.vertices.at(0), step.vertices.at(1));
        break;
      case RuleId::Rr2Trivial:
        break;
      case RuleId::Rr2Promote: {
        VertexId old_terminal = step.vertices.at(0);
        VertexId promoted = step.vertices.at(1);
        if (old_terminal == inst.graph.s())
          inst.graph.set_terminals(promoted, inst.graph.t());
        else if (old_terminal == inst.graph.t())
          inst.graph.set_terminals(inst.graph.s(), promoted);
        else
          throw std::logic_error("replay: rr2 vertex is not a terminal");
        inst.graph.remove_vertex(old_terminal);
        break;
      }
      case RuleId::Rr3Contract:
        inst.graph.remove_vertex(step.vertices.at(0));
        inst.graph.add_edge(step.vertices.at(1), step.vertices.at(2));
        break;
    }
    for (VertexId v : step.modulator_removed)
      if (!inst.modulator.erase(v))
        throw std::logic_error("replay: modulator delta does not apply");
    for (VertexId v : step.modulator_added) inst.modulator.insert(v);
  }
  return inst;
}

}  // namespace tracking
