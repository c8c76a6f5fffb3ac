#include "tracking/cvd_adapter.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tracking/combinatorics.hpp"
#include "tracking/reductions.hpp"

namespace tracking {

bool validate_cvd(const Graph& g, const VertexSet& modulator) {
  for (VertexId v : modulator)
    if (!g.has_vertex(v)) return false;
  for (const auto& comp : component_structure(g, modulator))
    if (!comp.is_clique) return false;
  return true;
}

VertexSet min_cvd_set(const Graph& g) {
  VertexSet vset = g.vertices();
  std::vector<VertexId> verts(vset.begin(), vset.end());
  VertexSet best;
  bool found = false;
  for_each_subset_ascending(verts.size(), [&](const std::vector<std::size_t>& idx) {
    VertexSet s;
    for (std::size_t i : idx) s.insert(verts[i]);
    if (!validate_cvd(g, s)) return true;
    best = std::move(s);
    found = true;
    return false;
  });
  if (!found) throw std::logic_error("min_cvd_set: search exhausted");
  return best;
}

namespace {

std::size_t deg_s(const Graph& g, const VertexSet& modulator, VertexId v) {
  std::size_t n = 0;
  for (VertexId u : g.neighbors(v))
    if (modulator.count(u)) ++n;
  return n;
}

}  // namespace

ComponentInfo inspect_component(const Graph& g, const VertexSet& modulator,
                                const VertexSet& marks, const VertexSet& comp) {
  ComponentInfo info;
  info.vertices = comp;
  info.local_pairs = local_pairs(g, comp);
  for (VertexId v : comp) {
    if (deg_s(g, modulator, v) > 0) info.attachments.insert(v);
    if (!marks.count(v)) info.unmarked.insert(v);
    if (v == g.s()) info.contains_s = true;
    if (v == g.t()) info.contains_t = true;
  }
  return info;
}

std::string serialize_component_reports(const std::vector<ComponentReport>& reports) {
  std::ostringstream os;
  auto list = [&](const char* tag, const VertexSet& vs) {
    if (vs.empty()) return;
    os << ' ' << tag << '=';
    bool first = true;
    for (VertexId v : vs) {
      if (!first) os << ',';
      os << v;
      first = false;
    }
  };
  for (const auto& r : reports) {
    os << "component {";
    bool first = true;
    for (VertexId v : r.vertices) {
      if (!first) os << ',';
      os << v;
      first = false;
    }
    os << "} case=" << r.case_label;
    list("x", r.to_x);
    list("y", r.to_y);
    list("ignored", r.ignored);
    for (const auto& [v, p] : r.partner) os << " partner(" << v << ")=" << p;
    if (r.virtual_id) os << " virtual=" << *r.virtual_id;
    os << '\n';
  }
  return os.str();
}

void analyze_terminal_components(const Graph& g, const VertexSet& modulator,
                                 const VertexSet& marks, CvdAnalysis& out) {
  for (const auto& comp : component_structure(g, modulator)) {
    ComponentInfo info = inspect_component(g, modulator, marks, comp.vertices);
    if (!info.contains_s && !info.contains_t) continue;
    ComponentReport rep;
    rep.vertices = info.vertices;
    if (info.vertices.size() == 1) {
      rep.case_label = "terminal-singleton";
      out.reports.push_back(std::move(rep));
      continue;
    }
    if (info.local_pairs.empty())
      throw std::logic_error("terminal component without a local pair");
    rep.case_label = "terminal";
    // Every pair in this component involves a terminal; the non-terminal
    // member, if still unmarked, is the candidate attachment.
    for (const auto& [a, b] : info.local_pairs) {
      for (VertexId v : {a, b}) {
        if (v == g.s() || v == g.t()) continue;
        if (!info.unmarked.count(v)) continue;
        if (out.universe.universe.count(v) || out.universe.reserve.count(v)) continue;
        if (deg_s(g, modulator, v) >= 2) {
          out.universe.universe.insert(v);
          rep.to_x.insert(v);
        } else {
          out.universe.reserve.insert(v);
          rep.to_y.insert(v);
        }
      }
    }
    out.reports.push_back(std::move(rep));
  }
  if (out.universe.reserve.size() > 2)
    throw std::logic_error("reserve set exceeds two vertices");
}

void analyze_cluster_components(Graph& g, const VertexSet& modulator,
                                const VertexSet& marks, CvdAnalysis& out) {
  VertexId next_virtual = g.vertices().empty() ? 1 : *g.vertices().rbegin() + 1;
  for (const auto& comp : component_structure(g, modulator)) {
    ComponentInfo info = inspect_component(g, modulator, marks, comp.vertices);
    if (info.contains_s || info.contains_t) continue;
    ComponentReport rep;
    rep.vertices = info.vertices;

    if (info.vertices.size() == 1) {
      VertexId v = *info.vertices.begin();
      if (deg_s(g, modulator, v) < 2)
        throw std::logic_error("singleton component with fewer than two attachments");
      rep.case_label = "singleton";
      if (info.unmarked.count(v)) {
        out.universe.universe.insert(v);
        rep.to_x.insert(v);
      }
      out.reports.push_back(std::move(rep));
      continue;
    }

    if (info.local_pairs.empty())
      throw std::logic_error("participating component without a local pair");

    if (info.local_pairs.size() >= 2) {
      // Disjoint pairs leave nothing unmarked; overlapping pairs leave at
      // most the shared vertex.
      if (info.unmarked.empty()) {
        rep.case_label = "multi-pair-marked";
        out.reports.push_back(std::move(rep));
        continue;
      }
      if (info.unmarked.size() > 1)
        throw std::logic_error("multi-pair component with several unmarked vertices");
      VertexId v = *info.unmarked.begin();
      rep.case_label = "overlapping-pairs";
      if (deg_s(g, modulator, v) >= 2) {
        out.universe.universe.insert(v);
        rep.to_x.insert(v);
      } else {
        out.universe.ignored.insert(v);
        rep.ignored.insert(v);
      }
      out.reports.push_back(std::move(rep));
      continue;
    }

    // Unique local pair: rr6 has marked every interior vertex, so only the
    // two pair members may remain unmarked.
    auto [a, b] = info.local_pairs.front();
    for (VertexId v : info.unmarked)
      if (v != a && v != b)
        throw std::logic_error("unmarked interior in a unique-pair component");
    std::size_t da = deg_s(g, modulator, a), db = deg_s(g, modulator, b);
    if (info.unmarked.empty()) {
      rep.case_label = "pair-both-marked";
      out.reports.push_back(std::move(rep));
      continue;
    }
    if (info.unmarked.size() == 1) {
      // The other member was forced by the triangle rule; with it tracked,
      // the remaining one is a candidate when well-attached and otherwise
      // redundant (edge-cases lemma).
      VertexId v = *info.unmarked.begin();
      rep.case_label = "pair-one-marked";
      if (deg_s(g, modulator, v) >= 2) {
        out.universe.universe.insert(v);
        rep.to_x.insert(v);
      } else {
        out.universe.ignored.insert(v);
        rep.ignored.insert(v);
      }
      out.reports.push_back(std::move(rep));
      continue;
    }
    if (da >= 2 && db >= 2) {
      rep.case_label = "pair-both-attached";
      for (VertexId v : {a, b}) {
        out.universe.universe.insert(v);
        rep.to_x.insert(v);
      }
    } else if (da >= 2 || db >= 2) {
      VertexId strong = da >= 2 ? a : b;
      VertexId weak = da >= 2 ? b : a;
      rep.case_label = "pair-one-attached";
      out.universe.universe.insert(strong);
      rep.to_x.insert(strong);
      out.universe.partner[strong] = weak;
      rep.partner[strong] = weak;
    } else {
      // Both attachments have a single modulator neighbor: model the pair
      // with a gadget vertex adjacent to those neighbors.
      VertexId c = -1, d = -1;
      for (VertexId u : g.neighbors(a))
        if (modulator.count(u)) c = u;
      for (VertexId u : g.neighbors(b))
        if (modulator.count(u)) d = u;
      if (c < 0 || d < 0 || c == d)
        throw std::logic_error("degenerate attachment pair for virtual vertex");
      VertexId id = next_virtual++;
      g.add_vertex(id);
      g.add_edge(id, c);
      g.add_edge(id, d);
      out.universe.virtuals.push_back({id, a, b, c, d});
      out.universe.universe.insert(id);
      out.universe.ignored.insert(a);
      out.universe.ignored.insert(b);
      rep.case_label = "pair-virtual";
      rep.virtual_id = id;
      rep.ignored.insert(a);
      rep.ignored.insert(b);
    }
    out.reports.push_back(std::move(rep));
  }
}

namespace {

// Every surviving G - S vertex must land in exactly one bucket; anything
// unaccounted for means a case fell through silently.
void check_accounting(const Graph& g, const VertexSet& modulator,
                      const VertexSet& marks, const CandidateUniverse& u) {
  VertexSet partners;
  for (const auto& [v, p] : u.partner) partners.insert(p);
  for (VertexId v : g.vertices()) {
    if (modulator.count(v) || v == g.s() || v == g.t()) continue;
    int buckets = 0;
    buckets += marks.count(v) != 0;
    buckets += u.ignored.count(v) != 0;
    buckets += u.universe.count(v) != 0;
    buckets += partners.count(v) != 0;
    buckets += u.reserve.count(v) != 0;
    if (buckets != 1)
      throw std::logic_error("vertex " + std::to_string(v) + " lands in " +
                             std::to_string(buckets) + " analysis buckets");
  }
}

}  // namespace

Solution solve_cvd(const Instance& inst, const SolveOptions& opts) {
  if (!validate_cvd(inst.graph, inst.modulator))
    throw std::invalid_argument("modulator is not a cluster vertex deletion set");
  const Graph original = inst.graph;
  auto reduced = reduce_fixpoint(inst, Variant::Cvd);
  if (reduced.solved_trivially) {
    Solution sol = trivial_solution(original, opts);
    sol.trace = reduced.trace;
    return sol;
  }

  RuleTrace trace = reduced.trace;
  Instance working = reduced.instance;
  auto base = run_base_marking(working, Variant::Cvd, trace);
  CvdAnalysis analysis;
  analyze_terminal_components(working.graph, working.modulator, base.marks, analysis);
  analyze_cluster_components(working.graph, working.modulator, base.marks, analysis);
  check_accounting(working.graph, working.modulator, base.marks, analysis.universe);
  Solution sol = solve_dcm_core(working, original, base.marks, base.forced_in_s,
                                analysis.universe, opts);
  sol.trace = trace;
  return sol;
}

}  // namespace tracking
