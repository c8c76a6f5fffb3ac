#include "tracking/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracking {

namespace {

Edge norm(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

Graph Graph::build(const std::vector<Edge>& edges, VertexId s, VertexId t) {
  if (s == t) throw std::invalid_argument("terminals must differ (s == t)");
  Graph g;
  g.s_ = s;
  g.t_ = t;
  g.add_vertex(s);
  g.add_vertex(t);
  for (const auto& [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    g.add_vertex(u);
    g.add_vertex(v);
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  return g;
}

void Graph::set_terminals(VertexId s, VertexId t) {
  if (s == t) throw std::invalid_argument("terminals must differ (s == t)");
  if (!has_vertex(s) || !has_vertex(t))
    throw std::invalid_argument("terminal not present in graph");
  s_ = s;
  t_ = t;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const VertexSet& Graph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end())
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  return it->second;
}

VertexSet Graph::vertices() const {
  VertexSet out;
  for (const auto& [v, _] : adj_) out.insert(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (const auto& [u, nbrs] : adj_)
    for (VertexId v : nbrs)
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& [_, nbrs] : adj_) twice += nbrs.size();
  return twice / 2;
}

void Graph::add_vertex(VertexId v) { adj_.try_emplace(v); }

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop");
  add_vertex(u);
  add_vertex(v);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  adj_[u].erase(v);
  adj_[v].erase(u);
}

void Graph::remove_vertex(VertexId v) {
  if (v == s_ || v == t_)
    throw std::logic_error("attempt to remove a terminal vertex");
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (VertexId u : it->second) adj_[u].erase(v);
  adj_.erase(it);
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph g;
  g.s_ = s_;
  g.t_ = t_;
  for (const auto& [u, nbrs] : adj_) {
    if (!keep.count(u)) continue;
    auto& out = g.adj_[u];
    for (VertexId v : nbrs)
      if (keep.count(v)) out.insert(v);
  }
  return g;
}

std::string to_string(ModulatorKind kind) {
  switch (kind) {
    case ModulatorKind::Dcm: return "dcm";
    case ModulatorKind::Vc: return "vc";
    case ModulatorKind::Cvd: return "cvd";
  }
  return "?";
}

std::optional<ModulatorKind> parse_modulator_kind(const std::string& text) {
  if (text == "dcm") return ModulatorKind::Dcm;
  if (text == "vc") return ModulatorKind::Vc;
  if (text == "cvd") return ModulatorKind::Cvd;
  return std::nullopt;
}

std::vector<Component> component_structure(const Graph& g, const VertexSet& exclude) {
  std::vector<Component> out;
  VertexSet seen;
  for (const auto& [start, _] : g.adjacency()) {
    if (exclude.count(start) || seen.count(start)) continue;
    Component comp;
    std::vector<VertexId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.vertices.insert(v);
      for (VertexId u : g.neighbors(v)) {
        if (exclude.count(u) || seen.count(u)) continue;
        seen.insert(u);
        stack.push_back(u);
      }
    }
    std::size_t internal_edges = 0;
    bool clique = true;
    for (VertexId v : comp.vertices) {
      for (VertexId u : g.neighbors(v))
        if (u > v && comp.vertices.count(u)) ++internal_edges;
      for (VertexId u : comp.vertices)
        if (u != v && !g.has_edge(u, v)) clique = false;
    }
    comp.is_clique = clique;
    comp.is_tree = internal_edges + 1 == comp.vertices.size();
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_forest(const Graph& g, const VertexSet& exclude) {
  for (const auto& comp : component_structure(g, exclude))
    if (!comp.is_tree) return false;
  return true;
}

namespace {

bool enumerate_rec(const Graph& g, VertexId target, std::size_t cap,
                   std::vector<VertexId>& cur, VertexSet& used,
                   PathEnumeration& out) {
  VertexId tip = cur.back();
  if (tip == target) {
    if (out.paths.size() == cap) {
      out.cap_exceeded = true;
      return false;
    }
    out.paths.push_back(Path{cur});
    return true;
  }
  for (VertexId nxt : g.neighbors(tip)) {
    if (used.count(nxt)) continue;
    cur.push_back(nxt);
    used.insert(nxt);
    bool ok = enumerate_rec(g, target, cap, cur, used, out);
    used.erase(nxt);
    cur.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

PathEnumeration enumerate_simple_paths(const Graph& g, VertexId u, VertexId v,
                                       std::size_t cap) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::invalid_argument("path endpoint not in graph");
  PathEnumeration out;
  std::vector<VertexId> cur{u};
  VertexSet used{u};
  enumerate_rec(g, v, cap, cur, used, out);
  if (out.cap_exceeded) out.paths.clear();
  return out;
}

namespace {

bool find_path_rec(const Graph& g, VertexId target, std::vector<VertexId>& cur,
                   VertexSet& blocked) {
  VertexId tip = cur.back();
  if (tip == target) return true;
  for (VertexId nxt : g.neighbors(tip)) {
    if (blocked.count(nxt)) continue;
    cur.push_back(nxt);
    blocked.insert(nxt);
    if (find_path_rec(g, target, cur, blocked)) return true;
    blocked.erase(nxt);
    cur.pop_back();
  }
  return false;
}

bool reachable(const Graph& g, VertexId from, VertexId to, const VertexSet& blocked) {
  if (blocked.count(from) || blocked.count(to)) return false;
  if (from == to) return true;
  VertexSet seen{from};
  std::vector<VertexId> stack{from};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.neighbors(v)) {
      if (u == to) return true;
      if (blocked.count(u) || seen.count(u)) continue;
      seen.insert(u);
      stack.push_back(u);
    }
  }
  return false;
}

}  // namespace

std::optional<Path> find_path(const Graph& g, VertexId u, VertexId v,
                              const VertexSet& avoid) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) return std::nullopt;
  if (avoid.count(u) || avoid.count(v)) return std::nullopt;
  std::vector<VertexId> cur{u};
  VertexSet blocked = avoid;
  blocked.insert(u);
  if (find_path_rec(g, v, cur, blocked)) return Path{cur};
  return std::nullopt;
}

namespace {

// Enumerates first paths s1 -> t1 in lexicographic order; for each complete
// first path checks for a second path avoiding it. Returns the first pair
// found, which makes the result deterministic.
bool disjoint_rec(const Graph& g, VertexId t1, VertexId s2, VertexId t2,
                  const VertexSet& forbidden, std::vector<VertexId>& cur,
                  VertexSet& used, std::optional<std::pair<Path, Path>>& out) {
  VertexId tip = cur.back();
  if (tip == t1) {
    VertexSet avoid = forbidden;
    avoid.insert(cur.begin(), cur.end());
    if (auto second = find_path(g, s2, t2, avoid)) {
      out = {Path{cur}, *second};
      return true;
    }
    return false;
  }
  for (VertexId nxt : g.neighbors(tip)) {
    if (used.count(nxt) || forbidden.count(nxt)) continue;
    cur.push_back(nxt);
    used.insert(nxt);
    bool prune = !reachable(g, nxt, t1, [&] {
      VertexSet b = forbidden;
      b.insert(cur.begin(), cur.end());
      b.erase(nxt);
      b.erase(t1);
      return b;
    }());
    bool done = !prune && disjoint_rec(g, t1, s2, t2, forbidden, cur, used, out);
    used.erase(nxt);
    cur.pop_back();
    if (done) return true;
  }
  return false;
}

}  // namespace

std::optional<std::pair<Path, Path>> two_disjoint_paths(
    const Graph& g, VertexId s1, VertexId t1, VertexId s2, VertexId t2,
    const VertexSet& forbidden) {
  for (VertexId v : {s1, t1, s2, t2}) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("disjoint-paths endpoint not in graph");
    if (forbidden.count(v))
      throw std::invalid_argument("disjoint-paths endpoint is forbidden");
  }
  if (s1 == s2 || t1 == t2)
    throw std::invalid_argument("disjoint-paths queries need distinct sources and sinks");

  if (s2 == t2) {
    // Second path degenerates to [s2]; only the first path must avoid it.
    VertexSet avoid = forbidden;
    avoid.insert(s2);
    if (auto first = find_path(g, s1, t1, avoid))
      return std::pair{*first, Path{{s2}}};
    return std::nullopt;
  }
  std::optional<std::pair<Path, Path>> out;
  std::vector<VertexId> cur{s1};
  VertexSet used{s1};
  disjoint_rec(g, t1, s2, t2, forbidden, cur, used, out);
  return out;
}

bool is_local_st_pair(const Graph& g, const VertexSet& sub, VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("local pair needs distinct vertices");
  if (!sub.count(a) || !sub.count(b))
    throw std::invalid_argument("local pair vertices must lie in the subgraph");
  VertexId s = g.s(), t = g.t();

  // A terminal in the interior of the subgraph defeats any witness pair:
  // the path reaching it would touch the subgraph somewhere besides a, b.
  for (VertexId v : {s, t})
    if (sub.count(v) && v != a && v != b) return false;

  // Working graph: drop the interior of the subgraph and all its internal
  // edges, keeping a and b with their outside attachments only.
  VertexSet keep = g.vertices();
  for (VertexId v : sub)
    if (v != a && v != b) keep.erase(v);
  Graph h = g.induced(keep);
  if (h.has_edge(a, b)) h.remove_edge(a, b);

  if (a == s && b == t) return true;
  if (a == s) return find_path(h, b, t, {s}).has_value();
  if (b == t) return find_path(h, s, a, {t}).has_value();
  if (b == s || a == t) return false;
  return two_disjoint_paths(h, s, a, b, t, {}).has_value();
}

bool is_local_pair_either(const Graph& g, const VertexSet& sub, VertexId a, VertexId b) {
  return is_local_st_pair(g, sub, a, b) || is_local_st_pair(g, sub, b, a);
}

std::vector<std::pair<VertexId, VertexId>> local_pairs(const Graph& g,
                                                       const VertexSet& sub) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (auto it = sub.begin(); it != sub.end(); ++it)
    for (auto jt = std::next(it); jt != sub.end(); ++jt)
      if (is_local_pair_either(g, sub, *it, *jt)) pairs.emplace_back(*it, *jt);
  return pairs;
}

namespace {

// Two paths v -> x and v -> y sharing only v: enumerate the first leg,
// check the second against what remains.
bool shared_origin_rec(const Graph& g, VertexId x, VertexId y,
                       std::vector<VertexId>& cur, VertexSet& used) {
  VertexId tip = cur.back();
  if (tip == x) {
    VertexSet avoid(cur.begin(), cur.end());
    avoid.erase(cur.front());
    return find_path(g, cur.front(), y, avoid).has_value();
  }
  for (VertexId nxt : g.neighbors(tip)) {
    if (used.count(nxt)) continue;
    cur.push_back(nxt);
    used.insert(nxt);
    bool done = shared_origin_rec(g, x, y, cur, used);
    used.erase(nxt);
    cur.pop_back();
    if (done) return true;
  }
  return false;
}

}  // namespace

bool participates(const Graph& g, VertexId v) {
  if (!g.has_vertex(v))
    throw std::invalid_argument("participation query for absent vertex");
  VertexId s = g.s(), t = g.t();
  if (v == s || v == t) return find_path(g, s, t, {}).has_value();
  std::vector<VertexId> cur{v};
  VertexSet used{v};
  return shared_origin_rec(g, s, t, cur, used);
}

bool participates_edge(const Graph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("participation query for absent edge");
  VertexId s = g.s(), t = g.t();
  if (norm(u, v) == norm(s, t)) return true;
  if (u == s || v == s) {
    VertexId other = (u == s) ? v : u;
    if (other == t) return true;
    return find_path(g, other, t, {s}).has_value();
  }
  if (u == t || v == t) {
    VertexId other = (u == t) ? v : u;
    return find_path(g, s, other, {t}).has_value();
  }
  return two_disjoint_paths(g, s, u, v, t, {}).has_value() ||
         two_disjoint_paths(g, s, v, u, t, {}).has_value();
}

}  // namespace tracking
