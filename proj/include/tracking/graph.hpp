#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tracking {

using VertexId = int;
using VertexSet = std::set<VertexId>;
using Edge = std::pair<VertexId, VertexId>;  // stored normalized: first < second

/// Simple undirected path, a sequence of pairwise distinct vertices.
struct Path {
  std::vector<VertexId> vertices;

  bool operator==(const Path&) const = default;
  bool operator<(const Path& o) const { return vertices < o.vertices; }
};

/// Undirected simple graph with designated terminals s and t.
///
/// Adjacency is kept as sorted sets, so iteration order (and therefore every
/// "first"/"smallest" tie-break downstream) is deterministic. The solver
/// treats graphs as immutable values; the mutators exist for the reduction
/// engine, which works on its own copy.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges collapse, self-loops
  /// and s == t are rejected. s and t are added even if no edge touches them.
  static Graph build(const std::vector<Edge>& edges, VertexId s, VertexId t);

  VertexId s() const { return s_; }
  VertexId t() const { return t_; }
  void set_terminals(VertexId s, VertexId t);

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const;
  const VertexSet& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  const std::map<VertexId, VertexSet>& adjacency() const { return adj_; }
  VertexSet vertices() const;
  std::vector<Edge> edges() const;  // normalized, lexicographically sorted
  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const;

  void add_vertex(VertexId v);
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);  // also drops incident edges; never s or t

  /// Copy of this graph restricted to `keep`.
  Graph induced(const VertexSet& keep) const;

  bool operator==(const Graph&) const = default;

 private:
  std::map<VertexId, VertexSet> adj_;
  VertexId s_ = -1;
  VertexId t_ = -1;
};

enum class ModulatorKind { Dcm, Vc, Cvd };

std::string to_string(ModulatorKind kind);
std::optional<ModulatorKind> parse_modulator_kind(const std::string& text);

/// Graph plus structural modulator S and its declared kind. k is |S|.
struct Instance {
  Graph graph;
  VertexSet modulator;
  ModulatorKind kind = ModulatorKind::Dcm;

  std::size_t k() const { return modulator.size(); }

  bool operator==(const Instance&) const = default;
};

struct Component {
  VertexSet vertices;
  bool is_clique = false;
  bool is_tree = false;
};

/// Connected components of G - exclude, with per-component clique and tree
/// flags. Components come out sorted by smallest vertex id.
std::vector<Component> component_structure(const Graph& g, const VertexSet& exclude);

/// True when every component of G - exclude is acyclic.
bool is_forest(const Graph& g, const VertexSet& exclude);

struct PathEnumeration {
  std::vector<Path> paths;   // lexicographic by vertex sequence
  bool cap_exceeded = false; // set as soon as more than `cap` paths exist
};

/// All simple u-v paths, lexicographically ordered. Stops with cap_exceeded
/// once the count would pass `cap`; the partial list is then meaningless.
PathEnumeration enumerate_simple_paths(const Graph& g, VertexId u, VertexId v,
                                       std::size_t cap);

/// Lexicographically smallest simple u-v path avoiding `avoid`, if any.
/// u == v yields the single-vertex path.
std::optional<Path> find_path(const Graph& g, VertexId u, VertexId v,
                              const VertexSet& avoid);

/// Two fully vertex-disjoint paths (s1 -> t1, s2 -> t2), neither touching
/// `forbidden`. Endpoint identities s1 == t1 / s2 == t2 give single-vertex
/// paths. Requires s1 != s2, t1 != t2 and endpoints outside `forbidden`.
std::optional<std::pair<Path, Path>> two_disjoint_paths(
    const Graph& g, VertexId s1, VertexId t1, VertexId s2, VertexId t2,
    const VertexSet& forbidden);

/// Local source/destination check for the subgraph spanned by `sub`:
/// do vertex-disjoint paths s -> a and b -> t exist that touch `sub` only at
/// a respectively b? Witnesses may not use edges internal to `sub`
/// (including (a,b) itself). a = s or b = t degenerate to single-vertex
/// witnesses.
bool is_local_st_pair(const Graph& g, const VertexSet& sub, VertexId a, VertexId b);

/// is_local_st_pair in either orientation.
bool is_local_pair_either(const Graph& g, const VertexSet& sub, VertexId a, VertexId b);

/// All unordered local pairs of the subgraph induced by `sub`.
std::vector<std::pair<VertexId, VertexId>> local_pairs(const Graph& g,
                                                       const VertexSet& sub);

/// Vertex participation: v lies on some simple s-t path.
bool participates(const Graph& g, VertexId v);

/// Edge participation: (u,v) lies on some simple s-t path.
bool participates_edge(const Graph& g, VertexId u, VertexId v);

}  // namespace tracking
