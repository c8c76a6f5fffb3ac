#include "tracking/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

#include "tracking/cvd_adapter.hpp"
#include "tracking/vc_adapter.hpp"

namespace tracking {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

int parse_id(const Token& tok, std::size_t line_no, int n) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok.text, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, tok.column, "expected an integer, got '" + tok.text + "'");
  }
  if (pos != tok.text.size())
    throw ParseError(line_no, tok.column, "trailing characters in '" + tok.text + "'");
  if (value < 1 || value > n)
    throw ParseError(line_no, tok.column,
                     "vertex id " + tok.text + " outside 1.." + std::to_string(n));
  return value;
}

void explain_property_violation(const Instance& inst, std::size_t line_no,
                                std::size_t column) {
  const Graph& g = inst.graph;
  if (inst.kind == ModulatorKind::Vc) {
    for (const auto& [u, v] : g.edges())
      if (!inst.modulator.count(u) && !inst.modulator.count(v))
        throw ParseError(line_no, column,
                         "modulator is not a vertex cover: edge (" +
                             std::to_string(u) + "," + std::to_string(v) +
                             ") is uncovered");
  } else {
    for (const auto& comp : component_structure(g, inst.modulator)) {
      if (comp.is_clique) continue;
      std::string ids;
      for (VertexId v : comp.vertices) ids += (ids.empty() ? "" : ",") + std::to_string(v);
      throw ParseError(line_no, column,
                       "component {" + ids + "} of G-S is not a clique");
    }
    if (inst.kind == ModulatorKind::Dcm)
      for (VertexId v : g.vertices()) {
        if (inst.modulator.count(v)) continue;
        std::size_t d = 0;
        for (VertexId u : g.neighbors(v))
          if (inst.modulator.count(u)) ++d;
        if (d < 2)
          throw ParseError(line_no, column,
                           "vertex " + std::to_string(v) +
                               " has fewer than two modulator neighbors");
      }
  }
  throw ParseError(line_no, column, "modulator property violation");
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  int n = -1, m = -1;
  std::optional<VertexId> s, t;
  std::optional<ModulatorKind> kind;
  std::size_t kind_line = 0, kind_col = 0;
  std::vector<Edge> edges;
  VertexSet modulator;

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& tag = toks[0].text;
    if (tag == "#" || tag[0] == '#' || tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError(line_no, toks[0].column, "duplicate header");
      if (toks.size() != 4 || toks[1].text != "tp")
        throw ParseError(line_no, toks[0].column, "expected 'p tp <n> <m>'");
      try {
        n = std::stoi(toks[2].text);
        m = std::stoi(toks[3].text);
      } catch (const std::exception&) {
        throw ParseError(line_no, toks[2].column, "malformed vertex/edge counts");
      }
      if (n < 2 || m < 0)
        throw ParseError(line_no, toks[2].column, "need n >= 2 and m >= 0");
      continue;
    }
    if (n < 0) throw ParseError(line_no, toks[0].column, "header must come first");
    if (tag == "s" || tag == "t") {
      if (toks.size() != 2)
        throw ParseError(line_no, toks[0].column, "expected '" + tag + " <id>'");
      auto& slot = (tag == "s") ? s : t;
      if (slot) throw ParseError(line_no, toks[0].column, "duplicate " + tag + " line");
      slot = parse_id(toks[1], line_no, n);
    } else if (tag == "e") {
      if (toks.size() != 3)
        throw ParseError(line_no, toks[0].column, "expected 'e <u> <v>'");
      int u = parse_id(toks[1], line_no, n);
      int v = parse_id(toks[2], line_no, n);
      if (u == v) throw ParseError(line_no, toks[1].column, "self-loop on " + toks[1].text);
      Edge e{std::min(u, v), std::max(u, v)};
      if (std::find(edges.begin(), edges.end(), e) != edges.end())
        throw ParseError(line_no, toks[1].column, "duplicate edge");
      edges.push_back(e);
    } else if (tag == "k") {
      if (toks.size() != 2)
        throw ParseError(line_no, toks[0].column, "expected 'k <vc|cvd|dcm>'");
      if (kind) throw ParseError(line_no, toks[0].column, "duplicate kind line");
      kind = parse_modulator_kind(toks[1].text);
      if (!kind)
        throw ParseError(line_no, toks[1].column, "unknown kind '" + toks[1].text + "'");
      kind_line = line_no;
      kind_col = toks[0].column;
    } else if (tag == "m") {
      for (std::size_t i = 1; i < toks.size(); ++i)
        modulator.insert(parse_id(toks[i], line_no, n));
    } else {
      throw ParseError(line_no, toks[0].column, "unknown line tag '" + tag + "'");
    }
  }

  if (n < 0) throw ParseError(line_no + 1, 1, "missing header");
  if (!s) throw ParseError(line_no + 1, 1, "missing s line");
  if (!t) throw ParseError(line_no + 1, 1, "missing t line");
  if (!kind) throw ParseError(line_no + 1, 1, "missing kind line");
  if (*s == *t) throw ParseError(line_no + 1, 1, "s and t coincide");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(line_no + 1, 1,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));

  Instance inst;
  inst.graph = Graph::build(edges, *s, *t);
  for (int v = 1; v <= n; ++v)
    if (!inst.graph.has_vertex(v)) inst.graph.add_vertex(v);
  inst.modulator = modulator;
  inst.kind = *kind;
  if (!modulator_property_holds(inst))
    explain_property_violation(inst, kind_line, kind_col);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const Graph& g = inst.graph;
  std::ostringstream os;
  os << "p tp " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  os << "s " << g.s() << '\n';
  os << "t " << g.t() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  os << "k " << to_string(inst.kind) << '\n';
  os << "m";
  for (VertexId v : inst.modulator) os << ' ' << v;
  os << '\n';
  return os.str();
}

Instance generate_instance(ModulatorKind kind, int n, int k, std::uint64_t seed) {
  if (kind == ModulatorKind::Dcm)
    throw std::invalid_argument("generator supports vc and cvd kinds only");
  int min_k = (kind == ModulatorKind::Vc) ? 2 : 1;
  if (k < min_k || n < k + 2)
    throw std::invalid_argument("infeasible parameters: need k >= " +
                                std::to_string(min_k) + " and n >= k + 2");

  std::mt19937_64 rng(seed);
  auto rnd = [&](int bound) { return static_cast<int>(rng() % bound); };
  auto coin = [&] { return rng() % 2 == 0; };

  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    Edge e{std::min(u, v), std::max(u, v)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  };

  VertexSet modulator;
  for (int v = 1; v <= k; ++v) modulator.insert(v);
  VertexId s = k + 1, t = k + 2;

  if (kind == ModulatorKind::Vc) {
    for (int u = 1; u <= k; ++u)
      for (int v = u + 1; v <= k; ++v)
        if (coin()) add(u, v);
    for (int v = k + 1; v <= n; ++v) {
      int want = 2 + (k > 2 ? rnd(k - 1) : 0);
      VertexSet chosen;
      while (static_cast<int>(chosen.size()) < std::min(want, k))
        chosen.insert(1 + rnd(k));
      for (VertexId u : chosen) add(u, v);
    }
  } else {
    // Partition the non-modulator vertices into cliques of size <= 4.
    int v = k + 1;
    while (v <= n) {
      int size = std::min(1 + rnd(4), n - v + 1);
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) add(v + i, v + j);
      for (int i = 0; i < size; ++i) {
        bool attached = false;
        for (int u = 1; u <= k; ++u)
          if (coin()) {
            add(u, v + i);
            attached = true;
          }
        if (!attached) add(1 + rnd(k), v + i);
      }
      v += size;
    }
    for (int u = 1; u <= k; ++u)
      for (int w = u + 1; w <= k; ++w)
        if (coin()) add(u, w);
  }

  Instance inst;
  inst.graph = Graph::build(edges, s, t);
  for (int v = 1; v <= n; ++v)
    if (!inst.graph.has_vertex(v)) inst.graph.add_vertex(v);
  inst.modulator = modulator;
  inst.kind = kind;
  if (!modulator_property_holds(inst))
    throw std::logic_error("generated instance fails its own validator");
  return inst;
}

std::string format_vertex_set(const VertexSet& vs) {
  std::string out;
  for (VertexId v : vs) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

std::optional<VertexSet> parse_vertex_list(const std::string& text) {
  VertexSet out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    try {
      std::size_t pos = 0;
      int v = std::stoi(token, &pos);
      if (pos != token.size()) return std::nullopt;
      out.insert(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return out;
}

std::string trace_digest(const RuleTrace& trace) {
  std::string text = serialize_trace(trace);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultRecord make_result_record(const Instance& inst, const Solution& sol,
                                bool include_stats) {
  ResultRecord rec;
  rec.fields["kind"] = to_string(inst.kind);
  rec.fields["size"] = std::to_string(sol.size());
  rec.fields["trackers"] = format_vertex_set(sol.trackers);
  rec.fields["verified"] = sol.verdict.valid() ? "true" : "false";
  rec.fields["guesses_tried"] = std::to_string(sol.stats.guesses_tried);
  rec.fields["fallback_used"] = sol.stats.fallback_used ? "true" : "false";
  rec.fields["trace_digest"] = trace_digest(sol.trace);
  if (include_stats) {
    rec.fields["bound_violations"] = std::to_string(sol.stats.bound_violations);
    rec.fields["max_candidates"] = std::to_string(sol.stats.max_candidates);
    rec.fields["max_v3_prime"] = std::to_string(sol.stats.max_v3_prime);
    rec.fields["verifier_unknown"] = sol.stats.verifier_unknown ? "true" : "false";
    std::string rej;
    for (const auto& [rule, count] : sol.stats.rejections)
      rej += (rej.empty() ? "" : ",") + rule + ":" + std::to_string(count);
    rec.fields["rejections"] = rej;
  }
  return rec;
}

std::string write_result(const ResultRecord& record) {
  std::ostringstream os;
  for (const auto& [key, value] : record.fields) os << key << " = " << value << '\n';
  return os.str();
}

std::string export_dot(const Instance& inst, const VertexSet* solution) {
  const Graph& g = inst.graph;
  std::ostringstream os;
  os << "graph tracking {\n";
  for (VertexId v : g.vertices()) {
    os << "  " << v << " [shape=";
    if (v == g.s() || v == g.t())
      os << "doublecircle";
    else if (inst.modulator.count(v))
      os << "box";
    else
      os << "circle";
    if (solution && solution->count(v)) os << ", style=filled, fillcolor=gray";
    os << "];\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tracking
