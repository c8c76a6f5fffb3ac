#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "tracking/dcm_solver.hpp"
#include "tracking/graph.hpp"
#include "tracking/reductions.hpp"

namespace tracking {

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

/// Line-oriented instance format ('#' and 'c' start comments):
///   p tp <n> <m>
///   s <id>
///   t <id>
///   e <u> <v>          (one per edge)
///   k <vc|cvd|dcm>
///   m [<id> ...]       (repeatable; union of all lines)
/// Vertex ids are 1..n. The declared modulator property is validated.
Instance parse_instance(const std::string& text);

/// Canonical text form; parse(serialize(x)) == x.
std::string serialize_instance(const Instance& inst);

/// Seed-deterministic random instance with a planted modulator. Throws
/// std::invalid_argument on infeasible (n, k).
Instance generate_instance(ModulatorKind kind, int n, int k, std::uint64_t seed);

/// Flat key/value record; write_result emits "key = value" lines in key
/// order, so identical records serialize byte-identically.
struct ResultRecord {
  std::map<std::string, std::string> fields;
};

ResultRecord make_result_record(const Instance& inst, const Solution& sol,
                                bool include_stats);
std::string write_result(const ResultRecord& record);

/// FNV-1a digest of the serialized rule trace, as 16 hex digits.
std::string trace_digest(const RuleTrace& trace);

std::string format_vertex_set(const VertexSet& vs);
std::optional<VertexSet> parse_vertex_list(const std::string& text);

/// Graphviz export. Terminals are double circles, modulator vertices boxes,
/// trackers filled.
std::string export_dot(const Instance& inst, const VertexSet* solution = nullptr);

}  // namespace tracking
