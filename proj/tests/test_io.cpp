#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>

#include "tracking/cvd_adapter.hpp"
#include "tracking/io.hpp"
#include "tracking/solve.hpp"
#include "tracking/vc_adapter.hpp"

using namespace tracking;

namespace {

const std::string kC4File =
    "p tp 4 4\n"
    "s 1\n"
    "t 3\n"
    "e 1 2\n"
    "e 2 3\n"
    "e 3 4\n"
    "e 4 1\n"
    "k vc\n"
    "m 2 4\n";

}  // namespace

TEST_CASE("parsing a canonical file yields the expected instance") {
  Instance inst = parse_instance(kC4File);
  CHECK(inst.graph.s() == 1);
  CHECK(inst.graph.t() == 3);
  CHECK(inst.graph.num_vertices() == 4);
  CHECK(inst.graph.num_edges() == 4);
  CHECK(inst.modulator == VertexSet{2, 4});
  CHECK(inst.kind == ModulatorKind::Vc);
}

TEST_CASE("comments and blank lines are ignored") {
  Instance inst = parse_instance("# header comment\nc another\n\n" + kC4File);
  CHECK(inst.graph.num_edges() == 4);
}

TEST_CASE("parse errors carry line positions") {
  CHECK_THROWS_AS(parse_instance("p tp 2 1\ns 1\nt 2\ne 1 1\nk vc\nm 1\n"),
                  ParseError);
  try {
    parse_instance("p tp 2 1\ns 1\nt 2\ne 1 1\nk vc\nm 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }

  // Duplicate source line.
  CHECK_THROWS_AS(parse_instance("p tp 2 1\ns 1\ns 2\nt 2\ne 1 2\nk vc\nm 1\n"),
                  ParseError);
  // Unknown tag.
  CHECK_THROWS_AS(parse_instance("p tp 2 1\nq 1\ns 1\nt 2\ne 1 2\nk vc\nm 1\n"),
                  ParseError);
  // Vertex id out of the declared range.
  CHECK_THROWS_AS(parse_instance("p tp 2 1\ns 1\nt 2\ne 1 7\nk vc\nm 1\n"),
                  ParseError);
}

TEST_CASE("modulator property violations are reported at parse time") {
  // Edge (1,3) of the triangle is uncovered by m 2.
  std::string bad =
      "p tp 3 3\ns 1\nt 3\ne 1 2\ne 2 3\ne 1 3\nk vc\nm 2\n";
  CHECK_THROWS_AS(parse_instance(bad), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  Instance inst = parse_instance(kC4File);
  CHECK(parse_instance(serialize_instance(inst)) == inst);

  Instance gen = generate_instance(ModulatorKind::Cvd, 10, 3, 99);
  CHECK(parse_instance(serialize_instance(gen)) == gen);
}

TEST_CASE("generators are deterministic and produce valid modulators") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Instance vc = generate_instance(ModulatorKind::Vc, 9, 3, seed);
    CHECK(validate_vertex_cover(vc.graph, vc.modulator));
    CHECK(vc == generate_instance(ModulatorKind::Vc, 9, 3, seed));

    Instance cvd = generate_instance(ModulatorKind::Cvd, 10, 3, seed);
    CHECK(validate_cvd(cvd.graph, cvd.modulator));
    CHECK(cvd == generate_instance(ModulatorKind::Cvd, 10, 3, seed));
  }
}

TEST_CASE("infeasible generator parameters are rejected") {
  CHECK_THROWS_AS(generate_instance(ModulatorKind::Vc, 3, 2, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(ModulatorKind::Vc, 5, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("result records serialize canonically") {
  Instance inst = parse_instance(kC4File);
  auto sol = solve_instance(inst);
  auto record = make_result_record(inst, sol, /*include_stats=*/true);
  std::string text = write_result(record);
  CHECK(text == write_result(make_result_record(inst, solve_instance(inst), true)));
  CHECK(text.find("size = 1") != std::string::npos);
  CHECK(text.find("verified = true") != std::string::npos);
  CHECK(text.find("guesses_tried = ") != std::string::npos);
  CHECK(text.find("trace_digest = ") != std::string::npos);

  // Keys come out sorted.
  std::string prev;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    std::string key = line.substr(0, line.find(" = "));
    CHECK(prev <= key);
    prev = key;
  }
}

TEST_CASE("a trivially solved instance reports size zero") {
  Instance chain{Graph::build({{1, 2}, {2, 3}, {3, 4}, {4, 5}}, 1, 5),
                 {2, 4},
                 ModulatorKind::Vc};
  auto sol = solve_instance(chain);
  auto record = make_result_record(chain, sol, false);
  std::string text = write_result(record);
  CHECK(text.find("size = 0") != std::string::npos);
  CHECK(text.find("trackers = \n") != std::string::npos);
}

TEST_CASE("vertex set formatting round-trips") {
  VertexSet vs{3, 1, 9};
  CHECK(format_vertex_set(vs) == "1,3,9");
  CHECK(parse_vertex_list("1, 3, 9") == vs);
  CHECK(parse_vertex_list("") == VertexSet{});
  CHECK_FALSE(parse_vertex_list("1,,x").has_value());
}

TEST_CASE("dot export styles terminals, modulator, and trackers") {
  Instance inst = parse_instance(kC4File);
  VertexSet solution{2};
  std::string dot = export_dot(inst, &solution);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("box") != std::string::npos);
  CHECK(dot.find("filled") != std::string::npos);
  CHECK(dot.rfind("graph", 0) == 0);

  std::string plain = export_dot(inst);
  CHECK(plain.find("filled") == std::string::npos);
}

TEST_CASE("trace digests are stable") {
  Instance inst = parse_instance(kC4File);
  auto a = solve_instance(inst);
  auto b = solve_instance(inst);
  CHECK(trace_digest(a.trace) == trace_digest(b.trace));
  CHECK(trace_digest(a.trace).size() == 16);
}
