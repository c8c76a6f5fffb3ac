#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tracking/io.hpp"
#include "tracking/solve.hpp"
#include "tracking/verifier.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

tracking::Instance load_instance(const std::string& path, const std::string& param) {
  auto inst = tracking::parse_instance(slurp(path));
  if (param != "auto") {
    auto kind = tracking::parse_modulator_kind(param);
    if (!kind) throw std::runtime_error("unknown parameterization '" + param + "'");
    inst.kind = *kind;
    if (!tracking::modulator_property_holds(inst))
      throw std::runtime_error("modulator does not satisfy the '" + param +
                               "' property");
  }
  return inst;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  // Wall time goes to stderr only, keeping result files byte-reproducible.
  ~Stopwatch() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "wall time: " << ms << " ms\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for the tracking paths problem"};
  app.require_subcommand(1);

  std::string in_path, out_path = "-", param = "auto", trackers_arg, kind_arg,
              solution_path, trace_path;
  std::size_t path_cap = tracking::kDefaultPathCap;
  std::uint64_t seed = 0;
  int gen_n = 0, gen_k = 0;
  bool stats = false;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("-i", in_path)->required();
  solve->add_option("-o", out_path);
  solve->add_option("--param", param)->check(CLI::IsMember({"vc", "cvd", "dcm", "auto"}));
  solve->add_option("--path-cap", path_cap);
  solve->add_option("--seed", seed);
  solve->add_flag("--stats", stats);
  solve->add_option("--trace", trace_path);

  auto* verify = app.add_subcommand("verify", "check a tracker set against an instance");
  verify->add_option("-i", in_path)->required();
  verify->add_option("--trackers", trackers_arg)->required();
  verify->add_option("--path-cap", path_cap);

  auto* oracle = app.add_subcommand("oracle", "brute-force minimum tracking set");
  oracle->add_option("-i", in_path)->required();
  oracle->add_option("--path-cap", path_cap);

  auto* compare = app.add_subcommand("compare", "solver vs oracle size check");
  compare->add_option("-i", in_path)->required();
  compare->add_option("--param", param)->required()->check(CLI::IsMember({"vc", "cvd"}));
  compare->add_option("--path-cap", path_cap);

  auto* generate = app.add_subcommand("generate", "random instance with planted modulator");
  generate->add_option("--kind", kind_arg)->required()->check(CLI::IsMember({"vc", "cvd"}));
  generate->add_option("--n", gen_n)->required();
  generate->add_option("--k", gen_k)->required();
  generate->add_option("--seed", seed)->required();
  generate->add_option("-o", out_path);

  auto* dot = app.add_subcommand("export-dot", "graphviz rendering of an instance");
  dot->add_option("-i", in_path)->required();
  dot->add_option("--solution", solution_path);
  dot->add_option("-o", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    tracking::SolveOptions opts;
    opts.path_cap = path_cap;

    if (solve->parsed()) {
      Stopwatch timer;
      auto inst = load_instance(in_path, param);
      auto sol = tracking::solve_instance(inst, opts);
      spit(out_path, tracking::write_result(tracking::make_result_record(inst, sol, stats)));
      if (!trace_path.empty()) spit(trace_path, tracking::serialize_trace(sol.trace));
      return 0;
    }

    if (verify->parsed()) {
      auto inst = tracking::parse_instance(slurp(in_path));
      auto trackers = tracking::parse_vertex_list(trackers_arg);
      if (!trackers) throw std::runtime_error("malformed tracker list");
      auto verdict = tracking::is_tracking_set(inst.graph, *trackers, path_cap);
      switch (verdict.status) {
        case tracking::Verdict::Status::Valid:
          std::cout << "valid\n";
          return 0;
        case tracking::Verdict::Status::Invalid: {
          std::cout << "invalid\n";
          const auto& [p, q] = *verdict.witness;
          std::cout << "witness path 1:";
          for (auto v : p.vertices) std::cout << ' ' << v;
          std::cout << "\nwitness path 2:";
          for (auto v : q.vertices) std::cout << ' ' << v;
          std::cout << '\n';
          return 1;
        }
        case tracking::Verdict::Status::Unknown:
          std::cout << "unknown (path cap exceeded)\n";
          return 2;
      }
    }

    if (oracle->parsed()) {
      Stopwatch timer;
      auto inst = tracking::parse_instance(slurp(in_path));
      auto result = tracking::min_tracking_set_bruteforce(inst.graph, path_cap);
      if (result.unknown) {
        std::cout << "unknown (path cap exceeded)\n";
        return 2;
      }
      std::cout << "size = " << result.trackers.size() << "\ntrackers = "
                << tracking::format_vertex_set(result.trackers) << '\n';
      return 0;
    }

    if (compare->parsed()) {
      Stopwatch timer;
      auto inst = load_instance(in_path, param);
      auto sol = tracking::solve_instance(inst, opts);
      auto oracle_result = tracking::min_tracking_set_bruteforce(inst.graph, path_cap);
      if (oracle_result.unknown) throw std::runtime_error("oracle hit the path cap");
      auto rec = tracking::make_result_record(inst, sol, false);
      rec.fields["oracle_size"] = std::to_string(oracle_result.trackers.size());
      rec.fields["equal"] =
          sol.size() == oracle_result.trackers.size() ? "true" : "false";
      std::cout << tracking::write_result(rec);
      return sol.size() == oracle_result.trackers.size() ? 0 : 3;
    }

    if (generate->parsed()) {
      auto kind = tracking::parse_modulator_kind(kind_arg);
      auto inst = tracking::generate_instance(*kind, gen_n, gen_k, seed);
      spit(out_path, tracking::serialize_instance(inst));
      return 0;
    }

    if (dot->parsed()) {
      auto inst = tracking::parse_instance(slurp(in_path));
      std::optional<tracking::VertexSet> solution;
      if (!solution_path.empty()) {
        // Accept either a bare comma list or a result record.
        std::string text = slurp(solution_path);
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
          auto eq = line.find("trackers = ");
          if (eq != std::string::npos) {
            solution = tracking::parse_vertex_list(line.substr(eq + 11));
            break;
          }
        }
        if (!solution) solution = tracking::parse_vertex_list(text);
        if (!solution) throw std::runtime_error("cannot read solution from " + solution_path);
      }
      spit(out_path, tracking::export_dot(inst, solution ? &*solution : nullptr));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 64;
  }
  return 0;
}
