// Copyright 2026 The optsort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit status: 0 success, 1 usage or input error,
// 2 when `verify` finds the solver strictly worse than a proven optimum.

#ifndef OPTSORT_CLI_HPP_
#define OPTSORT_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "optsort/driver.hpp"
#include "optsort/harness.hpp"
#include "optsort/instance.hpp"
#include "optsort/oracles.hpp"

namespace optsort {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

namespace internal {

inline OracleMethod method_from_name(const std::string& name) {
  if (name == "brute") return OracleMethod::kBruteForce;
  if (name == "bnb") return OracleMethod::kBranchAndBound;
  return OracleMethod::kAuto;
}

inline Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

inline nlohmann::json solve_json(const SolveResult& r) {
  return {{"objective", r.best_objective},
          {"order", r.best_sequence.order},
          {"iterations", r.iterations},
          {"elapsed_ms", r.elapsed_ms},
          {"safety_tripped", r.safety_tripped}};
}

inline nlohmann::json move_log_json(const SolveResult& r) {
  nlohmann::json log = nlohmann::json::array();
  for (const auto& e : r.move_log) {
    log.push_back({{"iteration", e.iteration},
                   {"kind", e.kind == MoveDirection::kForward ? "forward"
                                                              : "backward"},
                   {"i", e.i},
                   {"k", e.k},
                   {"predicted_delta", e.predicted_delta},
                   {"objective_before", e.objective_before},
                   {"objective_after", e.objective_after}});
  }
  return log;
}

inline std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    sizes.push_back(static_cast<int>(internal::parse_int(item, 0)));
  }
  return sizes;
}

}  // namespace internal

inline int cli_main(int argc, const char* const* argv,
                    std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"optsort: single-machine scheduling with release times"};
  app.require_subcommand(1);

  std::string file;
  std::string log_path;
  bool pretty = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("file", file, "Instance file")->required();
  solve->add_option("--log", log_path, "Write the accepted-move log (JSON)");
  solve->add_flag("--json", pretty, "Pretty-print the JSON result");

  std::string method = "auto";
  std::int64_t limit_nodes = 0;
  double limit_ms = 0;
  const std::vector<std::string> methods{"auto", "brute", "bnb"};
  auto* oracle = app.add_subcommand("oracle", "Solve exactly");
  oracle->add_option("file", file, "Instance file")->required();
  oracle->add_option("--method", method, "brute or bnb")
      ->check(CLI::IsMember(methods));
  oracle->add_option("--limit-nodes", limit_nodes, "Node limit (bnb)");
  oracle->add_option("--limit-ms", limit_ms, "Time limit in ms (bnb)");

  auto* verify = app.add_subcommand("verify", "Compare solver and oracle");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("--method", method, "auto, brute or bnb")
      ->check(CLI::IsMember(methods));

  int n = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", n, "Job count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::string sizes_text;
  int count = 0;
  std::string json_path;
  auto* bench = app.add_subcommand("bench", "Benchmark against the oracles");
  bench->add_option("--sizes", sizes_text, "Comma-separated sizes")->required();
  bench->add_option("--count", count, "Instances per size")->required()
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", seed, "Seed")->required();
  bench->add_option("--json", json_path, "Write the JSON report here");

  std::string out_dir;
  auto* mine = app.add_subcommand("mine", "Search for solver mismatches");
  mine->add_option("--n", n, "Job count")->required()->check(CLI::PositiveNumber);
  mine->add_option("--count", count, "Instances")->required()
      ->check(CLI::NonNegativeNumber);
  mine->add_option("--seed", seed, "Seed")->required();
  mine->add_option("--out", out_dir, "Output directory")->required();

  std::optional<Time> big_m;
  auto* lp = app.add_subcommand("export-lp", "Write the MILP model");
  lp->add_option("file", file, "Instance file")->required();
  lp->add_option("--big-m", big_m, "Big-M constant (default max r + sum p)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      const Instance inst = internal::read_instance_file(file);
      const SolveResult r = optimal_sort(inst);
      out << internal::solve_json(r).dump(pretty ? 2 : -1) << "\n";
      if (!log_path.empty()) {
        std::ofstream(log_path) << internal::move_log_json(r).dump(2) << "\n";
      }
    } else if (*oracle) {
      const Instance inst = internal::read_instance_file(file);
      BranchAndBoundOptions opts;
      opts.node_limit = limit_nodes;
      opts.time_limit_ms = limit_ms;
      const OracleMethod m =
          resolve_oracle(internal::method_from_name(method), inst.size());
      if (m == OracleMethod::kNone) {
        throw std::invalid_argument("no exact oracle for n = " +
                                    std::to_string(inst.size()) +
                                    "; pass --method bnb");
      }
      const OracleResult r = run_oracle(inst, m, opts);
      out << nlohmann::json{{"method", to_string(m)},
                            {"objective", r.objective},
                            {"order", r.sequence.order},
                            {"proved_optimal", r.proved_optimal},
                            {"nodes", r.nodes_explored},
                            {"elapsed_ms", r.elapsed_ms}}
                 .dump()
          << "\n";
    } else if (*verify) {
      const Instance inst = internal::read_instance_file(file);
      const VerifyOutcome v =
          verify_instance(inst, internal::method_from_name(method));
      out << nlohmann::json{{"method", to_string(v.method)},
                            {"solver_objective", v.solver_objective},
                            {"oracle_objective", v.oracle_objective},
                            {"proved_optimal", v.proved_optimal},
                            {"match", !v.mismatch}}
                 .dump()
          << "\n";
      return v.mismatch ? kExitMismatch : kExitOk;
    } else if (*gen) {
      const std::string text = serialize_instance(generate_instance(n, seed));
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << text;
      }
    } else if (*bench) {
      const BenchReport report =
          run_benchmark(internal::parse_sizes(sizes_text), count, seed);
      out << format_table(report);
      if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw std::runtime_error("cannot write " + json_path);
        f << to_json(report).dump(2) << "\n";
      }
    } else if (*mine) {
      const auto found = mine_counterexamples(n, count, seed);
      for (std::size_t idx = 0; idx < found.size(); ++idx) {
        write_counterexample(out_dir, "counterexample_" + std::to_string(idx),
                             found[idx]);
      }
      out << nlohmann::json{{"n", n},
                            {"count", count},
                            {"seed", seed},
                            {"counterexamples", found.size()}}
                 .dump()
          << "\n";
    } else if (*lp) {
      const Instance inst = internal::read_instance_file(file);
      out << export_milp(inst, big_m);
    }
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace optsort

#endif  // OPTSORT_CLI_HPP_
