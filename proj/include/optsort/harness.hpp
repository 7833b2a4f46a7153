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

// Benchmarking against the exact oracles and counterexample mining.
//
// Instances are generated from per-instance seeds derived from the run seed,
// the size and the index, so any row or counterexample can be regenerated on
// its own. Gaps are (solver - oracle) / max(1, oracle) in percent.

#ifndef OPTSORT_HARNESS_HPP_
#define OPTSORT_HARNESS_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "optsort/driver.hpp"
#include "optsort/instance.hpp"
#include "optsort/oracles.hpp"
#include "optsort/timeline.hpp"

namespace optsort {

enum class OracleMethod { kAuto, kBruteForce, kBranchAndBound, kNone };

inline std::string to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::kAuto: return "auto";
    case OracleMethod::kBruteForce: return "brute";
    case OracleMethod::kBranchAndBound: return "bnb";
    case OracleMethod::kNone: return "none";
  }
  return "unknown";
}

inline constexpr int kBranchAndBoundMaxJobs = 16;

// Brute force up to 11 jobs, branch and bound up to 16, nothing above.
inline OracleMethod resolve_oracle(OracleMethod requested, int n) {
  if (requested == OracleMethod::kAuto) {
    if (n <= kBruteForceMaxJobs) return OracleMethod::kBruteForce;
    if (n <= kBranchAndBoundMaxJobs) return OracleMethod::kBranchAndBound;
    return OracleMethod::kNone;
  }
  if (requested == OracleMethod::kBruteForce && n > kBruteForceMaxJobs) {
    throw std::invalid_argument("brute force oracle cannot handle n = " +
                                std::to_string(n));
  }
  return requested;
}

inline OracleResult run_oracle(const Instance& inst, OracleMethod method,
                               const BranchAndBoundOptions& bnb = {}) {
  switch (resolve_oracle(method, inst.size())) {
    case OracleMethod::kBruteForce: return brute_force_optimum(inst);
    case OracleMethod::kBranchAndBound:
      return branch_and_bound_optimum(inst, bnb);
    default: throw std::invalid_argument("no oracle for this size");
  }
}

inline double relative_gap_pct(Time solver, Time oracle) {
  return 100.0 * static_cast<double>(solver - oracle) /
         static_cast<double>(std::max<Time>(1, oracle));
}

inline std::uint64_t instance_seed(std::uint64_t run_seed, int n, int index) {
  SplitMix64 mix(run_seed ^ (static_cast<std::uint64_t>(n) << 32) ^
                 static_cast<std::uint64_t>(index));
  mix.next();
  return mix.next();
}

// ---------------------------------------------------------------------------
// Benchmark

struct BenchRow {
  int n = 0;
  int count = 0;
  OracleMethod oracle = OracleMethod::kNone;
  double mean_solver_ms = 0.0;
  double max_solver_ms = 0.0;
  double mean_oracle_ms = 0.0;
  double mean_gap_pct = 0.0;
  double max_gap_pct = 0.0;
  int mismatches = 0;
  // Instances where the oracle hit a limit before proving optimality.
  int unproven = 0;
  int safety_trips = 0;
  // Outer passes whose accepted objective did not strictly decrease.
  int non_monotone = 0;
};

struct BenchReport {
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<BenchRow> rows;
};

struct BenchOptions {
  OracleMethod oracle = OracleMethod::kAuto;
  BranchAndBoundOptions bnb;
};

inline bool log_strictly_decreasing(const SolveResult& r) {
  Time prev = -1;
  for (const auto& e : r.move_log) {
    if (e.objective_after >= e.objective_before) return false;
    if (prev >= 0 && e.objective_after >= prev) return false;
    prev = e.objective_after;
  }
  return true;
}

inline BenchReport run_benchmark(const std::vector<int>& sizes, int count,
                                 std::uint64_t seed,
                                 const BenchOptions& options = {}) {
  BenchReport report;
  report.seed = seed;
  report.count = count;
  if (count <= 0) return report;
  for (int n : sizes) {
    if (n < 1) throw std::invalid_argument("sizes must be >= 1");
    BenchRow row;
    row.n = n;
    row.count = count;
    row.oracle = resolve_oracle(options.oracle, n);
    for (int idx = 0; idx < count; ++idx) {
      const Instance inst = generate_instance(n, instance_seed(seed, n, idx));
      const SolveResult solved = optimal_sort(inst);
      row.mean_solver_ms += solved.elapsed_ms;
      row.max_solver_ms = std::max(row.max_solver_ms, solved.elapsed_ms);
      row.safety_trips += solved.safety_tripped ? 1 : 0;
      row.non_monotone += log_strictly_decreasing(solved) ? 0 : 1;
      if (row.oracle == OracleMethod::kNone) continue;
      const OracleResult exact = run_oracle(inst, row.oracle, options.bnb);
      row.mean_oracle_ms += exact.elapsed_ms;
      if (!exact.proved_optimal) {
        ++row.unproven;
        continue;
      }
      const double gap = relative_gap_pct(solved.best_objective, exact.objective);
      row.mean_gap_pct += gap;
      row.max_gap_pct = std::max(row.max_gap_pct, gap);
      if (solved.best_objective > exact.objective) ++row.mismatches;
    }
    row.mean_solver_ms /= count;
    row.mean_oracle_ms /= count;
    const int proven = count - row.unproven;
    if (row.oracle != OracleMethod::kNone && proven > 0) {
      row.mean_gap_pct /= proven;
    }
    report.rows.push_back(row);
  }
  return report;
}

inline nlohmann::json to_json(const BenchReport& report,
                              bool include_timing = true) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json j = {
        {"n", r.n},
        {"count", r.count},
        {"oracle", to_string(r.oracle)},
        {"mean_gap_pct", r.mean_gap_pct},
        {"max_gap_pct", r.max_gap_pct},
        {"mismatches", r.mismatches},
        {"unproven", r.unproven},
        {"safety_trips", r.safety_trips},
        {"non_monotone", r.non_monotone},
    };
    if (include_timing) {
      j["mean_solver_ms"] = r.mean_solver_ms;
      j["max_solver_ms"] = r.max_solver_ms;
      j["mean_oracle_ms"] = r.mean_oracle_ms;
    }
    rows.push_back(j);
  }
  return {{"seed", report.seed},
          {"count", report.count},
          {"generator", "splitmix64; r ~ U{0..200}, p ~ U{1..50}"},
          {"rows", rows}};
}

inline std::string format_table(const BenchReport& report) {
  auto num = [](double v, int digits) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return std::string(buf);
  };
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%4s %6s %7s %12s %12s %10s %10s %6s\n",
                "n", "count", "oracle", "solver_ms", "oracle_ms", "gap_%",
                "max_gap_%", "miss");
  os << line;
  for (const auto& r : report.rows) {
    const bool exact = r.oracle != OracleMethod::kNone;
    const std::string oracle_ms = exact ? num(r.mean_oracle_ms, 2) : "-";
    const std::string gap = exact ? num(r.mean_gap_pct, 4) : "-";
    const std::string max_gap = exact ? num(r.max_gap_pct, 4) : "-";
    const std::string miss = exact ? std::to_string(r.mismatches) : "-";
    std::snprintf(line, sizeof line, "%4d %6d %7s %12.2f %12s %10s %10s %6s\n",
                  r.n, r.count, to_string(r.oracle).c_str(), r.mean_solver_ms,
                  oracle_ms.c_str(), gap.c_str(), max_gap.c_str(),
                  miss.c_str());
    os << line;
  }
  os << "seed " << report.seed
     << "; rows without an oracle report runtime only\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Counterexamples

struct Counterexample {
  std::string instance;
  Time solver_objective = 0;
  Time oracle_objective = 0;
  std::vector<JobId> solver_order;
  std::vector<JobId> oracle_order;
  bool shrunk = false;
};

// Returns the job order a solver produces for an instance.
using SolverFn = std::function<std::vector<JobId>(const Instance&)>;

inline std::vector<JobId> optimal_sort_order(const Instance& inst) {
  return optimal_sort(inst).best_sequence.order;
}

// Strict mismatch against brute force, if any.
inline std::optional<Counterexample> find_mismatch(const Instance& inst,
                                                   const SolverFn& solver) {
  const std::vector<JobId> order = solver(inst);
  check_sequence(inst, order);
  const Time obj = objective_of(inst, order);
  const OracleResult exact = brute_force_optimum(inst);
  if (obj <= exact.objective) return std::nullopt;
  return Counterexample{serialize_instance(inst), obj, exact.objective, order,
                        exact.sequence.order, false};
}

inline Instance without_job(const Instance& inst, JobId job) {
  std::vector<Time> r;
  std::vector<Time> p;
  for (JobId j = 1; j <= inst.size(); ++j) {
    if (j == job) continue;
    r.push_back(inst.release(j));
    p.push_back(inst.processing(j));
  }
  return Instance(std::move(r), std::move(p));
}

// Greedy single-job deletion while the mismatch persists. The result is
// locally minimal: deleting any one more job removes the mismatch.
inline Counterexample shrink_counterexample(const Counterexample& cx,
                                            const SolverFn& solver) {
  Counterexample current = cx;
  Instance inst = parse_instance(cx.instance);
  bool progress = true;
  while (progress && inst.size() > 1) {
    progress = false;
    for (JobId j = 1; j <= inst.size(); ++j) {
      const Instance smaller = without_job(inst, j);
      if (auto found = find_mismatch(smaller, solver)) {
        inst = smaller;
        current = *found;
        progress = true;
        break;
      }
    }
  }
  current.shrunk = true;
  return current;
}

struct VerifyOutcome {
  OracleMethod method = OracleMethod::kNone;
  Time solver_objective = 0;
  Time oracle_objective = 0;
  bool proved_optimal = false;
  // Solver strictly worse than a proven optimum.
  bool mismatch = false;
};

// Sizes without an automatic oracle fall back to branch and bound.
inline VerifyOutcome verify_instance(const Instance& inst, OracleMethod method,
                                     const SolverFn& solver = optimal_sort_order,
                                     const BranchAndBoundOptions& bnb = {}) {
  VerifyOutcome v;
  v.method = resolve_oracle(method, inst.size());
  if (v.method == OracleMethod::kNone) {
    v.method = OracleMethod::kBranchAndBound;
  }
  const std::vector<JobId> order = solver(inst);
  check_sequence(inst, order);
  v.solver_objective = objective_of(inst, order);
  const OracleResult exact = run_oracle(inst, v.method, bnb);
  v.oracle_objective = exact.objective;
  v.proved_optimal = exact.proved_optimal;
  v.mismatch = exact.proved_optimal && v.solver_objective > exact.objective;
  return v;
}

inline std::vector<Counterexample> mine_counterexamples(
    int n, int count, std::uint64_t seed,
    const SolverFn& solver = optimal_sort_order) {
  if (n > kBruteForceMaxJobs) {
    throw std::invalid_argument("mining requires n <= " +
                                std::to_string(kBruteForceMaxJobs));
  }
  std::vector<Counterexample> out;
  for (int idx = 0; idx < count; ++idx) {
    const Instance inst = generate_instance(n, instance_seed(seed, n, idx));
    if (auto found = find_mismatch(inst, solver)) {
      out.push_back(shrink_counterexample(*found, solver));
    }
  }
  return out;
}

inline nlohmann::json to_json(const Counterexample& cx) {
  return {{"instance", cx.instance},
          {"solver_objective", cx.solver_objective},
          {"oracle_objective", cx.oracle_objective},
          {"solver_order", cx.solver_order},
          {"oracle_order", cx.oracle_order},
          {"shrunk", cx.shrunk}};
}

// Parses and re-verifies a counterexample: both orders must be permutations
// whose recomputed objectives match the recorded ones, with the solver
// strictly worse.
inline Counterexample counterexample_from_json(const nlohmann::json& j) {
  Counterexample cx;
  cx.instance = j.at("instance").get<std::string>();
  cx.solver_objective = j.at("solver_objective").get<Time>();
  cx.oracle_objective = j.at("oracle_objective").get<Time>();
  cx.solver_order = j.at("solver_order").get<std::vector<JobId>>();
  cx.oracle_order = j.at("oracle_order").get<std::vector<JobId>>();
  cx.shrunk = j.at("shrunk").get<bool>();
  const Instance inst = parse_instance(cx.instance);
  check_sequence(inst, cx.solver_order);
  check_sequence(inst, cx.oracle_order);
  const Sequence solver_seq{cx.solver_order};
  const Sequence oracle_seq{cx.oracle_order};
  if (compute_profile(inst, solver_seq).objective != cx.solver_objective ||
      compute_profile(inst, oracle_seq).objective != cx.oracle_objective) {
    throw std::runtime_error("counterexample objectives do not recompute");
  }
  if (cx.solver_objective <= cx.oracle_objective) {
    throw std::runtime_error("counterexample is not a strict mismatch");
  }
  return cx;
}

// Writes <dir>/<stem>.json and <dir>/<stem>.txt (instance file).
inline void write_counterexample(const std::filesystem::path& dir,
                                 const std::string& stem,
                                 const Counterexample& cx) {
  std::filesystem::create_directories(dir);
  std::ofstream(dir / (stem + ".json")) << to_json(cx).dump(2) << "\n";
  std::ofstream(dir / (stem + ".txt")) << cx.instance;
}

inline Counterexample load_counterexample(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return counterexample_from_json(nlohmann::json::parse(in));
}

}  // namespace optsort

#endif  // OPTSORT_HARNESS_HPP_
