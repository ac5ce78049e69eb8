// Copyright 2026 The cransched Authors
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

// Multi-seed sweeps and the oracle verification run.
//
// Sweep config (JSON):
//   {
//     "sweep":      {"variable": "num_users", "values": [4, 6, 8, 10]},
//     "dims":       {"B": 3, "Z": 4},        // swept field may be omitted
//     "sim":        {"shadow_sigma_db": [2, 8], "fading": "rayleigh"},
//     "algorithms": ["opt", "heu", "pshd:0.3", "blanking"],
//     "num_seeds":  100,
//     "root_seed":  1,
//     "output":     "users.csv"
//   }
// variable is one of num_users, num_pz, fraction_p. "pshd" without an
// explicit p takes p from a fraction_p sweep. sim accepts every SimParams
// field by name except seed; shadow_sigma_db may be a number or a list.
// Optional booleans: "exact_on_pruned" (p-SHD runs the exact search on the
// pruned graph) and "literal_greedy" (greedy without the feasibility
// guard).
//
// Each (shadow, value, seed index) cell draws the instance with seed
// root_seed + seed index, so the same seed index sees the same users and
// channels across sweep values wherever dimensions allow.

#ifndef CRANSCHED_EXPERIMENT_H_
#define CRANSCHED_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cransched/channel_sim.h"
#include "cransched/clique_solver.h"
#include "cransched/heuristics.h"
#include "cransched/model.h"
#include "cransched/sched_graph.h"

namespace cran {

enum class AlgorithmKind { kOpt, kHeu, kPShd, kBlanking };

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::kOpt;
  std::optional<double> p;  // p-SHD only

  // "opt", "heu", "pshd" or "blanking".
  std::string label() const;
};

// Accepts opt, heu, pshd, pshd:<p>, blanking. Throws std::invalid_argument.
AlgorithmSpec ParseAlgorithm(const std::string& text);

struct AlgorithmOptions {
  bool exact_on_pruned = false;
  GreedyMode greedy_mode = GreedyMode::kFeasibilityGuarded;
};

// Runs one scheduler. p-SHD needs spec.p set.
SolveResult RunAlgorithm(const SchedulingGraph& g, const AlgorithmSpec& spec,
                         const AlgorithmOptions& options = {});

enum class SweepVariable { kNumUsers, kNumPz, kFractionP };

std::string ToString(SweepVariable v);

struct ExperimentConfig {
  SweepVariable variable = SweepVariable::kNumUsers;
  std::vector<double> values;
  // Fixed dimensions; the swept one is overridden per cell.
  int num_users = 0;
  int num_bs = 0;
  int num_pz = 0;
  SimParams sim;
  std::vector<double> shadow_values;
  std::vector<AlgorithmSpec> algorithms;
  int num_seeds = 100;
  std::uint64_t root_seed = 1;
  std::string output_path;
  AlgorithmOptions algorithm_options;
};

// Throws FormatError with "<source>:<line>:<col>:" for syntax errors and
// "<source>: <key>: ..." for schema errors.
ExperimentConfig ParseExperimentConfig(const std::string& text,
                                       const std::string& source = "<config>");
ExperimentConfig ReadExperimentConfig(const std::string& path);

struct ResultRow {
  std::uint64_t seed = 0;
  int num_users = 0;
  int num_bs = 0;
  int num_pz = 0;
  double shadow_sigma_db = 0.0;
  std::optional<double> p;
  std::string algorithm;
  // Unset when the algorithm failed; `note` then says why.
  std::optional<double> sum_rate;
  std::string note;
  std::int64_t solver_nodes = 0;
  double runtime_ms = 0.0;
  // Not written to CSV.
  SolveStatus status = SolveStatus::kInfeasible;
  int clique_size = 0;
};

inline constexpr const char* kCsvHeader =
    "seed,U,B,Z,shadow_sigma_db,p,algorithm,sum_rate_bps_hz,solver_nodes,"
    "runtime_ms";

// One CSV line without newline. Failed rows carry the note ("infeasible"
// or "error") in the sum_rate_bps_hz field and leave solver_nodes empty.
// runtime_ms is left empty unless with_timing.
std::string FormatCsvRow(const ResultRow& row, bool with_timing);

struct SweepOptions {
  int jobs = 1;
  bool check = false;
  bool with_timing = false;
};

struct SweepOutcome {
  std::vector<ResultRow> rows;
  // Dominance violations found with check enabled.
  std::vector<std::string> check_failures;
  // Algorithm errors, also noted in their rows.
  std::vector<std::string> errors;
};

// Rows are ordered by shadow value, sweep value, seed index, then the
// configured algorithm order, independent of `jobs`.
SweepOutcome RunSweep(const ExperimentConfig& config,
                      const SweepOptions& options);

void WriteSweepCsv(const SweepOutcome& outcome, bool with_timing,
                   std::ostream& out);

struct VerifyOptions {
  int min_users = 2;
  int max_users = 4;
  int min_bs = 2;
  int max_bs = 3;
  int min_pz = 1;
  int max_pz = 3;
  int trials = 200;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

struct VerifyReport {
  int trials = 0;
  int mismatches = 0;
  double max_deviation = 0.0;
  std::vector<std::string> failures;

  bool ok() const { return mismatches == 0; }
};

using GraphSolver = std::function<SolveResult(const SchedulingGraph&)>;

// Compares `solver` (SolveExact by default) against BruteForceSchedule on
// random positive-weight instances. Throws std::invalid_argument for
// trials < 1 or empty bounds and OracleSizeError when the largest
// dimensions exceed the brute-force guard.
VerifyReport RunVerification(const VerifyOptions& options,
                             const GraphSolver& solver = SolveExact);

}  // namespace cran

#endif  // CRANSCHED_EXPERIMENT_H_
