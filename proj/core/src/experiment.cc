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

#include "cransched/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cransched/heuristics.h"
#include "cransched/io.h"
#include "cransched/rng.h"
#include "json_util.h"

namespace cran {

std::string AlgorithmSpec::label() const {
  switch (kind) {
    case AlgorithmKind::kOpt:
      return "opt";
    case AlgorithmKind::kHeu:
      return "heu";
    case AlgorithmKind::kPShd:
      return "pshd";
    case AlgorithmKind::kBlanking:
      return "blanking";
  }
  return "unknown";
}

AlgorithmSpec ParseAlgorithm(const std::string& text) {
  if (text == "opt") return {AlgorithmKind::kOpt, std::nullopt};
  if (text == "heu") return {AlgorithmKind::kHeu, std::nullopt};
  if (text == "blanking") return {AlgorithmKind::kBlanking, std::nullopt};
  if (text == "pshd") return {AlgorithmKind::kPShd, std::nullopt};
  if (text.rfind("pshd:", 0) == 0) {
    const std::string number = text.substr(5);
    double p = 0.0;
    const auto [ptr, ec] =
        std::from_chars(number.data(), number.data() + number.size(), p);
    if (ec != std::errc() || ptr != number.data() + number.size() ||
        !(p > 0.0 && p <= 1.0)) {
      throw std::invalid_argument("bad p in algorithm '" + text +
                                  "' (need pshd:<p> with 0 < p <= 1)");
    }
    return {AlgorithmKind::kPShd, p};
  }
  throw std::invalid_argument("unknown algorithm '" + text +
                              "' (expected opt, heu, pshd[:p], blanking)");
}

SolveResult RunAlgorithm(const SchedulingGraph& g, const AlgorithmSpec& spec,
                         const AlgorithmOptions& options) {
  switch (spec.kind) {
    case AlgorithmKind::kOpt:
      return SolveExact(g);
    case AlgorithmKind::kHeu:
      return HeuShd(g, options.greedy_mode);
    case AlgorithmKind::kBlanking:
      return SolveExactBlanking(g);
    case AlgorithmKind::kPShd:
      if (!spec.p) throw std::invalid_argument("pshd needs a value for p");
      return PShd(g, HeuristicParams{*spec.p, options.exact_on_pruned,
                                     options.greedy_mode});
  }
  throw std::logic_error("unhandled algorithm");
}

std::string ToString(SweepVariable v) {
  switch (v) {
    case SweepVariable::kNumUsers:
      return "num_users";
    case SweepVariable::kNumPz:
      return "num_pz";
    case SweepVariable::kFractionP:
      return "fraction_p";
  }
  return "unknown";
}

namespace {

using internal::Member;
using nlohmann::json;

[[noreturn]] void SchemaError(const std::string& source, const std::string& key,
                              const std::string& what) {
  throw FormatError(source + ": " + key + ": " + what);
}

void RejectUnknownKeys(const json& obj, const std::set<std::string>& known,
                       const std::string& source, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.contains(it.key())) {
      SchemaError(source, where.empty() ? it.key() : where + "." + it.key(),
                  "unknown key");
    }
  }
}

double NumberAt(const json& v, const std::string& source,
                const std::string& key) {
  if (!v.is_number()) SchemaError(source, key, "expected a number");
  return v.get<double>();
}

int PositiveIntAt(const json& v, const std::string& source,
                  const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    SchemaError(source, key, "expected a positive integer");
  }
  return v.get<int>();
}

void ParseSim(const json& sim, const std::string& source,
              ExperimentConfig& config) {
  if (!sim.is_object()) SchemaError(source, "sim", "expected an object");
  RejectUnknownKeys(sim,
                    {"cell_to_cell_m", "carrier_hz", "bs_height_m",
                     "user_height_m", "shadow_sigma_db", "bandwidth_hz",
                     "power_dbm_per_hz", "noise_dbm_per_hz", "sinr_gap_db",
                     "min_distance_m", "fading", "allow_any_bs"},
                    source, "sim");
  SimParams& p = config.sim;
  auto number = [&](const char* key, double& field) {
    if (sim.contains(key)) {
      field = NumberAt(sim[key], source, std::string("sim.") + key);
    }
  };
  number("cell_to_cell_m", p.cell_to_cell_m);
  number("carrier_hz", p.carrier_hz);
  number("bs_height_m", p.bs_height_m);
  number("user_height_m", p.user_height_m);
  number("bandwidth_hz", p.bandwidth_hz);
  number("power_dbm_per_hz", p.power_dbm_per_hz);
  number("noise_dbm_per_hz", p.noise_dbm_per_hz);
  number("sinr_gap_db", p.sinr_gap_db);
  number("min_distance_m", p.min_distance_m);
  if (sim.contains("fading")) {
    if (!sim["fading"].is_string()) {
      SchemaError(source, "sim.fading", "expected a string");
    }
    try {
      p.fading = ParseFading(sim["fading"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      SchemaError(source, "sim.fading", e.what());
    }
  }
  if (sim.contains("allow_any_bs")) {
    if (!sim["allow_any_bs"].is_boolean()) {
      SchemaError(source, "sim.allow_any_bs", "expected true or false");
    }
    p.allow_any_bs = sim["allow_any_bs"].get<bool>();
  }
  if (sim.contains("shadow_sigma_db")) {
    const json& s = sim["shadow_sigma_db"];
    if (s.is_array()) {
      for (const json& v : s) {
        config.shadow_values.push_back(
            NumberAt(v, source, "sim.shadow_sigma_db[]"));
      }
      if (config.shadow_values.empty()) {
        SchemaError(source, "sim.shadow_sigma_db", "empty list");
      }
    } else {
      config.shadow_values.push_back(
          NumberAt(s, source, "sim.shadow_sigma_db"));
    }
  } else {
    config.shadow_values.push_back(p.shadow_sigma_db);
  }
  try {
    for (double sigma : config.shadow_values) {
      SimParams check = p;
      check.shadow_sigma_db = sigma;
      ValidateSimParams(check);
    }
  } catch (const std::invalid_argument& e) {
    SchemaError(source, "sim", e.what());
  }
}

}  // namespace

ExperimentConfig ParseExperimentConfig(const std::string& text,
                                       const std::string& source) {
  const json doc = internal::ParseJsonText(text, source);
  if (!doc.is_object()) throw FormatError(source + ": expected a JSON object");
  RejectUnknownKeys(doc,
                    {"sweep", "dims", "sim", "algorithms", "num_seeds",
                     "root_seed", "output", "exact_on_pruned", "literal_greedy"},
                    source, "");
  ExperimentConfig config;

  const json& sweep = Member(doc, "sweep", source);
  if (!sweep.is_object()) SchemaError(source, "sweep", "expected an object");
  RejectUnknownKeys(sweep, {"variable", "values"}, source, "sweep");
  const json& variable = Member(sweep, "variable", source);
  const std::string name = variable.is_string() ? variable.get<std::string>() : "";
  if (name == "num_users") {
    config.variable = SweepVariable::kNumUsers;
  } else if (name == "num_pz") {
    config.variable = SweepVariable::kNumPz;
  } else if (name == "fraction_p") {
    config.variable = SweepVariable::kFractionP;
  } else {
    SchemaError(source, "sweep.variable",
                "expected num_users, num_pz or fraction_p");
  }
  const json& values = Member(sweep, "values", source);
  if (!values.is_array() || values.empty()) {
    SchemaError(source, "sweep.values", "expected a non-empty list");
  }
  for (const json& v : values) {
    if (config.variable == SweepVariable::kFractionP) {
      const double p = NumberAt(v, source, "sweep.values[]");
      if (!(p > 0.0 && p <= 1.0)) {
        SchemaError(source, "sweep.values[]", "p must lie in (0, 1]");
      }
      config.values.push_back(p);
    } else {
      config.values.push_back(PositiveIntAt(v, source, "sweep.values[]"));
    }
  }

  const json& dims = Member(doc, "dims", source);
  if (!dims.is_object()) SchemaError(source, "dims", "expected an object");
  RejectUnknownKeys(dims, {"U", "B", "Z"}, source, "dims");
  auto dim = [&](const char* key, bool swept) -> int {
    if (dims.contains(key)) {
      return PositiveIntAt(dims[key], source, std::string("dims.") + key);
    }
    if (!swept) SchemaError(source, std::string("dims.") + key, "missing");
    return 0;
  };
  config.num_users = dim("U", config.variable == SweepVariable::kNumUsers);
  config.num_bs = dim("B", false);
  config.num_pz = dim("Z", config.variable == SweepVariable::kNumPz);

  if (doc.contains("sim")) {
    ParseSim(doc["sim"], source, config);
  } else {
    config.shadow_values.push_back(config.sim.shadow_sigma_db);
  }

  const json& algorithms = Member(doc, "algorithms", source);
  if (!algorithms.is_array() || algorithms.empty()) {
    SchemaError(source, "algorithms", "expected a non-empty list");
  }
  for (const json& a : algorithms) {
    if (!a.is_string()) SchemaError(source, "algorithms[]", "expected a string");
    try {
      AlgorithmSpec spec = ParseAlgorithm(a.get<std::string>());
      if (spec.kind == AlgorithmKind::kPShd && !spec.p &&
          config.variable != SweepVariable::kFractionP) {
        SchemaError(source, "algorithms[]",
                    "pshd needs pshd:<p> unless sweeping fraction_p");
      }
      config.algorithms.push_back(spec);
    } catch (const std::invalid_argument& e) {
      SchemaError(source, "algorithms[]", e.what());
    }
  }

  if (doc.contains("num_seeds")) {
    config.num_seeds = PositiveIntAt(doc["num_seeds"], source, "num_seeds");
  }
  if (doc.contains("root_seed")) {
    const json& s = doc["root_seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      SchemaError(source, "root_seed", "expected a non-negative integer");
    }
    config.root_seed = s.get<std::uint64_t>();
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) SchemaError(source, "output", "expected a string");
    config.output_path = doc["output"].get<std::string>();
  }
  auto flag = [&](const char* key) {
    if (!doc.contains(key)) return false;
    if (!doc[key].is_boolean()) SchemaError(source, key, "expected true or false");
    return doc[key].get<bool>();
  };
  config.algorithm_options.exact_on_pruned = flag("exact_on_pruned");
  if (flag("literal_greedy")) {
    config.algorithm_options.greedy_mode = GreedyMode::kLiteral;
  }
  return config;
}

ExperimentConfig ReadExperimentConfig(const std::string& path) {
  return ParseExperimentConfig(internal::ReadTextFile(path), path);
}

namespace {

std::string FormatNumber(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

struct Cell {
  double shadow = 0.0;
  double value = 0.0;
  int seed_index = 0;
};

std::vector<ResultRow> RunCell(const ExperimentConfig& config, const Cell& cell,
                               bool with_timing,
                               std::vector<std::string>& errors) {
  int num_users = config.num_users;
  int num_pz = config.num_pz;
  std::optional<double> sweep_p;
  switch (config.variable) {
    case SweepVariable::kNumUsers:
      num_users = static_cast<int>(cell.value);
      break;
    case SweepVariable::kNumPz:
      num_pz = static_cast<int>(cell.value);
      break;
    case SweepVariable::kFractionP:
      sweep_p = cell.value;
      break;
  }
  const Dimensions dims(num_users, config.num_bs, num_pz);
  SimParams sim = config.sim;
  sim.seed = config.root_seed + static_cast<std::uint64_t>(cell.seed_index);
  sim.shadow_sigma_db = cell.shadow;

  std::vector<ResultRow> rows;
  auto base_row = [&](const AlgorithmSpec& spec) {
    ResultRow row;
    row.seed = sim.seed;
    row.num_users = num_users;
    row.num_bs = config.num_bs;
    row.num_pz = num_pz;
    row.shadow_sigma_db = cell.shadow;
    row.algorithm = spec.label();
    row.p = spec.kind == AlgorithmKind::kPShd && spec.p ? spec.p : sweep_p;
    return row;
  };

  std::optional<SchedulingGraph> graph;
  std::string setup_error;
  try {
    graph.emplace(BuildGraph(dims, SumRateBenefits(GenerateInstance(dims, sim))));
  } catch (const std::exception& e) {
    setup_error = e.what();
  }

  for (const AlgorithmSpec& configured : config.algorithms) {
    AlgorithmSpec spec = configured;
    if (spec.kind == AlgorithmKind::kPShd && !spec.p) spec.p = sweep_p;
    ResultRow row = base_row(spec);
    std::string error = setup_error;
    if (graph) {
      try {
        const SolveResult result =
            RunAlgorithm(*graph, spec, config.algorithm_options);
        row.status = result.status;
        row.clique_size = static_cast<int>(result.vertices.size());
        row.solver_nodes = result.stats.nodes_explored;
        if (with_timing) {
          row.runtime_ms =
              std::chrono::duration<double, std::milli>(result.stats.elapsed)
                  .count();
        }
        if (result.status == SolveStatus::kInfeasible) {
          row.note = "infeasible";
        } else {
          row.sum_rate = result.weight;
        }
      } catch (const std::exception& e) {
        error = e.what();
      }
    }
    if (!error.empty()) {
      row.note = "error";
      errors.push_back("seed " + std::to_string(row.seed) + " " + row.algorithm +
                       ": " + error);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void CheckDominance(const std::vector<ResultRow>& rows,
                    std::vector<std::string>& failures) {
  const ResultRow* opt = nullptr;
  for (const ResultRow& r : rows) {
    if (r.algorithm == "opt" && r.sum_rate) opt = &r;
  }
  if (opt == nullptr) return;
  for (const ResultRow& r : rows) {
    if ((r.algorithm == "heu" || r.algorithm == "pshd") && r.sum_rate &&
        *r.sum_rate > *opt->sum_rate) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "seed " << r.seed << " U=" << r.num_users << " B=" << r.num_bs
          << " Z=" << r.num_pz << " shadow=" << r.shadow_sigma_db << ": "
          << r.algorithm << " " << *r.sum_rate << " > opt " << *opt->sum_rate;
      failures.push_back(msg.str());
    }
  }
}

}  // namespace

std::string FormatCsvRow(const ResultRow& row, bool with_timing) {
  std::string line;
  line += std::to_string(row.seed) + ",";
  line += std::to_string(row.num_users) + ",";
  line += std::to_string(row.num_bs) + ",";
  line += std::to_string(row.num_pz) + ",";
  line += FormatNumber(row.shadow_sigma_db) + ",";
  line += (row.p ? FormatNumber(*row.p) : std::string()) + ",";
  line += row.algorithm + ",";
  if (row.sum_rate) {
    line += FormatNumber(*row.sum_rate) + ",";
    line += std::to_string(row.solver_nodes) + ",";
  } else {
    line += row.note + ",,";
  }
  if (with_timing && row.sum_rate) line += FormatNumber(row.runtime_ms);
  return line;
}

SweepOutcome RunSweep(const ExperimentConfig& config,
                      const SweepOptions& options) {
  std::vector<Cell> cells;
  for (double shadow : config.shadow_values) {
    for (double value : config.values) {
      for (int s = 0; s < config.num_seeds; ++s) cells.push_back({shadow, value, s});
    }
  }
  std::vector<std::vector<ResultRow>> results(cells.size());
  std::vector<std::vector<std::string>> cell_errors(cells.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      results[i] = RunCell(config, cells[i], options.with_timing, cell_errors[i]);
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  SweepOutcome outcome;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (options.check) CheckDominance(results[i], outcome.check_failures);
    for (std::string& e : cell_errors[i]) outcome.errors.push_back(std::move(e));
    for (ResultRow& r : results[i]) outcome.rows.push_back(std::move(r));
  }
  return outcome;
}

void WriteSweepCsv(const SweepOutcome& outcome, bool with_timing,
                   std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const ResultRow& row : outcome.rows) {
    out << FormatCsvRow(row, with_timing) << "\n";
  }
}

VerifyReport RunVerification(const VerifyOptions& options,
                             const GraphSolver& solver) {
  if (options.trials < 1) {
    throw std::invalid_argument("verify needs at least one trial");
  }
  if (options.min_users < 1 || options.min_bs < 1 || options.min_pz < 1 ||
      options.max_users < options.min_users ||
      options.max_bs < options.min_bs || options.max_pz < options.min_pz) {
    throw std::invalid_argument("verify bounds are empty or non-positive");
  }
  const double per_bs = std::pow(options.max_users, options.max_pz);
  if (per_bs > 1e4 || std::pow(per_bs, options.max_bs) > 1e8) {
    throw OracleSizeError("verify bounds exceed the brute-force guard");
  }

  VerifyReport report;
  constexpr std::uint64_t kVerifyStream = 0x766572696679ULL;
  for (int t = 0; t < options.trials; ++t) {
    RandomStream rng(options.seed, {kVerifyStream, static_cast<std::uint64_t>(t)});
    auto pick = [&rng](int lo, int hi) {
      return lo + static_cast<int>(rng.NextU64() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const int u = pick(options.min_users, options.max_users);
    const int b = pick(options.min_bs, options.max_bs);
    const int z = pick(options.min_pz, options.max_pz);
    const Dimensions dims(u, b, z);
    std::vector<double> weights(static_cast<std::size_t>(dims.num_associations()));
    for (double& w : weights) w = rng.UniformOpen();
    const BenefitTensor a(dims, std::move(weights));

    const SolveResult oracle = BruteForceSchedule(dims, a);
    const SchedulingGraph g = BuildGraph(dims, a);
    const SolveResult got = solver(g);
    ++report.trials;

    std::ostringstream where;
    where << "trial " << t << " (U=" << u << " B=" << b << " Z=" << z << ")";
    const bool oracle_feasible = oracle.status == SolveStatus::kOptimal;
    const bool got_feasible = got.status == SolveStatus::kOptimal ||
                              got.status == SolveStatus::kFeasible;
    if (oracle_feasible != got_feasible) {
      ++report.mismatches;
      report.failures.push_back(where.str() + ": status " + ToString(got.status) +
                                ", oracle " + ToString(oracle.status));
      continue;
    }
    if (!oracle_feasible) continue;
    const double deviation = std::abs(got.weight - oracle.weight);
    report.max_deviation = std::max(report.max_deviation, deviation);
    const bool valid = ValidateSchedule(got.schedule, dims, true).ok();
    if (deviation > options.tolerance || !valid) {
      ++report.mismatches;
      std::ostringstream msg;
      msg.precision(17);
      msg << where.str() << ": weight " << got.weight << ", oracle "
          << oracle.weight << (valid ? "" : ", schedule not feasible");
      report.failures.push_back(msg.str());
    }
  }
  return report;
}

}  // namespace cran
