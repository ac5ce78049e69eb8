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

// cransched: generate networks, schedule them and run sweeps.
//
// Exit codes: 0 success, 1 usage or input error, 2 infeasible instance,
// 3 verification or dominance-check failure.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cransched/channel_sim.h"
#include "cransched/clique_solver.h"
#include "cransched/experiment.h"
#include "cransched/heuristics.h"
#include "cransched/io.h"
#include "cransched/model.h"
#include "cransched/sched_graph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFailed = 3;

struct GenerateArgs {
  int users = 0;
  int bs = 0;
  int pz = 0;
  cran::SimParams sim;
  std::string fading = "rayleigh";
  std::string out;
  std::string dump_layout;
};

struct SolveArgs {
  std::string instance;
  std::string algo = "opt";
  double p = 0.0;
  bool exact_on_pruned = false;
  bool literal_greedy = false;
  bool timing = false;
};

struct SweepArgs {
  std::string config;
  std::string out;
  int jobs = 1;
  bool check = false;
  bool timing = false;
};

struct VerifyArgs {
  cran::VerifyOptions options;
  bool mutant = false;
};

struct DumpArgs {
  std::string instance;
  std::string out;
};

std::string FormatShortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

// Loads an instance (sum-rate benefits) or a benefit file.
cran::BenefitTensor LoadBenefits(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cran::FormatError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (cran::IsBenefitDocument(text)) return cran::BenefitsFromJson(text, path);
  return cran::SumRateBenefits(cran::InstanceFromJson(text, path));
}

int RunGenerate(GenerateArgs& args) {
  args.sim.fading = cran::ParseFading(args.fading);
  const cran::Dimensions dims(args.users, args.bs, args.pz);
  const cran::NetworkLayout layout = cran::GenerateLayout(dims, args.sim);
  const cran::Instance inst = cran::GenerateInstance(dims, args.sim, layout);
  if (args.out.empty() || args.out == "-") {
    std::cout << cran::InstanceToJson(inst);
  } else {
    cran::WriteInstanceFile(inst, args.out);
  }
  if (!args.dump_layout.empty()) {
    std::ofstream csv(args.dump_layout, std::ios::binary | std::ios::trunc);
    if (!csv) throw cran::FormatError("cannot open '" + args.dump_layout + "'");
    cran::WriteLayoutCsv(layout, csv);
  }
  return kExitOk;
}

int RunSolve(const SolveArgs& args, bool p_given) {
  cran::AlgorithmSpec spec = cran::ParseAlgorithm(args.algo);
  if (spec.kind == cran::AlgorithmKind::kPShd && !spec.p) {
    if (!p_given) throw std::invalid_argument("--algo pshd needs --p");
    spec.p = args.p;
  }
  const cran::BenefitTensor a = LoadBenefits(args.instance);
  const cran::SchedulingGraph g = cran::BuildGraph(a.dims(), a);
  cran::AlgorithmOptions options;
  options.exact_on_pruned = args.exact_on_pruned;
  if (args.literal_greedy) options.greedy_mode = cran::GreedyMode::kLiteral;
  const cran::SolveResult result = cran::RunAlgorithm(g, spec, options);

  std::printf("algorithm: %s\n", spec.label().c_str());
  if (spec.p) std::printf("p: %s\n", FormatShortest(*spec.p).c_str());
  std::printf("status: %s\n", cran::ToString(result.status).c_str());
  std::printf("utility: %.17g\n", result.weight);
  std::printf("size: %zu of %d\n", result.schedule.size(), a.dims().z_tot());
  std::printf("nodes: %lld\n",
              static_cast<long long>(result.stats.nodes_explored));
  if (args.timing) {
    std::printf("runtime_ms: %.3f\n",
                std::chrono::duration<double, std::milli>(result.stats.elapsed)
                    .count());
  }
  std::printf("schedule (u b z, one-based):\n");
  for (const cran::Association& e : result.schedule.entries()) {
    std::printf("%d %d %d\n", e.user + 1, e.bs + 1, e.pz + 1);
  }
  return result.status == cran::SolveStatus::kInfeasible ? kExitInfeasible
                                                         : kExitOk;
}

int RunSweepCommand(const SweepArgs& args) {
  const cran::ExperimentConfig config = cran::ReadExperimentConfig(args.config);
  cran::SweepOptions options;
  options.jobs = args.jobs;
  options.check = args.check;
  options.with_timing = args.timing;
  const cran::SweepOutcome outcome = cran::RunSweep(config, options);
  for (const std::string& e : outcome.errors) std::cerr << "error: " << e << "\n";

  const std::string out = args.out.empty() ? config.output_path : args.out;
  if (out.empty() || out == "-") {
    cran::WriteSweepCsv(outcome, args.timing, std::cout);
  } else {
    std::ofstream csv(out, std::ios::binary | std::ios::trunc);
    if (!csv) throw cran::FormatError("cannot open '" + out + "' for writing");
    cran::WriteSweepCsv(outcome, args.timing, csv);
  }
  if (!outcome.check_failures.empty()) {
    for (const std::string& f : outcome.check_failures) {
      std::cerr << "check failed: " << f << "\n";
    }
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int RunVerify(const VerifyArgs& args) {
  const cran::GraphSolver solver =
      args.mutant ? cran::GraphSolver([](const cran::SchedulingGraph& g) {
        return cran::HeuShd(g);
      })
                  : cran::GraphSolver(cran::SolveExact);
  const cran::VerifyReport report = cran::RunVerification(args.options, solver);
  std::printf("trials: %d\n", report.trials);
  std::printf("mismatches: %d\n", report.mismatches);
  std::printf("max_deviation: %.3g\n", report.max_deviation);
  for (const std::string& f : report.failures) std::printf("mismatch: %s\n", f.c_str());
  std::printf("%s\n", report.ok() ? "PASS" : "FAIL");
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int RunDumpGraph(const DumpArgs& args) {
  const cran::BenefitTensor a = LoadBenefits(args.instance);
  const cran::SchedulingGraph g = cran::BuildGraph(a.dims(), a);
  if (args.out.empty() || args.out == "-") {
    cran::WriteDimacs(g, std::cout);
  } else {
    std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
    if (!out) throw cran::FormatError("cannot open '" + args.out + "'");
    cran::WriteDimacs(g, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordinated user scheduling for cloud-RAN downlinks"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Draw a random network instance");
  generate->add_option("--users", gen.users, "Number of users U")->required();
  generate->add_option("--bs", gen.bs, "Number of base-stations B")->required();
  generate->add_option("--pz", gen.pz, "Power-zones per frame Z")->required();
  generate->add_option("--seed", gen.sim.seed, "Random seed")->capture_default_str();
  generate->add_option("--shadow-db", gen.sim.shadow_sigma_db,
                       "Log-normal shadowing std-dev in dB")
      ->capture_default_str();
  generate->add_option("--fading", gen.fading, "rayleigh or none")->capture_default_str();
  generate->add_option("--carrier-hz", gen.sim.carrier_hz)->capture_default_str();
  generate->add_option("--bs-height-m", gen.sim.bs_height_m)->capture_default_str();
  generate->add_option("--user-height-m", gen.sim.user_height_m)->capture_default_str();
  generate->add_option("--cell-distance-m", gen.sim.cell_to_cell_m)->capture_default_str();
  generate->add_option("--bandwidth-hz", gen.sim.bandwidth_hz)->capture_default_str();
  generate->add_option("--power-dbm-hz", gen.sim.power_dbm_per_hz)->capture_default_str();
  generate->add_option("--noise-dbm-hz", gen.sim.noise_dbm_per_hz)->capture_default_str();
  generate->add_option("--sinr-gap-db", gen.sim.sinr_gap_db)->capture_default_str();
  generate->add_flag("--allow-any-bs", gen.sim.allow_any_bs,
                     "Fill hexagonal rings for B without a native layout");
  generate->add_option("--out", gen.out, "Instance file (default stdout)");
  generate->add_option("--dump-layout", gen.dump_layout,
                       "Write BS/user positions as CSV");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Schedule an instance or benefit file");
  solve_cmd->add_option("instance", solve.instance, "Instance or benefit JSON")->required();
  solve_cmd->add_option("--algo", solve.algo, "opt, heu, pshd[:p], blanking")
      ->capture_default_str();
  CLI::Option* p_opt = solve_cmd->add_option("--p", solve.p, "p-SHD fraction in (0, 1]");
  solve_cmd->add_flag("--exact-on-pruned", solve.exact_on_pruned,
                      "p-SHD: exact clique search on the pruned graph");
  solve_cmd->add_flag("--literal-greedy", solve.literal_greedy,
                      "Greedy without the full-schedule feasibility guard");
  solve_cmd->add_flag("--timing", solve.timing, "Print solver runtime");

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a multi-seed experiment");
  sweep_cmd->add_option("config", sweep.config, "Sweep config JSON")->required();
  sweep_cmd->add_option("--out", sweep.out, "CSV path (overrides config output)");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();
  sweep_cmd->add_flag("--check", sweep.check,
                      "Fail if a heuristic beats opt on any instance");
  sweep_cmd->add_flag("--timing", sweep.timing, "Fill the runtime_ms column");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Compare the exact solver against brute force");
  verify_cmd->add_option("--min-users", verify.options.min_users)->capture_default_str();
  verify_cmd->add_option("--max-users", verify.options.max_users)->capture_default_str();
  verify_cmd->add_option("--min-bs", verify.options.min_bs)->capture_default_str();
  verify_cmd->add_option("--max-bs", verify.options.max_bs)->capture_default_str();
  verify_cmd->add_option("--min-pz", verify.options.min_pz)->capture_default_str();
  verify_cmd->add_option("--max-pz", verify.options.max_pz)->capture_default_str();
  verify_cmd->add_option("--trials", verify.options.trials)->capture_default_str();
  verify_cmd->add_option("--seed", verify.options.seed)->capture_default_str();
  verify_cmd->add_flag("--mutant", verify.mutant,
                       "Negative control: check the greedy heuristic instead");

  DumpArgs dump;
  CLI::App* dump_cmd = app.add_subcommand("dump-graph", "Write the scheduling graph");
  dump_cmd->add_option("instance", dump.instance, "Instance or benefit JSON")->required();
  dump_cmd->add_option("--out", dump.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return RunGenerate(gen);
    if (*solve_cmd) return RunSolve(solve, p_opt->count() > 0);
    if (*sweep_cmd) return RunSweepCommand(sweep);
    if (*verify_cmd) return RunVerify(verify);
    if (*dump_cmd) return RunDumpGraph(dump);
  } catch (const std::exception& e) {
    std::cerr << "cransched: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
