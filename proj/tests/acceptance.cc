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

// Acceptance run: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
// Usage: cransched_acceptance <path to cransched executable>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cransched/channel_sim.h"
#include "cransched/clique_solver.h"
#include "cransched/experiment.h"
#include "cransched/heuristics.h"
#include "oracles.h"

namespace {

namespace fs = std::filesystem;
using namespace cran;

int failures = 0;

void Report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

// 1. Exact solver against the brute-force oracle.
void OracleEquivalence() {
  VerifyOptions o;  // U 2..4, B 2..3, Z 1..3, 200 trials
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport r = RunVerification(o);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Report(1, r.ok() && r.trials >= 200 && r.max_deviation <= 1e-9 && secs < 60.0,
         Fmt("trials=%d mismatches=%d max_dev=%.3g time=%.2fs", r.trials,
             r.mismatches, r.max_deviation, secs));
}

// 2. Size-B*Z cliques are exactly the feasible schedules.
void CliqueBijection() {
  int dims_checked = 0, mismatched = 0;
  for (int u = 1; u <= 3; ++u) {
    for (int b = 1; b <= 3; ++b) {
      for (int z = 1; z <= 2; ++z) {
        oracle::Problem p{u, b, z, std::vector<double>(u * b * z, 1.0)};
        const oracle::SearchResult ref = oracle::EnumerateFullSchedules(p);
        const Dimensions dims(u, b, z);
        const SchedulingGraph g = BuildGraph(dims, BenefitTensor(dims, p.w));
        const auto cliques = EnumerateCliques(g, b * z);
        const std::set<std::vector<int>> got(cliques.begin(), cliques.end());
        ++dims_checked;
        if (got != ref.feasible || got.size() != cliques.size()) ++mismatched;
      }
    }
  }
  const Dimensions square(2, 2, 2);
  const SchedulingGraph g =
      BuildGraph(square, BenefitTensor(square, std::vector<double>(8, 1.0)));
  // {111,112,221,222} and {121,122,211,212} in one-based (u,b,z) digits.
  const std::vector<std::vector<int>> expected = {{0, 1, 6, 7}, {2, 3, 4, 5}};
  const bool square_ok = EnumerateCliques(g, 4) == expected;
  Report(2, mismatched == 0 && square_ok,
         Fmt("dims=%d mismatched=%d square_two_cliques=%s", dims_checked, mismatched,
             square_ok ? "yes" : "no"));
}

ExperimentConfig UserSweepConfig() {
  return ParseExperimentConfig(R"({
    "sweep": {"variable": "num_users", "values": [4, 6, 8, 10]},
    "dims": {"B": 3, "Z": 4},
    "sim": {"shadow_sigma_db": [2, 8]},
    "algorithms": ["opt", "heu", "pshd:0.3", "pshd:1", "blanking"],
    "num_seeds": 100, "root_seed": 1})");
}

ExperimentConfig PruningSweepConfig() {
  return ParseExperimentConfig(R"({
    "sweep": {"variable": "fraction_p", "values": [0.2, 0.3, 0.5, 1.0]},
    "dims": {"U": 5, "B": 4, "Z": 4},
    "sim": {"shadow_sigma_db": 2},
    "algorithms": ["opt", "heu", "pshd"],
    "num_seeds": 100, "root_seed": 1})");
}

// Key: (shadow, U, B, Z, p-or-minus-one, seed) -> algorithm label -> row.
using CellMap =
    std::map<std::tuple<double, int, int, int, double, std::uint64_t>,
             std::map<std::string, const ResultRow*>>;

std::string Label(const ResultRow& r) {
  if (r.algorithm == "pshd" && r.p) return Fmt("pshd:%g", *r.p);
  return r.algorithm;
}

CellMap Cells(const SweepOutcome& out, bool by_p) {
  CellMap cells;
  for (const ResultRow& r : out.rows) {
    const double p = by_p && r.p ? *r.p : -1.0;
    cells[{r.shadow_sigma_db, r.num_users, r.num_bs, r.num_pz, p, r.seed}]
         [by_p ? r.algorithm : Label(r)] = &r;
  }
  return cells;
}

// 3. OPT dominates both heuristics; p-SHD(p=1) equals HEU-SHD.
void Dominance(const SweepOutcome& users, const SweepOutcome& pruning) {
  int instances = 0, violations = 0, p1_diff = 0, missing = 0;
  const auto check = [&](const CellMap& cells) {
    for (const auto& [key, algos] : cells) {
      ++instances;
      const auto opt = algos.find("opt");
      if (opt == algos.end() || !opt->second->sum_rate) {
        ++missing;
        continue;
      }
      for (const auto& [name, row] : algos) {
        if (name == "opt" || name == "blanking") continue;
        if (!row->sum_rate) {
          ++missing;
        } else if (*row->sum_rate > *opt->second->sum_rate) {
          ++violations;
        }
      }
    }
  };
  const CellMap c_users = Cells(users, false);
  const CellMap c_pruning = Cells(pruning, true);
  check(c_users);
  check(c_pruning);
  for (const auto& [key, algos] : c_users) {
    const ResultRow* heu = algos.at("heu");
    const ResultRow* p1 = algos.at("pshd:1");
    if (heu->sum_rate != p1->sum_rate || heu->clique_size != p1->clique_size) ++p1_diff;
  }
  Report(3,
         violations == 0 && p1_diff == 0 && missing == 0 &&
             users.check_failures.empty() && pruning.check_failures.empty(),
         Fmt("instances=%d opt<heuristic=%d p1!=heu=%d missing=%d", instances,
             violations, p1_diff, missing));
}

// 4. Greedy-gap fixture.
void GreedyGap() {
  const Dimensions dims(2, 2, 1);
  // a[u][b]: (1,1)=10, (1,2)=9, (2,1)=9, (2,2)=1 in one-based indices.
  const SchedulingGraph g = BuildGraph(dims, BenefitTensor(dims, {10, 9, 9, 1}));
  const double heu = HeuShd(g).weight;
  const double opt = SolveExact(g).weight;
  Report(4, heu == 11.0 && opt == 18.0, Fmt("heu=%.17g opt=%.17g", heu, opt));
}

struct Means {
  std::map<std::pair<double, int>, std::map<std::string, double>> sum;
  std::map<std::pair<double, int>, std::map<std::string, int>> count;

  double mean(double shadow, int x, const std::string& a) const {
    return sum.at({shadow, x}).at(a) / count.at({shadow, x}).at(a);
  }
};

// 5. OPT vs HEU gap across user counts.
void UserSweepTrend(const SweepOutcome& users) {
  Means m;
  for (const ResultRow& r : users.rows) {
    if (!r.sum_rate) continue;
    m.sum[{r.shadow_sigma_db, r.num_users}][Label(r)] += *r.sum_rate;
    m.count[{r.shadow_sigma_db, r.num_users}][Label(r)] += 1;
  }
  const auto gap = [&](double s, int u) {
    const double opt = m.mean(s, u, "opt");
    return (opt - m.mean(s, u, "heu")) / opt;
  };
  bool opt_above = true;
  std::string gaps;
  for (int u : {4, 6, 8, 10}) {
    opt_above = opt_above && m.mean(8, u, "opt") > m.mean(8, u, "heu");
    gaps += Fmt(" U=%d:%.4f%%/%.4f%%", u, 100 * gap(2, u), 100 * gap(8, u));
  }
  const bool widening = gap(8, 10) > gap(8, 4);
  bool low_small = true;
  for (int u : {4, 6, 8, 10}) low_small = low_small && gap(2, u) < 0.05;
  Report(5, opt_above && widening && low_small,
         Fmt("opt>heu@8dB=%s gap8(U=10)>gap8(U=4)=%s gap2<5%%=%s gaps(2dB/8dB):",
             opt_above ? "yes" : "no", widening ? "yes" : "no",
             low_small ? "yes" : "no") +
             gaps);
}

// 6. p-SHD at p = 0.3 vs HEU.
void PruningTrend(const SweepOutcome& pruning) {
  double heu = 0.0, pshd = 0.0;
  int n_heu = 0, n_pshd = 0;
  for (const ResultRow& r : pruning.rows) {
    if (!r.sum_rate || !r.p || std::abs(*r.p - 0.3) > 1e-12) continue;
    if (r.algorithm == "heu") heu += *r.sum_rate, ++n_heu;
    if (r.algorithm == "pshd") pshd += *r.sum_rate, ++n_pshd;
  }
  heu /= n_heu;
  pshd /= n_pshd;
  const double rel = std::abs(heu - pshd) / heu;
  Report(6, n_heu == 100 && n_pshd == 100 && rel < 0.05,
         Fmt("mean heu=%.4f pshd(0.3)=%.4f rel_diff=%.4f%%", heu, pshd, 100 * rel));
}

// 7. Blanking solver keeps every power-zone busy.
void BlankingTightness(const SweepOutcome& users) {
  int runs = 0, tight = 0;
  std::string examples;
  for (const ResultRow& r : users.rows) {
    if (r.algorithm != "blanking") continue;
    ++runs;
    if (r.clique_size == r.num_bs * r.num_pz) {
      ++tight;
    } else if (examples.size() < 120) {
      examples += Fmt(" seed=%llu,U=%d,s=%g,size=%d",
                      static_cast<unsigned long long>(r.seed), r.num_users,
                      r.shadow_sigma_db, r.clique_size);
    }
  }
  const double frac = static_cast<double>(tight) / runs;
  Report(7, frac >= 0.99,
         Fmt("tight=%d/%d (%.2f%%)", tight, runs, 100 * frac) +
             (examples.empty() ? "" : " non-tight:" + examples));
}

// 8. Simulator statistics through the instance generator.
void SimulatorStats() {
  SimParams p;
  NetworkLayout layout;
  layout.bs_positions = {{0.0, 0.0}};
  const Point spot{300.0, 0.0};
  const double pl = oracle::SuiTerrainB(300.0, p.carrier_hz, p.bs_height_m,
                                        p.user_height_m);

  // Fading: 100 users x 1000 PZs, no shadowing.
  p.shadow_sigma_db = 0.0;
  layout.user_positions.assign(100, spot);
  const Instance fade = GenerateInstance(Dimensions(100, 1, 1000), p, layout);
  double fade_mean = 0.0;
  for (double g : fade.gain_sq_values()) fade_mean += g * std::pow(10.0, pl / 10.0);
  fade_mean /= static_cast<double>(fade.gain_sq_values().size());

  // Shadowing: 1e5 links, no fading.
  p.shadow_sigma_db = kHighShadowDb;
  p.fading = Fading::kNone;
  layout.user_positions.assign(100000, spot);
  const Instance shadow = GenerateInstance(Dimensions(100000, 1, 1), p, layout);
  double s1 = 0.0, s2 = 0.0;
  for (double g : shadow.gain_sq_values()) {
    const double s = -10.0 * std::log10(g) - pl;
    s1 += s;
    s2 += s * s;
  }
  const double n = static_cast<double>(shadow.gain_sq_values().size());
  const double sd = std::sqrt((s2 - s1 * s1 / n) / (n - 1));

  const Instance z4 = GenerateInstance(Dimensions(5, 3, 4), SimParams());
  const double p_dbm = 10.0 * std::log10(z4.power(0, 0) * 1e3);
  const double n_dbm = 10.0 * std::log10(z4.noise_w() * 1e3);

  const bool ok = std::abs(fade_mean - 1.0) <= 0.02 &&
                  std::abs(sd - kHighShadowDb) <= 0.03 * kHighShadowDb &&
                  std::abs(p_dbm - 21.38) <= 0.01 && std::abs(n_dbm + 104.62) <= 0.01;
  Report(8, ok,
         Fmt("fading_mean=%.4f shadow_sd=%.4f(sigma=%g) power=%.4fdBm noise=%.4fdBm",
             fade_mean, sd, kHighShadowDb, p_dbm, n_dbm));
}

int Shell(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 9. Repeated commands give identical bytes.
void Determinism(const std::string& cli) {
  const fs::path dir = fs::temp_directory_path() / "cransched_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "cfg.json") << R"({
    "sweep": {"variable": "num_users", "values": [4, 6]},
    "dims": {"B": 3, "Z": 4}, "sim": {"shadow_sigma_db": [2, 8]},
    "algorithms": ["opt", "heu", "pshd:0.3", "blanking"], "num_seeds": 10})";
  const std::string d = dir.string() + "/";
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"generate --users 8 --bs 3 --pz 4 --seed 5 --out " + d + "inst{}.json --dump-layout " +
           d + "layout{}.csv",
       "inst{}.json layout{}.csv"},
      {"solve " + d + "inst1.json --algo opt > " + d + "opt{}.txt", "opt{}.txt"},
      {"solve " + d + "inst1.json --algo pshd --p 0.3 > " + d + "pshd{}.txt", "pshd{}.txt"},
      {"sweep " + d + "cfg.json --jobs 1 --out " + d + "sweep{}.csv", "sweep{}.csv"},
      {"verify --trials 30 --seed 9 > " + d + "verify{}.txt", "verify{}.txt"},
      {"dump-graph " + d + "inst1.json --out " + d + "graph{}.txt", "graph{}.txt"},
  };
  const auto subst = [](std::string s, int k) {
    for (std::size_t pos; (pos = s.find("{}")) != std::string::npos;) {
      s.replace(pos, 2, std::to_string(k));
    }
    return s;
  };
  int compared = 0, differing = 0, failed = 0;
  for (const auto& [cmd, outputs] : commands) {
    for (int k : {1, 2}) {
      // Redirected commands need a shell; the plain ones run the same way.
      if (Shell("sh -c '" + cli + " " + subst(cmd, k) + "'") != 0) ++failed;
    }
    std::istringstream names(outputs);
    for (std::string name; names >> name;) {
      const std::string a = Slurp(dir / subst(name, 1));
      const std::string b = Slurp(dir / subst(name, 2));
      ++compared;
      if (a.empty() || a != b) ++differing;
    }
  }
  fs::remove_all(dir);
  Report(9, failed == 0 && differing == 0,
         Fmt("outputs_compared=%d differing=%d failed_commands=%d", compared,
             differing, failed));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <cransched executable>\n", argv[0]);
    return 1;
  }
  OracleEquivalence();
  CliqueBijection();
  SweepOptions check;
  check.check = true;
  const SweepOutcome users = RunSweep(UserSweepConfig(), check);
  const SweepOutcome pruning = RunSweep(PruningSweepConfig(), check);
  Dominance(users, pruning);
  GreedyGap();
  UserSweepTrend(users);
  PruningTrend(pruning);
  BlankingTightness(users);
  SimulatorStats();
  Determinism(argv[1]);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
