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

#include "cransched/heuristics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cran {
namespace {

using Clock = std::chrono::steady_clock;

// Tracks which users and base-stations a partial clique already uses.
class Coverage {
 public:
  Coverage(const SchedulingGraph& g, GreedyMode mode)
      : dims_(g.dims()),
        guarded_(mode == GreedyMode::kFeasibilityGuarded &&
                 g.dims().admits_feasible_schedule()),
        user_used_(static_cast<std::size_t>(dims_.num_users()), false),
        bs_used_(static_cast<std::size_t>(dims_.num_bs()), false),
        free_users_(dims_.num_users()),
        empty_bs_(dims_.num_bs()) {}

  void Add(VertexId v) {
    const Association a = DecodeVertex(dims_, v);
    if (!user_used_[a.user]) {
      user_used_[a.user] = true;
      --free_users_;
    }
    if (!bs_used_[a.bs]) {
      bs_used_[a.bs] = true;
      --empty_bs_;
    }
  }

  // False when taking v would leave more user-less base-stations than
  // unused users.
  bool Admissible(VertexId v) const {
    if (!guarded_) return true;
    const Association a = DecodeVertex(dims_, v);
    return user_used_[a.user] || !bs_used_[a.bs] || free_users_ > empty_bs_;
  }

 private:
  Dimensions dims_;
  bool guarded_;
  std::vector<bool> user_used_;
  std::vector<bool> bs_used_;
  int free_users_;
  int empty_bs_;
};

// Heaviest admissible vertex of `cand`, lowest id on ties; -1 if none.
VertexId Heaviest(const SchedulingGraph& g, const VertexSet& cand,
                  const Coverage& coverage) {
  VertexId best = -1;
  cand.ForEach([&](int v) {
    if ((best < 0 || g.weight(v) > g.weight(best)) && coverage.Admissible(v)) {
      best = v;
    }
  });
  return best;
}

// Adds heaviest vertices from `cand` until none is admissible, shrinking it
// to the common neighborhood after each pick. Returns the number of picks.
std::int64_t GreedyExtend(const SchedulingGraph& g, VertexSet cand,
                          std::vector<VertexId>& clique, int limit,
                          Coverage& coverage) {
  std::int64_t steps = 0;
  while (static_cast<int>(clique.size()) < limit) {
    const VertexId v = Heaviest(g, cand, coverage);
    if (v < 0) break;
    clique.push_back(v);
    coverage.Add(v);
    cand &= g.neighbors(v);
    ++steps;
  }
  return steps;
}

SolveStatus HeuristicStatus(const SchedulingGraph& g,
                            const std::vector<VertexId>& clique) {
  return static_cast<int>(clique.size()) == g.dims().z_tot()
             ? SolveStatus::kFeasible
             : SolveStatus::kPartial;
}

}  // namespace

SolveResult HeuShd(const SchedulingGraph& g, GreedyMode mode) {
  const auto start = Clock::now();
  std::vector<VertexId> clique;
  Coverage coverage(g, mode);
  SolveStats stats;
  stats.nodes_explored = GreedyExtend(g, VertexSet::Full(g.num_vertices()),
                                      clique, g.num_vertices(), coverage);
  stats.elapsed = Clock::now() - start;
  const SolveStatus status = HeuristicStatus(g, clique);
  return MakeResult(g, std::move(clique), status, stats);
}

int PShdKeptCount(int num_vertices, double fraction_p) {
  if (!(fraction_p > 0.0 && fraction_p <= 1.0)) {
    throw std::invalid_argument("p must lie in (0, 1], got " +
                                std::to_string(fraction_p));
  }
  // The small slack keeps e.g. 0.3 * 80 from flooring to 23.
  return static_cast<int>(std::floor(fraction_p * num_vertices + 1e-9));
}

SolveResult PShd(const SchedulingGraph& g, const HeuristicParams& params) {
  const int n = g.num_vertices();
  const int keep = PShdKeptCount(n, params.fraction_p);
  if (keep == 0) {
    throw std::invalid_argument(
        "p = " + std::to_string(params.fraction_p) + " keeps no association of " +
        std::to_string(n));
  }
  const auto start = Clock::now();

  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
    return g.weight(x) > g.weight(y);
  });
  VertexSet kept(n);
  for (int i = 0; i < keep; ++i) kept.Set(order[i]);

  std::vector<VertexId> clique;
  Coverage coverage(g, params.mode);
  std::int64_t steps = 0;
  if (params.exact_on_pruned) {
    const SolveResult inner = SolveExactBlanking(
        g, kept, params.mode == GreedyMode::kFeasibilityGuarded);
    clique = inner.vertices;
    for (VertexId v : clique) coverage.Add(v);
    steps = inner.stats.nodes_explored;
  } else {
    steps = GreedyExtend(g, kept, clique, n, coverage);
  }

  // Completion from the removed vertices.
  VertexSet admissible = VertexSet::Full(n);
  admissible.Subtract(kept);
  for (VertexId v : clique) admissible &= g.neighbors(v);
  steps += GreedyExtend(g, admissible, clique, g.dims().z_tot(), coverage);

  SolveStats stats;
  stats.nodes_explored = steps;
  stats.elapsed = Clock::now() - start;
  const SolveStatus status = HeuristicStatus(g, clique);
  return MakeResult(g, std::move(clique), status, stats);
}

}  // namespace cran
