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

#include "cransched/clique_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace cran {

std::string ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kFeasible:
      return "feasible";
    case SolveStatus::kPartial:
      return "partial";
  }
  return "unknown";
}

SolveResult MakeResult(const SchedulingGraph& g, std::vector<VertexId> clique,
                       SolveStatus status, SolveStats stats) {
  std::sort(clique.begin(), clique.end());
  SolveResult result;
  result.schedule = g.ToSchedule(clique);
  result.vertices = std::move(clique);
  result.status = status;
  result.stats = stats;
  // Schedule entries are in (u,b,z) order, which is ascending vertex id.
  double total = 0.0;
  for (VertexId v : result.vertices) total += g.weight(v);
  result.weight = total;
  return result;
}

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first branch and bound over (b, z) power-zone blocks.
class BlockSearch {
 public:
  BlockSearch(const SchedulingGraph& g, const VertexSet& allowed,
              bool blanking, bool completable_only = false)
      : g_(g),
        blanking_(blanking),
        completable_only_(completable_only &&
                          g.dims().admits_feasible_schedule()),
        num_blocks_(g.dims().z_tot()),
        block_of_(static_cast<std::size_t>(g.num_vertices())),
        block_vertices_(static_cast<std::size_t>(num_blocks_)),
        open_(static_cast<std::size_t>(num_blocks_), true),
        block_max_(static_cast<std::size_t>(num_blocks_)),
        block_count_(static_cast<std::size_t>(num_blocks_)),
        user_uses_(static_cast<std::size_t>(g.dims().num_users()), 0),
        bs_uses_(static_cast<std::size_t>(g.dims().num_bs()), 0),
        free_users_(g.dims().num_users()),
        empty_bs_(g.dims().num_bs()) {
    const int n = g.num_vertices();
    const int num_pz = g.dims().num_pz();
    for (VertexId v = 0; v < n; ++v) {
      const Association a = DecodeVertex(g.dims(), v);
      block_of_[v] = a.bs * num_pz + a.pz;
    }
    // Static order: descending weight, ties by ascending id.
    order_ = allowed.ToVector();
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId x, VertexId y) {
      return g.weight(x) > g.weight(y);
    });
    for (VertexId v : order_) block_vertices_[block_of_[v]].push_back(v);

    cand_.assign(static_cast<std::size_t>(num_blocks_) + 1, VertexSet(n));
    cand_[0] = allowed;
    if (blanking_) {
      best_weight_ = 0.0;
      has_incumbent_ = true;
    }
  }

  SolveResult Run() {
    const auto start = Clock::now();
    Visit(0, 0.0);
    SolveStats stats;
    stats.nodes_explored = nodes_;
    stats.elapsed = Clock::now() - start;
    if (!has_incumbent_) {
      return MakeResult(g_, {}, SolveStatus::kInfeasible, stats);
    }
    return MakeResult(g_, best_, SolveStatus::kOptimal, stats);
  }

 private:
  void Visit(int level, double weight) {
    ++nodes_;
    if (blanking_ && weight > best_weight_ &&
        (!completable_only_ || free_users_ >= empty_bs_)) {
      best_weight_ = weight;
      best_ = clique_;
    }
    const VertexSet& cand = cand_[level];

    for (int blk = 0; blk < num_blocks_; ++blk) {
      block_max_[blk] = -std::numeric_limits<double>::infinity();
      block_count_[blk] = 0;
    }
    cand.ForEach([&](int v) {
      const int blk = block_of_[v];
      ++block_count_[blk];
      block_max_[blk] = std::max(block_max_[blk], g_.weight(v));
    });

    int branch_block = -1;
    int remaining = 0;
    double block_bound = 0.0;
    for (int blk = 0; blk < num_blocks_; ++blk) {
      if (!open_[blk]) continue;
      if (block_count_[blk] == 0) {
        if (!blanking_) return;  // this block can never be covered
        continue;
      }
      ++remaining;
      block_bound += blanking_ ? std::max(0.0, block_max_[blk])
                               : block_max_[blk];
      if (branch_block < 0 ||
          block_count_[blk] < block_count_[branch_block]) {
        branch_block = blk;
      }
    }

    if (branch_block < 0) {
      // Every block is decided.
      if (!blanking_ && (!has_incumbent_ || weight > best_weight_)) {
        best_weight_ = weight;
        best_ = clique_;
        has_incumbent_ = true;
      }
      return;
    }

    if (has_incumbent_) {
      double top = 0.0;
      int taken = 0;
      for (VertexId v : order_) {
        if (taken == remaining) break;
        if (!cand.Test(v)) continue;
        if (blanking_ && g_.weight(v) <= 0.0) break;
        top += g_.weight(v);
        ++taken;
      }
      const double bound = std::min(block_bound, top);
      if (weight + bound <= best_weight_) return;
    }

    open_[branch_block] = false;
    for (VertexId v : block_vertices_[branch_block]) {
      if (!cand.Test(v)) continue;
      cand_[level + 1] = cand;
      cand_[level + 1] &= g_.neighbors(v);
      Push(v);
      Visit(level + 1, weight + g_.weight(v));
      Pop();
    }
    if (blanking_) {
      // Leave this power-zone idle.
      cand_[level + 1] = cand;
      for (VertexId v : block_vertices_[branch_block]) cand_[level + 1].Reset(v);
      Visit(level + 1, weight);
    }
    open_[branch_block] = true;
  }

  void Push(VertexId v) {
    const Association a = DecodeVertex(g_.dims(), v);
    if (user_uses_[a.user]++ == 0) --free_users_;
    if (bs_uses_[a.bs]++ == 0) --empty_bs_;
    clique_.push_back(v);
  }

  void Pop() {
    const Association a = DecodeVertex(g_.dims(), clique_.back());
    if (--user_uses_[a.user] == 0) ++free_users_;
    if (--bs_uses_[a.bs] == 0) ++empty_bs_;
    clique_.pop_back();
  }

  const SchedulingGraph& g_;
  const bool blanking_;
  // Accept only cliques that can still grow into a full schedule.
  const bool completable_only_;
  const int num_blocks_;
  std::vector<int> block_of_;
  std::vector<std::vector<VertexId>> block_vertices_;
  std::vector<VertexId> order_;
  std::vector<bool> open_;
  std::vector<double> block_max_;
  std::vector<int> block_count_;
  std::vector<VertexSet> cand_;
  std::vector<int> user_uses_;
  std::vector<int> bs_uses_;
  int free_users_;
  int empty_bs_;

  std::vector<VertexId> clique_;
  std::vector<VertexId> best_;
  double best_weight_ = -std::numeric_limits<double>::infinity();
  bool has_incumbent_ = false;
  std::int64_t nodes_ = 0;
};

}  // namespace

SolveResult SolveExact(const SchedulingGraph& g) {
  if (!g.dims().admits_feasible_schedule()) {
    return MakeResult(g, {}, SolveStatus::kInfeasible, {});
  }
  return BlockSearch(g, VertexSet::Full(g.num_vertices()), false).Run();
}

SolveResult SolveExactBlanking(const SchedulingGraph& g) {
  return BlockSearch(g, VertexSet::Full(g.num_vertices()), true).Run();
}

SolveResult SolveExactBlanking(const SchedulingGraph& g,
                               const VertexSet& allowed,
                               bool completable_only) {
  if (allowed.size() != g.num_vertices()) {
    throw std::invalid_argument("allowed set does not match the graph");
  }
  return BlockSearch(g, allowed, true, completable_only).Run();
}

SolveResult BruteForceSchedule(const Dimensions& dims, const BenefitTensor& a) {
  if (!(a.dims() == dims)) {
    throw std::invalid_argument("benefit tensor dimensions do not match");
  }
  const int num_users = dims.num_users();
  const int num_bs = dims.num_bs();
  const int num_pz = dims.num_pz();
  const double per_bs = std::pow(static_cast<double>(num_users), num_pz);
  const double combos = std::pow(per_bs, num_bs);
  if (per_bs > 1e4 || combos > 1e8) {
    throw OracleSizeError("instance too large for brute force: U^Z = " +
                          std::to_string(per_bs) +
                          ", (U^Z)^B = " + std::to_string(combos));
  }
  const auto start = Clock::now();
  const int maps = static_cast<int>(per_bs);

  // maps_users[m][z]: user serving PZ z under map m (base-U digits).
  std::vector<std::vector<int>> map_users(static_cast<std::size_t>(maps),
                                          std::vector<int>(num_pz));
  std::vector<VertexSet> map_mask(static_cast<std::size_t>(maps),
                                  VertexSet(num_users));
  for (int m = 0; m < maps; ++m) {
    int rest = m;
    for (int z = 0; z < num_pz; ++z) {
      map_users[m][z] = rest % num_users;
      rest /= num_users;
      map_mask[m].Set(map_users[m][z]);
    }
  }
  std::vector<std::vector<double>> map_value(
      static_cast<std::size_t>(num_bs), std::vector<double>(maps, 0.0));
  for (int b = 0; b < num_bs; ++b) {
    for (int m = 0; m < maps; ++m) {
      for (int z = 0; z < num_pz; ++z) map_value[b][m] += a.at(map_users[m][z], b, z);
    }
  }

  // Odometer over the cross product of per-BS maps.
  std::vector<int> choice(static_cast<std::size_t>(num_bs), 0);
  std::vector<int> best_choice;
  double best = -std::numeric_limits<double>::infinity();
  std::int64_t feasible = 0;
  while (true) {
    bool disjoint = true;
    for (int b = 0; b < num_bs && disjoint; ++b) {
      for (int c = b + 1; c < num_bs; ++c) {
        if (map_mask[choice[b]].Intersects(map_mask[choice[c]])) {
          disjoint = false;
          break;
        }
      }
    }
    if (disjoint) {
      ++feasible;
      double value = 0.0;
      for (int b = 0; b < num_bs; ++b) value += map_value[b][choice[b]];
      if (value > best) {
        best = value;
        best_choice = choice;
      }
    }
    int b = 0;
    while (b < num_bs && ++choice[b] == maps) {
      choice[b] = 0;
      ++b;
    }
    if (b == num_bs) break;
  }

  SolveStats stats;
  stats.nodes_explored = feasible;
  stats.elapsed = Clock::now() - start;
  SolveResult result;
  result.stats = stats;
  if (best_choice.empty()) {
    result.status = SolveStatus::kInfeasible;
    return result;
  }
  std::vector<Association> entries;
  for (int b = 0; b < num_bs; ++b) {
    for (int z = 0; z < num_pz; ++z) {
      entries.push_back({map_users[best_choice[b]][z], b, z});
    }
  }
  result.schedule = Schedule(std::move(entries));
  for (const Association& e : result.schedule.entries()) {
    result.vertices.push_back(EncodeVertex(dims, e));
  }
  result.weight = ScheduleUtility(result.schedule, a);
  result.status = SolveStatus::kOptimal;
  return result;
}

namespace {

void ExtendCliques(const SchedulingGraph& g, int size,
                   std::vector<VertexId>& current, const VertexSet& cand,
                   std::vector<std::vector<VertexId>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  if (static_cast<int>(current.size()) + cand.Count() < size) return;
  cand.ForEach([&](int v) {
    VertexSet next = cand & g.neighbors(v);
    for (int w = 0; w <= v; ++w) next.Reset(w);
    current.push_back(v);
    ExtendCliques(g, size, current, next, out);
    current.pop_back();
  });
}

}  // namespace

std::vector<std::vector<VertexId>> EnumerateCliques(const SchedulingGraph& g,
                                                    int size) {
  if (g.num_vertices() > 36) {
    throw OracleSizeError("clique enumeration is limited to 36 vertices");
  }
  std::vector<std::vector<VertexId>> out;
  if (size < 0) return out;
  std::vector<VertexId> current;
  ExtendCliques(g, size, current, VertexSet::Full(g.num_vertices()), out);
  return out;
}

}  // namespace cran
