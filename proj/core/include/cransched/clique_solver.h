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

// Exact schedulers.
//
// SolveExact finds a maximum-weight clique of size exactly B*Z in the
// scheduling graph (OPT-SHD). Every such clique holds exactly one vertex
// from each (b, z) power-zone block, so the search branches on blocks:
// at each node it picks the open block with the fewest live candidates and
// tries its vertices in descending weight order (ties by ascending id).
// A node is pruned when
//   - some open block has no live candidate (cardinality prune), or
//   - weight + bound <= incumbent, where bound is the smaller of
//       * the sum of the (B*Z - depth) heaviest live candidates, and
//       * the sum over open blocks of the heaviest live candidate in it.
//
// SolveExactBlanking drops the cardinality requirement (power-zones may
// stay idle). It uses the same block branching plus an "idle" branch per
// block; the empty clique with weight 0 is a legal answer.
//
// BruteForceSchedule enumerates schedules directly, without the graph,
// and serves as the reference oracle.

#ifndef CRANSCHED_CLIQUE_SOLVER_H_
#define CRANSCHED_CLIQUE_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cransched/bitset.h"
#include "cransched/model.h"
#include "cransched/sched_graph.h"

namespace cran {

enum class SolveStatus {
  kOptimal,
  // No clique of the requested kind exists (U < B for full schedules).
  kInfeasible,
  // Heuristic output covering all B*Z power-zones.
  kFeasible,
  // Heuristic output that does not cover all B*Z power-zones.
  kPartial,
};

std::string ToString(SolveStatus status);

struct SolveStats {
  std::int64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  Schedule schedule;
  // Same clique as vertex ids, ascending.
  std::vector<VertexId> vertices;
  // ScheduleUtility of `schedule` under the graph weights.
  double weight = 0.0;
  SolveStatus status = SolveStatus::kInfeasible;
  SolveStats stats;
};

// Builds a result from a vertex set, recomputing the weight in canonical
// (ascending vertex id) order.
SolveResult MakeResult(const SchedulingGraph& g, std::vector<VertexId> clique,
                       SolveStatus status, SolveStats stats);

SolveResult SolveExact(const SchedulingGraph& g);

// Maximum-weight clique of any size. When `allowed` is given, the search
// runs on the subgraph induced by it. With completable_only (and U >= B)
// only cliques that leave at least as many unused users as base-stations
// without a user are accepted, i.e. cliques that extend to a full schedule.
SolveResult SolveExactBlanking(const SchedulingGraph& g);
SolveResult SolveExactBlanking(const SchedulingGraph& g,
                               const VertexSet& allowed,
                               bool completable_only = false);

class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Exhaustive search over per-BS maps PZ -> user, keeping combinations whose
// per-BS user sets are disjoint. Refuses instances with U^Z > 1e4 or
// (U^Z)^B > 1e8 by throwing OracleSizeError.
SolveResult BruteForceSchedule(const Dimensions& dims, const BenefitTensor& a);

// Every clique of exactly `size` vertices, each sorted ascending, in
// lexicographic order. Plain vertex-order recursion with no use of the
// block structure. Limited to graphs of at most 36 vertices.
std::vector<std::vector<VertexId>> EnumerateCliques(const SchedulingGraph& g,
                                                    int size);

}  // namespace cran

#endif  // CRANSCHED_CLIQUE_SOLVER_H_
