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

#ifndef CRANSCHED_HEURISTICS_H_
#define CRANSCHED_HEURISTICS_H_

#include "cransched/clique_solver.h"
#include "cransched/sched_graph.h"

namespace cran {

enum class GreedyMode {
  // Also drops vertices after which the clique could no longer reach B*Z
  // vertices (more base-stations without a user than unused users left).
  kFeasibilityGuarded,
  // Only the common-neighborhood restriction.
  kLiteral,
};

struct HeuristicParams {
  // Fraction of associations kept by PShd, in (0, 1].
  double fraction_p = 1.0;
  // Run the exact (any-size) clique search on the pruned graph instead of
  // the greedy. In guarded mode that search only accepts cliques that can
  // still be completed.
  bool exact_on_pruned = false;
  GreedyMode mode = GreedyMode::kFeasibilityGuarded;
};

// Greedy HEU-SHD: repeatedly take the heaviest surviving vertex (lowest id
// on ties) and keep only its neighbors, until nothing survives.
//
// In kLiteral mode the result is a maximal clique that can miss
// power-zones even when U >= B: once every user is attached somewhere, a
// base-station left without a user cannot be served. The guarded mode
// never picks a vertex that leads there, so with U >= B it always returns
// B*Z vertices. With U < B both modes behave the same. Status is kFeasible
// for B*Z vertices and kPartial otherwise.
SolveResult HeuShd(const SchedulingGraph& g,
                   GreedyMode mode = GreedyMode::kFeasibilityGuarded);

// p-SHD: keep the floor(p * U*B*Z) heaviest vertices (ties by ascending
// id), run the greedy on that induced subgraph, then complete the clique
// from the removed vertices by repeatedly adding the heaviest one adjacent
// to every current member, until B*Z vertices are held or none qualifies.
// Both phases honor params.mode.
// Throws std::invalid_argument if p is outside (0, 1] or keeps no vertex.
SolveResult PShd(const SchedulingGraph& g, const HeuristicParams& params);

// Number of vertices PShd keeps for fraction p.
int PShdKeptCount(int num_vertices, double fraction_p);

}  // namespace cran

#endif  // CRANSCHED_HEURISTICS_H_
