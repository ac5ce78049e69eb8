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

// Scheduler runtimes on simulated networks.

#include <vector>

#include "benchmark/benchmark.h"
#include "cransched/channel_sim.h"
#include "cransched/clique_solver.h"
#include "cransched/heuristics.h"
#include "cransched/sched_graph.h"

namespace cran {
namespace {

std::vector<SchedulingGraph> Graphs(int u, int b, int z, int count) {
  std::vector<SchedulingGraph> graphs;
  const Dimensions dims(u, b, z);
  SimParams params;
  if (b != 1 && b != 3 && b != 4 && b != 7 && b != 9 && b != 21) {
    params.allow_any_bs = true;
  }
  for (int s = 1; s <= count; ++s) {
    params.seed = static_cast<std::uint64_t>(s);
    graphs.push_back(BuildGraph(dims, SumRateBenefits(GenerateInstance(dims, params))));
  }
  return graphs;
}

template <typename Solve>
void RunOver(benchmark::State& state, Solve solve) {
  const auto graphs = Graphs(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(1)),
                             static_cast<int>(state.range(2)), 16);
  std::size_t i = 0;
  std::int64_t nodes = 0;
  for (auto _ : state) {
    const SolveResult r = solve(graphs[i++ % graphs.size()]);
    nodes += r.stats.nodes_explored;
    benchmark::DoNotOptimize(r.weight);
  }
  state.counters["nodes"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kAvgIterations);
}

void BM_SolveExact(benchmark::State& state) {
  RunOver(state, [](const SchedulingGraph& g) { return SolveExact(g); });
}

void BM_SolveExactBlanking(benchmark::State& state) {
  RunOver(state, [](const SchedulingGraph& g) { return SolveExactBlanking(g); });
}

void BM_HeuShd(benchmark::State& state) {
  RunOver(state, [](const SchedulingGraph& g) { return HeuShd(g); });
}

void BM_PShd30(benchmark::State& state) {
  RunOver(state, [](const SchedulingGraph& g) { return PShd(g, HeuristicParams{0.3}); });
}

void BM_BuildGraph(benchmark::State& state) {
  const Dimensions dims(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                        static_cast<int>(state.range(2)));
  const BenefitTensor a = SumRateBenefits(GenerateInstance(dims, SimParams()));
  for (auto _ : state) {
    const SchedulingGraph g = BuildGraph(dims, a);
    benchmark::DoNotOptimize(g.num_vertices());
  }
}

void SmallShapes(benchmark::internal::Benchmark* b) {
  b->Args({4, 3, 4})->Args({10, 3, 4})->Args({5, 4, 4})->Args({16, 9, 2});
}

void LargeShapes(benchmark::internal::Benchmark* b) {
  SmallShapes(b);
  b->Args({40, 21, 5});
}

BENCHMARK(BM_SolveExact)->Apply(SmallShapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SolveExactBlanking)->Apply(SmallShapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HeuShd)->Apply(LargeShapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PShd30)->Apply(LargeShapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BuildGraph)->Apply(LargeShapes)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace cran

BENCHMARK_MAIN();
