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

#include "cransched/sched_graph.h"

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"

namespace cran {
namespace {

SchedulingGraph Uniform(int u, int b, int z) {
  const Dimensions dims(u, b, z);
  return BuildGraph(
      dims, BenefitTensor(dims, std::vector<double>(dims.num_associations(), 1.0)));
}

// One-based "ubz" digits to a vertex of the 2x2x2 graph.
VertexId Id(int ubz) {
  return EncodeVertex(Dimensions(2, 2, 2),
                      {ubz / 100 - 1, ubz / 10 % 10 - 1, ubz % 10 - 1});
}

TEST(EncodingTest, Bijection) {
  for (const Dimensions dims :
       {Dimensions(1, 1, 1), Dimensions(3, 2, 4), Dimensions(5, 3, 2)}) {
    std::vector<bool> seen(dims.num_associations(), false);
    for (int u = 0; u < dims.num_users(); ++u) {
      for (int b = 0; b < dims.num_bs(); ++b) {
        for (int z = 0; z < dims.num_pz(); ++z) {
          const VertexId v = EncodeVertex(dims, {u, b, z});
          ASSERT_GE(v, 0);
          ASSERT_LT(v, dims.num_associations());
          EXPECT_FALSE(seen[v]);
          seen[v] = true;
          EXPECT_EQ(DecodeVertex(dims, v), (Association{u, b, z}));
        }
      }
    }
  }
}

TEST(BuildGraphTest, TwoByTwoByTwoCounts) {
  const SchedulingGraph g = Uniform(2, 2, 2);
  EXPECT_EQ(g.num_vertices(), 8);
  EXPECT_EQ(g.num_edges(), 16);
  for (VertexId v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 4);
}

TEST(BuildGraphTest, SmallCases) {
  const SchedulingGraph one = Uniform(1, 1, 1);
  EXPECT_EQ(one.num_vertices(), 1);
  EXPECT_EQ(one.num_edges(), 0);
  const SchedulingGraph g = Uniform(2, 1, 2);
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 4);
}

TEST(BuildGraphTest, DimensionMismatch) {
  EXPECT_THROW(BuildGraph(Dimensions(2, 2, 2), BenefitTensor(Dimensions(2, 2, 1))),
               std::invalid_argument);
}

TEST(BuildGraphTest, AdjacencyMatchesPairPredicate) {
  for (const auto [u, b, z] : {std::tuple{2, 2, 2}, std::tuple{3, 2, 3},
                               std::tuple{4, 3, 2}, std::tuple{1, 3, 2}}) {
    const SchedulingGraph g = Uniform(u, b, z);
    const oracle::Problem p{u, b, z, {}};
    int edges = 0;
    for (VertexId x = 0; x < g.num_vertices(); ++x) {
      for (VertexId y = x + 1; y < g.num_vertices(); ++y) {
        const bool expected = !oracle::PairConflicts(p.triple(x), p.triple(y));
        EXPECT_EQ(g.Adjacent(x, y), expected);
        EXPECT_EQ(g.Adjacent(y, x), expected);
        edges += expected;
      }
      EXPECT_EQ(g.degree(x), ExpectedDegree(g.dims()));
    }
    EXPECT_EQ(g.num_edges(), edges);
  }
}

TEST(AdjacentTest, Examples) {
  const SchedulingGraph g = Uniform(2, 2, 2);
  EXPECT_TRUE(g.Adjacent(Id(111), Id(112)));
  EXPECT_FALSE(g.Adjacent(Id(111), Id(122)));
  EXPECT_FALSE(g.Adjacent(Id(111), Id(211)));
  EXPECT_THROW(g.Adjacent(3, 3), std::invalid_argument);
  EXPECT_THROW(g.Adjacent(0, 8), std::out_of_range);
}

TEST(CliqueCheckTest, Examples) {
  const SchedulingGraph g = Uniform(2, 2, 2);
  const std::vector<VertexId> two_users = {Id(111), Id(112), Id(221), Id(222)};
  EXPECT_TRUE(CliqueIsFeasibleSchedule(g, two_users));
  const std::vector<VertexId> short_one = {Id(111), Id(112), Id(221)};
  EXPECT_TRUE(g.IsClique(short_one));
  EXPECT_FALSE(CliqueIsFeasibleSchedule(g, short_one));
  const std::vector<VertexId> broken = {Id(111), Id(121), Id(212), Id(222)};
  EXPECT_FALSE(CliqueIsFeasibleSchedule(g, broken));
}

TEST(CliqueCheckTest, ScheduleRoundTrip) {
  const SchedulingGraph g = Uniform(3, 2, 2);
  const std::vector<VertexId> vs = {1, 4, 10};
  EXPECT_EQ(g.ToVertices(g.ToSchedule(vs)), vs);
}

TEST(DimacsTest, HeaderAndCounts) {
  const SchedulingGraph g = Uniform(2, 2, 2);
  std::ostringstream out;
  WriteDimacs(g, out);
  std::istringstream in(out.str());
  std::string line;
  int nodes = 0, edges = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("p edge 8 16", 0) == 0) header = true;
    if (line.rfind("n ", 0) == 0) ++nodes;
    if (line.rfind("e ", 0) == 0) ++edges;
  }
  EXPECT_TRUE(header);
  EXPECT_EQ(nodes, 8);
  EXPECT_EQ(edges, 16);
}

}  // namespace
}  // namespace cran
