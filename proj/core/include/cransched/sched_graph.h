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

// The scheduling graph has one vertex per (u, b, z) association. Two
// distinct vertices are adjacent iff they can coexist in a schedule:
//   - same user implies same base-station, and
//   - they occupy different (b, z) power-zones.
// Cliques of size B*Z are exactly the feasible schedules, and the weight
// of a vertex is the benefit of its association.

#ifndef CRANSCHED_SCHED_GRAPH_H_
#define CRANSCHED_SCHED_GRAPH_H_

#include <iosfwd>
#include <span>
#include <vector>

#include "cransched/bitset.h"
#include "cransched/model.h"

namespace cran {

// Vertex ids are u-major: id = (u*B + b)*Z + z.
using VertexId = int;

inline VertexId EncodeVertex(const Dimensions& dims, const Association& a) {
  return (a.user * dims.num_bs() + a.bs) * dims.num_pz() + a.pz;
}

inline Association DecodeVertex(const Dimensions& dims, VertexId v) {
  const int z = v % dims.num_pz();
  const int ub = v / dims.num_pz();
  return {ub / dims.num_bs(), ub % dims.num_bs(), z};
}

class SchedulingGraph {
 public:
  int num_vertices() const { return static_cast<int>(weights_.size()); }
  const Dimensions& dims() const { return dims_; }

  double weight(VertexId v) const { return weights_[v]; }
  std::span<const double> weights() const { return weights_; }

  const VertexSet& neighbors(VertexId v) const { return rows_[v]; }
  int degree(VertexId v) const { return rows_[v].Count(); }
  int num_edges() const;

  // Throws std::invalid_argument when v1 == v2 and std::out_of_range on
  // ids outside the graph.
  bool Adjacent(VertexId v1, VertexId v2) const;

  // All vertices occupying power-zone z of base-station b.
  const VertexSet& pz_block(int b, int z) const {
    return blocks_[static_cast<std::size_t>(b) * dims_.num_pz() + z];
  }

  bool IsClique(std::span<const VertexId> vs) const;
  // Pairwise adjacent and of size B*Z.
  bool IsFeasibleScheduleClique(std::span<const VertexId> vs) const;

  Schedule ToSchedule(std::span<const VertexId> vs) const;
  std::vector<VertexId> ToVertices(const Schedule& s) const;

 private:
  friend SchedulingGraph BuildGraph(const Dimensions&, const BenefitTensor&);
  explicit SchedulingGraph(Dimensions dims) : dims_(dims) {}

  Dimensions dims_;
  std::vector<VertexSet> rows_;
  std::vector<VertexSet> blocks_;
  std::vector<double> weights_;
};

// Throws std::invalid_argument if a.dims() != dims.
SchedulingGraph BuildGraph(const Dimensions& dims, const BenefitTensor& a);

// Number of neighbors every vertex has: U*B*Z - 1 - (U-1) - (B-1)*Z.
int ExpectedDegree(const Dimensions& dims);

bool CliqueIsFeasibleSchedule(const SchedulingGraph& g,
                              std::span<const VertexId> vs);

// Debug dump in DIMACS style with one-based vertex ids:
//   c <comment>
//   p edge <num_vertices> <num_edges>
//   n <vertex> <weight>      (one line per vertex)
//   e <v1> <v2>              (one line per edge, v1 < v2)
void WriteDimacs(const SchedulingGraph& g, std::ostream& out);

}  // namespace cran

#endif  // CRANSCHED_SCHED_GRAPH_H_
