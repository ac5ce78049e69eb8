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

#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace cran {

SchedulingGraph BuildGraph(const Dimensions& dims, const BenefitTensor& a) {
  if (!(a.dims() == dims)) {
    throw std::invalid_argument("benefit tensor dimensions do not match graph");
  }
  const int n = dims.num_associations();
  const int num_pz = dims.num_pz();
  SchedulingGraph g(dims);
  g.weights_.assign(a.values().begin(), a.values().end());

  g.blocks_.assign(static_cast<std::size_t>(dims.z_tot()), VertexSet(n));
  std::vector<VertexSet> user_rows(static_cast<std::size_t>(dims.num_users()),
                                   VertexSet(n));
  for (VertexId v = 0; v < n; ++v) {
    const Association s = DecodeVertex(dims, v);
    g.blocks_[static_cast<std::size_t>(s.bs) * num_pz + s.pz].Set(v);
    user_rows[s.user].Set(v);
  }

  // N(v) = all \ {v} \ block(b,z) \ (user u's vertices at other BSs).
  const VertexSet all = VertexSet::Full(n);
  g.rows_.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    const Association s = DecodeVertex(dims, v);
    VertexSet row = all;
    row.Subtract(g.blocks_[static_cast<std::size_t>(s.bs) * num_pz + s.pz]);
    VertexSet other_bs = user_rows[s.user];
    for (int z = 0; z < num_pz; ++z) {
      other_bs.Reset(EncodeVertex(dims, {s.user, s.bs, z}));
    }
    row.Subtract(other_bs);
    row.Reset(v);
    g.rows_.push_back(std::move(row));
  }
  return g;
}

int ExpectedDegree(const Dimensions& dims) {
  return dims.num_associations() - 1 - (dims.num_users() - 1) -
         (dims.num_bs() - 1) * dims.num_pz();
}

int SchedulingGraph::num_edges() const {
  long long twice = 0;
  for (const VertexSet& row : rows_) twice += row.Count();
  return static_cast<int>(twice / 2);
}

bool SchedulingGraph::Adjacent(VertexId v1, VertexId v2) const {
  if (v1 < 0 || v2 < 0 || v1 >= num_vertices() || v2 >= num_vertices()) {
    throw std::out_of_range("vertex id out of range");
  }
  if (v1 == v2) {
    throw std::invalid_argument("adjacency is undefined for a vertex and itself");
  }
  return rows_[v1].Test(v2);
}

bool SchedulingGraph::IsClique(std::span<const VertexId> vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= num_vertices()) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || !rows_[vs[i]].Test(vs[j])) return false;
    }
  }
  return true;
}

bool SchedulingGraph::IsFeasibleScheduleClique(
    std::span<const VertexId> vs) const {
  return vs.size() == static_cast<std::size_t>(dims_.z_tot()) && IsClique(vs);
}

bool CliqueIsFeasibleSchedule(const SchedulingGraph& g,
                              std::span<const VertexId> vs) {
  return g.IsFeasibleScheduleClique(vs);
}

Schedule SchedulingGraph::ToSchedule(std::span<const VertexId> vs) const {
  std::vector<Association> entries;
  entries.reserve(vs.size());
  for (VertexId v : vs) entries.push_back(DecodeVertex(dims_, v));
  return Schedule(std::move(entries));
}

std::vector<VertexId> SchedulingGraph::ToVertices(const Schedule& s) const {
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (const Association& a : s.entries()) {
    if (!dims_.contains(a.user, a.bs, a.pz)) {
      throw std::out_of_range("association outside graph dimensions");
    }
    out.push_back(EncodeVertex(dims_, a));
  }
  return out;
}

void WriteDimacs(const SchedulingGraph& g, std::ostream& out) {
  const Dimensions& dims = g.dims();
  out << "c scheduling graph U=" << dims.num_users() << " B=" << dims.num_bs()
      << " Z=" << dims.num_pz() << "\n";
  out << "c vertex id = (u*B + b)*Z + z + 1, indices zero-based\n";
  out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  out << std::setprecision(17);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "n " << v + 1 << " " << g.weight(v) << "\n";
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    g.neighbors(v).ForEach([&](int w) {
      if (w > v) out << "e " << v + 1 << " " << w + 1 << "\n";
    });
  }
}

}  // namespace cran
