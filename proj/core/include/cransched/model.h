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

// Domain model for coordinated downlink scheduling in a cloud RAN.
//
// A network has U users, B base-stations and Z power-zones (PZs) per
// base-station frame. An association (u, b, z) serves user u on PZ z of
// base-station b. A schedule is a set of associations; it is feasible when
//   - each user is attached to at most one base-station (C1),
//   - each (b, z) power-zone serves at most one user (C2),
//   - every one of the B*Z power-zones is served (|schedule| == B*Z).
//
// All indices are zero-based in the API. The command-line tool prints
// one-based triples.

#ifndef CRANSCHED_MODEL_H_
#define CRANSCHED_MODEL_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cran {

class Dimensions {
 public:
  // Throws std::invalid_argument if any count is zero.
  Dimensions(int num_users, int num_bs, int num_pz);

  int num_users() const { return num_users_; }
  int num_bs() const { return num_bs_; }
  int num_pz() const { return num_pz_; }
  // Total number of power-zones in the network, B*Z.
  int z_tot() const { return num_bs_ * num_pz_; }
  // Number of (u, b, z) associations, U*B*Z.
  int num_associations() const { return num_users_ * num_bs_ * num_pz_; }

  // A full schedule exists iff every base-station can get its own user.
  bool admits_feasible_schedule() const { return num_users_ >= num_bs_; }

  bool contains(int u, int b, int z) const {
    return u >= 0 && u < num_users_ && b >= 0 && b < num_bs_ && z >= 0 &&
           z < num_pz_;
  }

  friend bool operator==(const Dimensions&, const Dimensions&) = default;

 private:
  int num_users_;
  int num_bs_;
  int num_pz_;
};

struct Association {
  int user = 0;
  int bs = 0;
  int pz = 0;

  friend auto operator<=>(const Association&, const Association&) = default;
};

std::string ToString(const Association& a);

// A duplicate-free set of associations kept in ascending (u, b, z) order.
// Feasibility is not enforced here; see ValidateSchedule.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<Association> entries);

  // Returns false if the association was already present.
  bool Insert(const Association& a);

  std::span<const Association> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Association> entries_;
};

// Per-association utility a[u][b][z]. Row-major with u outermost.
class BenefitTensor {
 public:
  // Zero-filled tensor.
  explicit BenefitTensor(Dimensions dims);
  // Throws std::invalid_argument on shape mismatch or non-finite values.
  BenefitTensor(Dimensions dims, std::vector<double> values);

  const Dimensions& dims() const { return dims_; }
  double at(int u, int b, int z) const { return values_[Offset(u, b, z)]; }
  void set(int u, int b, int z, double value);
  std::span<const double> values() const { return values_; }

 private:
  std::size_t Offset(int u, int b, int z) const {
    return (static_cast<std::size_t>(u) * dims_.num_bs() + b) *
               dims_.num_pz() +
           z;
  }

  Dimensions dims_;
  std::vector<double> values_;
};

// Physical description of one scheduling frame: per-PZ transmit powers,
// squared channel magnitudes, noise and the SINR gap. Immutable.
class Instance {
 public:
  // power_w is B x Z (b outermost); gain_sq is U x B x Z (u outermost).
  // Throws std::invalid_argument unless all powers, gains and the noise
  // are strictly positive and finite, sinr_gap >= 1 and shapes match dims.
  Instance(Dimensions dims, std::vector<double> power_w,
           std::vector<double> gain_sq, double noise_w,
           double sinr_gap = 1.0);

  const Dimensions& dims() const { return dims_; }
  double power(int b, int z) const {
    return power_w_[static_cast<std::size_t>(b) * dims_.num_pz() + z];
  }
  double gain_sq(int u, int b, int z) const {
    return gain_sq_[(static_cast<std::size_t>(u) * dims_.num_bs() + b) *
                        dims_.num_pz() +
                    z];
  }
  double noise_w() const { return noise_w_; }
  double sinr_gap() const { return sinr_gap_; }

  std::span<const double> power_values() const { return power_w_; }
  std::span<const double> gain_sq_values() const { return gain_sq_; }

 private:
  Dimensions dims_;
  std::vector<double> power_w_;
  std::vector<double> gain_sq_;
  double noise_w_;
  double sinr_gap_;
};

// SINR of user u on PZ z of base-station b. Interference comes from the
// same PZ index at every other base-station since frames are synchronized.
// Throws std::out_of_range on bad indices.
double Sinr(const Instance& inst, int u, int b, int z);

// a[u][b][z] = log2(1 + SINR) in bps/Hz.
BenefitTensor SumRateBenefits(const Instance& inst);

// Sum of benefits over the schedule, accumulated in schedule order.
double ScheduleUtility(const Schedule& s, const BenefitTensor& a);

enum class ViolationKind {
  kOutOfRange,   // association index outside dims
  kUserOnTwoBs,  // C1
  kPzShared,     // C2
  kCardinality,  // |S| != B*Z when a full schedule is required
};

std::string ToString(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // The offending pair for C1/C2, the entry for out-of-range, unset for
  // cardinality.
  Association first;
  Association second;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(ViolationKind kind) const;
};

// Reports every violated constraint. With require_full the schedule must
// also cover exactly B*Z power-zones.
ValidationReport ValidateSchedule(const Schedule& s, const Dimensions& dims,
                                  bool require_full);

}  // namespace cran

#endif  // CRANSCHED_MODEL_H_
