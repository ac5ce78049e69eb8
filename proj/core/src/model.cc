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

#include "cransched/model.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cran {

Dimensions::Dimensions(int num_users, int num_bs, int num_pz)
    : num_users_(num_users), num_bs_(num_bs), num_pz_(num_pz) {
  if (num_users < 1 || num_bs < 1 || num_pz < 1) {
    std::ostringstream msg;
    msg << "dimensions must be positive, got U=" << num_users
        << " B=" << num_bs << " Z=" << num_pz;
    throw std::invalid_argument(msg.str());
  }
}

std::string ToString(const Association& a) {
  std::ostringstream out;
  out << "(" << a.user << "," << a.bs << "," << a.pz << ")";
  return out.str();
}

Schedule::Schedule(std::vector<Association> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()),
                 entries_.end());
}

bool Schedule::Insert(const Association& a) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), a);
  if (it != entries_.end() && *it == a) return false;
  entries_.insert(it, a);
  return true;
}

BenefitTensor::BenefitTensor(Dimensions dims)
    : dims_(dims),
      values_(static_cast<std::size_t>(dims.num_associations()), 0.0) {}

BenefitTensor::BenefitTensor(Dimensions dims, std::vector<double> values)
    : dims_(dims), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(dims_.num_associations())) {
    throw std::invalid_argument("benefit tensor size does not match U*B*Z");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("benefit tensor has a non-finite value");
    }
  }
}

void BenefitTensor::set(int u, int b, int z, double value) {
  if (!dims_.contains(u, b, z)) {
    throw std::out_of_range("benefit index out of range");
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument("benefit must be finite");
  }
  values_[Offset(u, b, z)] = value;
}

namespace {

void RequirePositive(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) +
                                  " must be positive and finite");
    }
  }
}

}  // namespace

Instance::Instance(Dimensions dims, std::vector<double> power_w,
                   std::vector<double> gain_sq, double noise_w,
                   double sinr_gap)
    : dims_(dims),
      power_w_(std::move(power_w)),
      gain_sq_(std::move(gain_sq)),
      noise_w_(noise_w),
      sinr_gap_(sinr_gap) {
  if (power_w_.size() != static_cast<std::size_t>(dims_.z_tot())) {
    throw std::invalid_argument("power array must be B x Z");
  }
  if (gain_sq_.size() != static_cast<std::size_t>(dims_.num_associations())) {
    throw std::invalid_argument("gain_sq array must be U x B x Z");
  }
  RequirePositive(power_w_, "power");
  RequirePositive(gain_sq_, "gain_sq");
  RequirePositive(std::span<const double>(&noise_w_, 1), "noise");
  if (!(sinr_gap_ >= 1.0) || !std::isfinite(sinr_gap_)) {
    throw std::invalid_argument("sinr gap must be >= 1");
  }
}

double Sinr(const Instance& inst, int u, int b, int z) {
  const Dimensions& dims = inst.dims();
  if (!dims.contains(u, b, z)) {
    throw std::out_of_range("sinr index out of range: " +
                            ToString(Association{u, b, z}));
  }
  double interference = 0.0;
  for (int other = 0; other < dims.num_bs(); ++other) {
    if (other == b) continue;
    interference += inst.power(other, z) * inst.gain_sq(u, other, z);
  }
  const double signal = inst.power(b, z) * inst.gain_sq(u, b, z);
  return signal / (inst.sinr_gap() * (inst.noise_w() + interference));
}

BenefitTensor SumRateBenefits(const Instance& inst) {
  const Dimensions& dims = inst.dims();
  BenefitTensor a(dims);
  for (int u = 0; u < dims.num_users(); ++u) {
    for (int b = 0; b < dims.num_bs(); ++b) {
      for (int z = 0; z < dims.num_pz(); ++z) {
        // log1p keeps tiny SINRs strictly positive.
        a.set(u, b, z, std::log1p(Sinr(inst, u, b, z)) / std::log(2.0));
      }
    }
  }
  return a;
}

double ScheduleUtility(const Schedule& s, const BenefitTensor& a) {
  double total = 0.0;
  for (const Association& e : s.entries()) {
    total += a.at(e.user, e.bs, e.pz);
  }
  return total;
}

std::string ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOutOfRange:
      return "out-of-range";
    case ViolationKind::kUserOnTwoBs:
      return "C1";
    case ViolationKind::kPzShared:
      return "C2";
    case ViolationKind::kCardinality:
      return "cardinality";
  }
  return "unknown";
}

bool ValidationReport::Has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

ValidationReport ValidateSchedule(const Schedule& s, const Dimensions& dims,
                                  bool require_full) {
  ValidationReport report;
  const auto entries = s.entries();
  for (const Association& e : entries) {
    if (!dims.contains(e.user, e.bs, e.pz)) {
      report.violations.push_back({ViolationKind::kOutOfRange, e, e,
                                   "association " + ToString(e) +
                                       " is outside the network dimensions"});
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const Association& x = entries[i];
      const Association& y = entries[j];
      if (x.user == y.user && x.bs != y.bs) {
        report.violations.push_back(
            {ViolationKind::kUserOnTwoBs, x, y,
             "user " + std::to_string(x.user) + " is served by BS " +
                 std::to_string(x.bs) + " and BS " + std::to_string(y.bs)});
      }
      if (x.bs == y.bs && x.pz == y.pz) {
        report.violations.push_back(
            {ViolationKind::kPzShared, x, y,
             "PZ (" + std::to_string(x.bs) + "," + std::to_string(x.pz) +
                 ") is assigned to users " + std::to_string(x.user) +
                 " and " + std::to_string(y.user)});
      }
    }
  }
  if (require_full && entries.size() != static_cast<std::size_t>(dims.z_tot())) {
    report.violations.push_back(
        {ViolationKind::kCardinality, {}, {},
         "schedule has " + std::to_string(entries.size()) +
             " entries, a full schedule needs " +
             std::to_string(dims.z_tot())});
  }
  return report;
}

}  // namespace cran
