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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"

namespace cran {
namespace {

Instance TwoBsInstance(double gap) {
  // User 0 served by BS 0 with |h|^2 = 1, interferer BS 1 at 0.5.
  const Dimensions dims(1, 2, 1);
  return Instance(dims, {1.0, 1.0}, {1.0, 0.5}, 0.1, gap);
}

TEST(DimensionsTest, RejectsZeroCounts) {
  EXPECT_THROW(Dimensions(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(Dimensions(1, 0, 1), std::invalid_argument);
  EXPECT_THROW(Dimensions(1, 1, 0), std::invalid_argument);
  const Dimensions d(5, 3, 4);
  EXPECT_EQ(d.z_tot(), 12);
  EXPECT_EQ(d.num_associations(), 60);
}

TEST(SinrTest, NoInterferer) {
  const Instance inst(Dimensions(1, 1, 1), {1.0}, {1.0}, 1.0);
  EXPECT_DOUBLE_EQ(Sinr(inst, 0, 0, 0), 1.0);
}

TEST(SinrTest, OneInterferer) {
  EXPECT_NEAR(Sinr(TwoBsInstance(1.0), 0, 0, 0), 1.0 / 0.6, 1e-12);
  EXPECT_NEAR(Sinr(TwoBsInstance(1.0), 0, 0, 0), 1.6667, 5e-5);
}

TEST(SinrTest, GapIsADivisor) {
  EXPECT_DOUBLE_EQ(Sinr(TwoBsInstance(2.0), 0, 0, 0),
                   0.5 * Sinr(TwoBsInstance(1.0), 0, 0, 0));
}

TEST(SinrTest, OutOfRange) {
  const Instance inst = TwoBsInstance(1.0);
  EXPECT_THROW(Sinr(inst, 1, 0, 0), std::out_of_range);
  EXPECT_THROW(Sinr(inst, 0, 2, 0), std::out_of_range);
  EXPECT_THROW(Sinr(inst, 0, 0, -1), std::out_of_range);
}

TEST(SinrTest, MonotoneInServingGainAndInterference) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.1, 2.0);
  for (int t = 0; t < 100; ++t) {
    const double g0 = dist(rng), g1 = dist(rng), noise = dist(rng);
    const Dimensions dims(1, 2, 1);
    const double base = Sinr(Instance(dims, {1, 1}, {g0, g1}, noise), 0, 0, 0);
    EXPECT_GT(Sinr(Instance(dims, {1, 1}, {g0 * 1.5, g1}, noise), 0, 0, 0), base);
    EXPECT_LT(Sinr(Instance(dims, {1, 1}, {g0, g1 * 1.5}, noise), 0, 0, 0), base);
  }
}

TEST(InstanceTest, RejectsBadInputs) {
  const Dimensions dims(1, 1, 1);
  EXPECT_THROW(Instance(dims, {0.0}, {1.0}, 1.0), std::invalid_argument);
  EXPECT_THROW(Instance(dims, {1.0}, {-1.0}, 1.0), std::invalid_argument);
  EXPECT_THROW(Instance(dims, {1.0}, {1.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(Instance(dims, {1.0}, {1.0}, 1.0, 0.5), std::invalid_argument);
  EXPECT_THROW(Instance(dims, {1.0, 1.0}, {1.0}, 1.0), std::invalid_argument);
  EXPECT_THROW(Instance(dims, {1.0}, {NAN}, 1.0), std::invalid_argument);
}

TEST(SumRateTest, KnownValues) {
  const BenefitTensor unit =
      SumRateBenefits(Instance(Dimensions(1, 1, 1), {1.0}, {1.0}, 1.0));
  EXPECT_DOUBLE_EQ(unit.at(0, 0, 0), 1.0);

  const BenefitTensor a = SumRateBenefits(TwoBsInstance(1.0));
  EXPECT_NEAR(a.at(0, 0, 0), std::log2(1.0 + 1.0 / 0.6), 1e-12);
  EXPECT_NEAR(a.at(0, 0, 0), 1.4150, 5e-5);

  const BenefitTensor tiny =
      SumRateBenefits(Instance(Dimensions(1, 1, 1), {1.0}, {1e-300}, 1.0));
  EXPECT_GE(tiny.at(0, 0, 0), 0.0);
  EXPECT_LT(tiny.at(0, 0, 0), 1e-200);
}

TEST(UtilityTest, EmptySingleAndUniform) {
  BenefitTensor a(Dimensions(2, 2, 2), std::vector<double>(8, 1.0));
  EXPECT_EQ(ScheduleUtility(Schedule(), a), 0.0);
  a.set(1, 0, 1, 3.5);
  EXPECT_EQ(ScheduleUtility(Schedule({{1, 0, 1}}), a), 3.5);
  a.set(1, 0, 1, 1.0);
  const Schedule square({{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}});
  EXPECT_EQ(ScheduleUtility(square, a), 4.0);
}

TEST(UtilityTest, AdditiveOverDisjointUnion) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  const Dimensions dims(3, 2, 2);
  std::vector<double> w(12);
  for (double& x : w) x = dist(rng);
  const BenefitTensor a(dims, w);
  for (int t = 0; t < 50; ++t) {
    Schedule left, right, both;
    for (int id = 0; id < 12; ++id) {
      const Association e{id / 4, (id / 2) % 2, id % 2};
      const int side = static_cast<int>(rng() % 3);
      if (side == 0) continue;
      (side == 1 ? left : right).Insert(e);
      both.Insert(e);
    }
    EXPECT_NEAR(ScheduleUtility(both, a),
                ScheduleUtility(left, a) + ScheduleUtility(right, a), 1e-12);
  }
}

TEST(ScheduleTest, SortedAndDuplicateFree) {
  Schedule s;
  EXPECT_TRUE(s.Insert({1, 0, 0}));
  EXPECT_TRUE(s.Insert({0, 1, 0}));
  EXPECT_FALSE(s.Insert({1, 0, 0}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.entries()[0], (Association{0, 1, 0}));
}

TEST(ValidateTest, TwoUsersTwoBsClique) {
  const Schedule s({{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}});
  EXPECT_TRUE(ValidateSchedule(s, Dimensions(2, 2, 2), true).ok());
}

TEST(ValidateTest, UserOnTwoBs) {
  const Schedule s({{0, 0, 0}, {0, 1, 0}});
  const ValidationReport r = ValidateSchedule(s, Dimensions(2, 2, 2), false);
  EXPECT_TRUE(r.Has(ViolationKind::kUserOnTwoBs));
  EXPECT_FALSE(r.Has(ViolationKind::kPzShared));
}

TEST(ValidateTest, PzShared) {
  const Schedule s({{0, 0, 0}, {1, 0, 0}});
  const ValidationReport r = ValidateSchedule(s, Dimensions(2, 2, 2), false);
  EXPECT_TRUE(r.Has(ViolationKind::kPzShared));
  EXPECT_FALSE(r.Has(ViolationKind::kUserOnTwoBs));
}

TEST(ValidateTest, CardinalityAndRange) {
  const Dimensions dims(2, 2, 2);
  const Schedule partial({{0, 0, 0}});
  EXPECT_TRUE(ValidateSchedule(partial, dims, false).ok());
  EXPECT_TRUE(
      ValidateSchedule(partial, dims, true).Has(ViolationKind::kCardinality));
  EXPECT_TRUE(ValidateSchedule(Schedule({{2, 0, 0}}), dims, false)
                  .Has(ViolationKind::kOutOfRange));
}

TEST(ValidateTest, AgreesWithPairwiseDefinition) {
  std::mt19937_64 rng(3);
  const Dimensions dims(3, 2, 2);
  for (int t = 0; t < 2000; ++t) {
    Schedule s;
    std::vector<oracle::Triple> raw;
    for (int id = 0; id < 12; ++id) {
      if (rng() % 3 != 0) continue;
      const Association e{id / 4, (id / 2) % 2, id % 2};
      s.Insert(e);
      raw.emplace_back(e.user, e.bs, e.pz);
    }
    for (bool full : {false, true}) {
      EXPECT_EQ(ValidateSchedule(s, dims, full).ok(),
                oracle::IsValid(raw, 2, 2, full));
    }
  }
}

}  // namespace
}  // namespace cran
