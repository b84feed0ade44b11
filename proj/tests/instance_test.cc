// Copyright 2026 The Contract Menus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "contracts/instance.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "contracts/generators.h"

namespace contracts {
namespace {

Action MakeAction(Rational cost, std::vector<Rational> row) {
  return Action{std::move(cost), std::move(row)};
}

// Two types over outcomes (reward 1, reward 0); action 0 is null.
Instance TwoTypeInstance() {
  Instance inst;
  inst.rewards = {Rational(1), Rational(0)};
  inst.prior = {rat(1, 2), rat(1, 2)};
  inst.actions = {
      {MakeAction(0, {0, 1}), MakeAction(rat(1, 10), {rat(1, 2), rat(1, 2)})},
      {MakeAction(0, {0, 1}), MakeAction(rat(1, 5), {rat(3, 4), rat(1, 4)})},
  };
  return inst;
}

TEST(ValidateTest, ValidInstanceHasNoViolations) {
  EXPECT_TRUE(Validate(TwoTypeInstance()).empty());
  EXPECT_NO_THROW(ValidateOrThrow(TwoTypeInstance()));
}

TEST(ValidateTest, NamesRowSumViolation) {
  Instance inst = TwoTypeInstance();
  inst.actions[0][1].row = {rat(1, 2), rat(2, 5)};
  const std::vector<std::string> v = Validate(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], "type 0 action 1 row sums to 9/10");
  EXPECT_THROW(ValidateOrThrow(inst), std::invalid_argument);
}

TEST(ValidateTest, NamesMissingNullAction) {
  Instance inst = TwoTypeInstance();
  inst.actions[1].erase(inst.actions[1].begin());
  const std::vector<std::string> v = Validate(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("type 1"), std::string::npos);
  EXPECT_NE(v[0].find("null"), std::string::npos);
}

TEST(ValidateTest, ReportsOtherViolations) {
  Instance inst = TwoTypeInstance();
  inst.prior = {rat(1, 2), rat(1, 3)};
  inst.actions[0][1].cost = rat(-1, 10);
  inst.rewards[1] = Rational(-1);
  EXPECT_GE(Validate(inst).size(), 3u);
}

TEST(FromSlopesTest, TwoPieceSpec) {
  SlopeSpec spec;
  spec.types.push_back({{rat(1, 2)}, {rat(1, 2), Rational(1)}});
  const Instance inst = FromSlopes(spec);
  ASSERT_EQ(inst.num_actions(0), 3);
  EXPECT_EQ(inst.ExpectedReward(0, 0), 0);
  EXPECT_EQ(inst.actions[0][0].cost, 0);
  EXPECT_EQ(inst.ExpectedReward(0, 1), rat(1, 2));
  EXPECT_EQ(inst.actions[0][1].cost, 0);
  EXPECT_EQ(inst.ExpectedReward(0, 2), 1);
  EXPECT_EQ(inst.actions[0][2].cost, rat(1, 4));
  EXPECT_TRUE(Validate(inst).empty());
}

TEST(FromSlopesTest, SingleSegment) {
  SlopeSpec spec;
  spec.types.push_back({{}, {Rational(1)}});
  const Instance inst = FromSlopes(spec);
  ASSERT_EQ(inst.num_actions(0), 2);
  EXPECT_EQ(inst.ExpectedReward(0, 1), 1);
  EXPECT_EQ(inst.actions[0][1].cost, 0);
}

TEST(FromSlopesTest, ThreePieceCosts) {
  SlopeSpec spec;
  spec.types.push_back(
      {{rat(2, 3), rat(4, 3)}, {rat(1, 5), rat(1, 4), Rational(1)}});
  const Instance inst = FromSlopes(spec);
  ASSERT_EQ(inst.num_actions(0), 4);
  EXPECT_EQ(inst.actions[0][1].cost, 0);
  EXPECT_EQ(inst.actions[0][2].cost, rat(1, 30));
  EXPECT_EQ(inst.actions[0][3].cost, rat(31, 30));
  // Consecutive lines meet at each breakpoint.
  for (int k = 1; k <= 2; ++k) {
    const Rational b = spec.types[0].breakpoints[k - 1];
    EXPECT_EQ(inst.ExpectedReward(0, k) * b - inst.actions[0][k].cost,
              inst.ExpectedReward(0, k + 1) * b - inst.actions[0][k + 1].cost);
  }
}

TEST(FromSlopesTest, ZeroFirstSlopeNeedsNoExtraNull) {
  SlopeSpec spec;
  spec.types.push_back({{rat(9, 10)}, {Rational(0), Rational(4)}});
  const Instance inst = FromSlopes(spec);
  EXPECT_EQ(inst.num_actions(0), 2);
  EXPECT_TRUE(Validate(inst).empty());
}

TEST(FromSlopesTest, RejectsBadSpecs) {
  SlopeSpec empty;
  empty.types.push_back({{}, {}});
  EXPECT_THROW(FromSlopes(empty), std::domain_error);
  SlopeSpec decreasing;
  decreasing.types.push_back({{rat(1, 2)}, {Rational(1), rat(1, 2)}});
  EXPECT_THROW(FromSlopes(decreasing), std::invalid_argument);
  SlopeSpec mismatched;
  mismatched.types.push_back({{rat(1, 2)}, {Rational(1)}});
  EXPECT_THROW(FromSlopes(mismatched), std::invalid_argument);
}

TEST(UtilitiesOfTest, RoundTripsSlopeSpec) {
  SlopeSpec spec;
  spec.types.push_back({{rat(9, 10)}, {Rational(0), Rational(4)}});
  spec.types.push_back({{rat(1, 2)}, {rat(1, 2), Rational(1)}});
  const SlopeSpec back = UtilitiesOf(FromSlopes(spec));
  EXPECT_EQ(back.types, spec.types);
  EXPECT_EQ(*back.prior, UniformPrior(2));
}

TEST(UtilitiesOfTest, DropsDominatedLine) {
  Instance inst;
  inst.rewards = {Rational(1), Rational(0)};
  inst.prior = {Rational(1)};
  inst.actions = {{MakeAction(0, {0, 1}), MakeAction(0, {1, 0}),
                   MakeAction(1, {rat(1, 2), rat(1, 2)})}};
  const SlopeSpec spec = UtilitiesOf(inst);
  ASSERT_EQ(spec.types.size(), 1u);
  EXPECT_TRUE(spec.types[0].breakpoints.empty());
  EXPECT_EQ(spec.types[0].slopes, std::vector<Rational>{Rational(1)});
}

TEST(UtilitiesOfTest, RandomInstancesSurviveRoundTrip) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    RandomParams p;
    p.seed = seed;
    p.types = 3;
    p.actions = 4;
    p.outcomes = 3;
    const SlopeSpec spec = UtilitiesOf(GenRandom(p));
    EXPECT_TRUE(ValidateSlopes(spec).empty()) << seed;
    // Slope specs with a positive first slope gain a null action; the
    // envelope is unchanged either way.
    EXPECT_EQ(UtilitiesOf(FromSlopes(spec)).types, spec.types) << seed;
  }
}

TEST(InstanceTest, ExpectedRewardAndPayment) {
  const Instance inst = TwoTypeInstance();
  EXPECT_EQ(inst.ExpectedReward(1, 1), rat(3, 4));
  EXPECT_EQ(inst.ExpectedPayment(1, 1, {Rational(2), Rational(4)}), rat(5, 2));
  EXPECT_EQ(UniformPrior(4), std::vector<Rational>(4, rat(1, 4)));
}

}  // namespace
}  // namespace contracts
