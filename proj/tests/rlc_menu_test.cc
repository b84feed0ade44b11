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

#include "contracts/rlc_menu.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "contracts/generators.h"
#include "contracts/linear_contract.h"

namespace contracts {
namespace {

const std::vector<Rational> kUnit = {1, 1};

TEST(BuildRlcLpTest, ColumnLayoutForTwoTypeExample) {
  const RlcLp built = BuildRlcLp(GenExampleRlc(rat(1, 10)).instance, kUnit, false);
  EXPECT_EQ(built.support, (std::vector<Rational>{0, rat(1, 2), rat(9, 10)}));
  EXPECT_EQ(built.last_breakpoint, rat(9, 10));
  int masses = 0;
  for (int t = 0; t < 2; ++t) {
    masses += static_cast<int>(built.mass[t].size());
    EXPECT_GE(built.tail[t], 0);
    EXPECT_GE(built.tail_moment[t], 0);
    ++masses;  // the tail mass
  }
  EXPECT_EQ(masses, 8);
  EXPECT_EQ(built.lp.num_variables(), 10);
}

TEST(BuildRlcLpTest, BoundedSupportAddsOne) {
  const RlcLp built = BuildRlcLp(GenUnboundedRlc().instance, kUnit, true);
  EXPECT_EQ(built.support, (std::vector<Rational>{0, rat(1, 3), rat(2, 3), 1}));
  EXPECT_TRUE(built.bounded);
  EXPECT_EQ(built.tail, (std::vector<int>{-1, -1}));
}

TEST(OptRlcMenuTest, TwoTypeExample) {
  const RlcFamily f = GenExampleRlc(rat(1, 10));
  const RlcResult r = OptRlcMenu(f.instance, kUnit, false);
  const RlcEvaluation paper = EvaluateRlcMenu(f.instance, f.menu, kUnit);
  EXPECT_EQ(paper.value, rat(19, 30));
  EXPECT_GE(r.value, paper.value);
  EXPECT_GT(r.value, OptLinear(f.instance, kUnit).value);
  ValidateMenu(r.menu, 2);
  EXPECT_EQ(EvaluateRlcMenu(f.instance, r.menu, kUnit).value, r.value);
}

TEST(OptRlcMenuTest, SingleTypeSingleLine) {
  Instance inst;
  inst.rewards = {Rational(1), Rational(0)};
  inst.prior = {Rational(1)};
  inst.actions = {{Action{0, {0, 1}}, Action{0, {1, 0}}}};
  const RlcResult r = OptRlcMenu(inst, inst.prior, false);
  EXPECT_EQ(r.value, 1);
  ASSERT_EQ(r.menu.items.size(), 1u);
  EXPECT_EQ(r.menu.items[0], (std::vector<RlcItem>{{Rational(0), Rational(1)}}));
}

TEST(OptRlcMenuTest, UnboundedExampleAgainstDenseSupport) {
  const Instance inst = GenUnboundedRlc().instance;
  const RlcResult unbounded = OptRlcMenu(inst, kUnit, false);
  const RlcResult bounded = OptRlcMenu(inst, kUnit, true);
  EXPECT_GE(unbounded.value, bounded.value);
  EXPECT_LT(bounded.value, rat(31, 100));
  EXPECT_GE(bounded.value, OptLinear(inst, kUnit).value);
  // Extra columns on a 1/60 grid up to 3 cannot improve on the breakpoint
  // support.
  std::vector<Rational> grid;
  for (int k = 1; k <= 180; ++k) {
    const Rational a = rat(k, 60);
    if (a != rat(1, 3) && a != rat(2, 3) && a != rat(4, 3)) grid.push_back(a);
  }
  EXPECT_EQ(OptRlcMenu(inst, kUnit, false, grid).value, unbounded.value);
}

TEST(EvaluateRlcMenuTest, UnboundedExampleMenuUtilities) {
  const RlcFamily f = GenUnboundedRlc();
  const RlcEvaluation ev = EvaluateRlcMenu(f.instance, f.menu, kUnit);
  // U_1(2/3) = 2/15 and U_1(5/3) = 2/15 + 1/6 + 1/3 = 19/30, so the first
  // list is worth 79/200 * 2/15 + 1/200 * 19/30 = 67/1200 to the first type,
  // while the second list is worth U_1(1/3) = 1/15.
  EXPECT_EQ(ev.utilities[0][0], rat(67, 1200));
  EXPECT_EQ(ev.utilities[0][1], rat(1, 15));
  EXPECT_FALSE(ev.incentive_compatible);
  EXPECT_EQ(ev.chosen[0], 1);
}

TEST(EvaluateRlcMenuTest, CrossUtilityAtQuarter) {
  const RlcFamily f = GenExampleRlc(rat(1, 4));
  const RlcEvaluation ev = EvaluateRlcMenu(f.instance, f.menu, kUnit);
  EXPECT_EQ(ev.utilities[1][0], rat(1, 6));
  EXPECT_EQ(ev.utilities[1][1], rat(1, 4));
  EXPECT_TRUE(ev.strict[1]);
}

TEST(EvaluateRlcMenuTest, PointMassAtZero) {
  const RlcFamily f = GenExampleRlc(rat(1, 10));
  RlcMenu zero;
  zero.items = {{{Rational(0), Rational(1)}}, {{Rational(0), Rational(1)}}};
  // Type 1's envelope starts flat, type 2's with slope 1/2.
  EXPECT_EQ(EvaluateRlcMenu(f.instance, zero, kUnit).value, rat(1, 2));
  SlopeSpec flat;
  flat.types.push_back({{rat(1, 2)}, {Rational(0), Rational(1)}});
  flat.types.push_back({{rat(1, 3)}, {Rational(0), Rational(2)}});
  EXPECT_EQ(EvaluateRlcMenu(FromSlopes(flat), zero, kUnit).value, 0);
}

TEST(ValidateMenuTest, RejectsMalformedMenus) {
  const RlcItem one{Rational(0), Rational(1)};
  EXPECT_NO_THROW(ValidateMenu(RlcMenu{{{one}}}, 1));
  EXPECT_THROW(ValidateMenu(RlcMenu{{{one}}}, 2), std::domain_error);
  EXPECT_THROW(ValidateMenu(RlcMenu{{{}}}, 1), std::domain_error);
  EXPECT_THROW(ValidateMenu(RlcMenu{{{{Rational(0), rat(1, 2)}}}}, 1),
               std::domain_error);
  EXPECT_THROW(ValidateMenu(RlcMenu{{{{Rational(-1), Rational(1)}}}}, 1),
               std::domain_error);
  EXPECT_THROW(ValidateMenu(RlcMenu{{{{Rational(0), rat(1, 2)},
                                      {Rational(0), rat(1, 2)}}}},
                            1),
               std::domain_error);
  EXPECT_THROW(ValidateMenu(RlcMenu{{{{Rational(0), Rational(2)},
                                      {Rational(1), Rational(-1)}}}},
                            1),
               std::domain_error);
}

class RandomRlcTest : public ::testing::TestWithParam<uint64_t> {
 protected:
  Instance MakeInstance() const {
    RandomParams p;
    p.seed = GetParam();
    p.types = 1 + static_cast<int>(GetParam() % 3);
    p.actions = 4;
    p.outcomes = 3;
    return GenRandom(p);
  }
};

TEST_P(RandomRlcTest, HierarchyAndExtraction) {
  const Instance inst = MakeInstance();
  const RlcResult r = OptRlcMenu(inst, inst.prior, false);
  const Rational lin = OptLinear(inst, inst.prior).value;
  EXPECT_GE(r.value, lin);
  if (inst.num_types() == 1) {
    EXPECT_EQ(r.value, lin);
  }
  ValidateMenu(r.menu, inst.num_types());
  EXPECT_EQ(EvaluateRlcMenu(inst, r.menu, inst.prior).value, r.value);
  const std::vector<Rational> bps = MergedBreakpoints(inst);
  for (int t = 0; t < inst.num_types(); ++t) {
    if (r.tail_mass[t].sign() > 0) {
      // A tail point equal to the last breakpoint merges into that item.
      EXPECT_GE(r.tail_moment[t] / r.tail_mass[t], bps.back());
    }
  }
  const RlcResult bounded = OptRlcMenu(inst, inst.prior, true);
  EXPECT_LE(bounded.value, r.value);
  for (const auto& list : bounded.menu.items) {
    for (const RlcItem& item : list) EXPECT_LE(item.alpha, 1);
  }
}

TEST_P(RandomRlcTest, DuplicateTypeCollapses) {
  const Instance inst = MakeInstance();
  Instance dup;
  dup.rewards = inst.rewards;
  dup.actions = {inst.actions[0], inst.actions[0]};
  dup.prior = {rat(1, 3), rat(2, 3)};
  EXPECT_EQ(OptRlcMenu(dup, dup.prior, false).value,
            OptLinear(dup, dup.prior).value);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomRlcTest, ::testing::Range<uint64_t>(1, 31));

}  // namespace
}  // namespace contracts
