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

#include "contracts/generators.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "contracts/envelope.h"
#include "contracts/general_contracts.h"
#include "contracts/instance.h"
#include "contracts/rlc_menu.h"

namespace contracts {
namespace {

Rational OwnListProfit(const Envelope& env, const std::vector<RlcItem>& items) {
  Rational total = 0;
  for (const RlcItem& item : items) {
    total += item.prob * (1 - item.alpha) * RightSlope(env, item.alpha);
  }
  return total;
}

TEST(ExampleRlcTest, SlopesAndMenu) {
  const RlcFamily f = GenExampleRlc(rat(1, 10));
  EXPECT_TRUE(Validate(f.instance).empty());
  const SlopeSpec spec = UtilitiesOf(f.instance);
  EXPECT_EQ(spec.types[0].breakpoints, std::vector<Rational>{rat(9, 10)});
  EXPECT_EQ(spec.types[0].slopes[1], 4);
  EXPECT_EQ(spec.types[1].breakpoints, std::vector<Rational>{rat(1, 2)});
  EXPECT_EQ(f.instance.prior, UniformPrior(2));
  const RlcEvaluation ev = EvaluateRlcMenu(f.instance, f.menu, {1, 1});
  EXPECT_TRUE(ev.incentive_compatible);
}

TEST(ExampleRlcTest, RejectsOutOfRangeGap) {
  EXPECT_THROW(GenExampleRlc(rat(1, 2)), std::invalid_argument);
  EXPECT_THROW(GenExampleRlc(Rational(0)), std::invalid_argument);
  EXPECT_NO_THROW(GenExampleRlc(rat(49, 100)));
}

TEST(UnboundedRlcTest, ListRevenues) {
  const RlcFamily f = GenUnboundedRlc();
  const std::vector<Envelope> envs = TypeEnvelopes(f.instance);
  EXPECT_EQ(OwnListProfit(envs[0], f.menu.items[0]), rat(359, 2400));
  EXPECT_EQ(OwnListProfit(envs[1], f.menu.items[1]), rat(1, 6));
  bool above_one = false;
  for (const RlcItem& item : f.menu.items[0]) above_one |= item.alpha > 1;
  EXPECT_TRUE(above_one);
  EXPECT_EQ(f.instance.prior, UniformPrior(2));
}

TEST(OmegaNTest, Entries) {
  const int n = 12;
  const Rational nn = n;
  const DetFamily f = GenOmegaN(n);
  const Instance& inst = f.instance;
  EXPECT_TRUE(Validate(inst).empty());
  ASSERT_EQ(inst.num_types(), 3);
  EXPECT_EQ(inst.num_outcomes(), 4);
  for (int t = 0; t < 3; ++t) EXPECT_EQ(inst.num_actions(t), 2 * n + 2);
  EXPECT_EQ(inst.actions[0][n].row[1], rat(1, 3));
  for (int t = 0; t < 2; ++t) {
    for (int i = 1; i <= 2 * n + 1; ++i) {
      for (int j = 0; j < 3; ++j) EXPECT_LE(inst.actions[t][i].row[j], rat(1, 3));
    }
  }
  for (int i = 1; i <= n; ++i) {
    EXPECT_EQ(inst.actions[0][i].cost, (PowInt(nn, i) - i) / PowInt(nn, n + 1));
    EXPECT_EQ(inst.ExpectedReward(0, i) - inst.actions[0][i].cost,
              Rational(i) / PowInt(nn, n + 1));
  }
  const Rational tiny = PowInt(nn, -2 * n);
  EXPECT_EQ(inst.prior, (std::vector<Rational>{tiny / 2, tiny / 2, 1 - tiny}));
  ASSERT_EQ(f.menu.contracts.size(), 3u);
  EXPECT_EQ(f.menu.contracts[0],
            (GeneralContract{0, (PowInt(nn, n - 1) - 1) / (PowInt(nn, n) * rat(1, 3)), 0, 0}));
  EXPECT_EQ(f.menu.contracts[1], (GeneralContract{0, 0, 1, 0}));
}

TEST(OmegaNTest, Preconditions) {
  EXPECT_THROW(GenOmegaN(11), std::invalid_argument);
  EXPECT_THROW(GenOmegaN(12, rat(1, 2)), std::invalid_argument);
  EXPECT_THROW(GenOmegaN(12, Rational(0)), std::invalid_argument);
  EXPECT_TRUE(Validate(GenOmegaN(13, rat(1, 5)).instance).empty());
}

TEST(OmegaLogTTest, Entries) {
  const DetFamily f = GenOmegaLogT(3);
  const Instance& inst = f.instance;
  EXPECT_TRUE(Validate(inst).empty());
  ASSERT_EQ(inst.num_types(), 25);
  EXPECT_EQ(inst.num_outcomes(), 25);
  EXPECT_EQ(inst.actions[0][1].cost, rat(1, 50));
  EXPECT_EQ(inst.actions[0][1].row[0], rat(1, 25));
  EXPECT_EQ(Sum(inst.prior), 1);
  EXPECT_EQ(inst.prior[0], rat(1, 4096));
  EXPECT_EQ(f.menu.contracts.size(), 24u);
  GeneralContract first(25);
  first[0] = rat(1, 2);
  EXPECT_EQ(f.menu.contracts[0], first);
  EXPECT_THROW(GenOmegaLogT(2), std::invalid_argument);
}

TEST(OmegaLogTTest, MenuChoices) {
  const DetFamily f = GenOmegaLogT(3);
  const ContractEvaluation ev = EvaluateDetMenu(f.instance, f.menu, f.instance.prior);
  EXPECT_GE(ev.value, PowInt(Rational(16), -4));
  for (int t = 1; t + 1 < f.instance.num_types(); ++t) {
    EXPECT_EQ(ev.responses[t].item, t) << t;
    EXPECT_EQ(ev.responses[t].action, 1) << t;
  }
  // The first type's two outcome labels coincide, so its own contract leaves
  // it at zero utility while any other item pays its spread action a
  // positive amount.
  EXPECT_NE(ev.responses[0].item, 0);
  EXPECT_EQ(ev.responses[0].action, 2);
  EXPECT_GT(ev.responses[0].utility, 0);
}

TEST(OmegaTRlcTest, SlopesFollowPerturbedSum) {
  const int T = 3;
  const int n = 2 * T + 3;
  const Rational eta = rat(1, 2 * T);
  std::vector<Rational> u(n);
  for (int i = 0; i < n; ++i) {
    u[i] = PowInt(eta, -i) / (10 * Rational(n));
    if (i <= n - 2) u[i] /= 1 - eta;
  }
  const RlcFamily f = GenOmegaTRlc(T);
  const SlopeSpec spec = UtilitiesOf(f.instance);
  ASSERT_EQ(spec.types.size(), static_cast<size_t>(T));
  for (int t = 1; t <= T; ++t) {
    const TypeSlopes& ts = spec.types[t - 1];
    ASSERT_EQ(ts.breakpoints.size(), static_cast<size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(ts.breakpoints[i - 1], 1 - PowInt(eta, i));
    }
    for (int i = 0; i < n; ++i) {
      Rational slope = u[i];
      if (i == t - 1) slope += T * u[t - 1];
      if (i == t) slope += rat(T, 2) * u[t];
      if (i == n - t - 2) slope += T * u[n - t - 2];
      if (i == n - t - 1) slope += rat(T, 2) * u[n - t - 1];
      EXPECT_EQ(ts.slopes[i], slope) << "type " << t << " piece " << i;
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    EXPECT_EQ((1 - (1 - PowInt(eta, i))) * u[i], 1 / (10 * n * (1 - eta)));
  }
  EXPECT_EQ(spec.types, f.spec.types);
}

TEST(OmegaTRlcTest, MenuIsStrictlyIncentiveCompatible) {
  for (int T = 2; T <= 6; ++T) {
    const RlcFamily f = GenOmegaTRlc(T);
    EXPECT_TRUE(ValidateSlopes(f.spec).empty());
    const RlcEvaluation ev = EvaluateRlcMenu(f.instance, f.menu, f.instance.prior);
    EXPECT_TRUE(ev.incentive_compatible) << T;
    EXPECT_TRUE(ev.all_strict) << T;
  }
  const RlcEvaluation three =
      EvaluateRlcMenu(GenOmegaTRlc(3).instance, GenOmegaTRlc(3).menu, UniformPrior(3));
  for (const Rational& p : three.profits) EXPECT_EQ(p, rat(1, 30));
}

TEST(OmegaTRlcTest, NeedsTwoTypes) {
  EXPECT_THROW(GenOmegaTRlc(1), std::invalid_argument);
}

TEST(RandomTest, DeterministicAndValid) {
  RandomParams p;
  p.seed = 42;
  p.types = 3;
  p.actions = 4;
  p.outcomes = 3;
  const Instance a = GenRandom(p);
  EXPECT_EQ(a, GenRandom(p));
  EXPECT_TRUE(Validate(a).empty());
  p.seed = 43;
  EXPECT_FALSE(a == GenRandom(p));
}

TEST(RandomTest, TwoActionStructure) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    RandomParams p;
    p.seed = seed;
    p.types = 4;
    p.actions = 5;
    p.structure = RandomStructure::kTwoAction;
    const Instance inst = GenRandom(p);
    EXPECT_TRUE(Validate(inst).empty());
    for (int t = 0; t < inst.num_types(); ++t) EXPECT_EQ(inst.num_actions(t), 2);
    bool positive = false;
    for (const Rational& r : inst.rewards) positive |= r.sign() > 0;
    EXPECT_TRUE(positive);
  }
}

}  // namespace
}  // namespace contracts
