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

#include "contracts/oracles.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "contracts/generators.h"

namespace contracts {
namespace {

using R = Relation;

TEST(VertexEnumerateTest, KnownPrograms) {
  LinearProgram lp;
  lp.AddVariable(1);
  lp.AddVariable(1);
  lp.AddConstraint({Rational(1), Rational(2)}, R::kLessEqual, 4);
  lp.AddConstraint({Rational(3), Rational(1)}, R::kLessEqual, 6);
  VertexResult v = VertexEnumerate(lp);
  ASSERT_EQ(v.status, LpStatus::kOptimal);
  EXPECT_EQ(v.value, rat(14, 5));
  EXPECT_EQ(v.x, (std::vector<Rational>{rat(8, 5), rat(6, 5)}));

  lp.AddConstraint({Rational(1), Rational(1)}, R::kGreaterEqual, 5);
  EXPECT_EQ(VertexEnumerate(lp).status, LpStatus::kInfeasible);

  LinearProgram open;
  open.AddVariable(1);
  open.AddVariable(0);
  open.AddConstraint({Rational(1), Rational(-1)}, R::kLessEqual, 1);
  EXPECT_EQ(VertexEnumerate(open).status, LpStatus::kUnbounded);
}

TEST(VertexEnumerateTest, RedundantEqualityRow) {
  LinearProgram lp;
  lp.AddVariable(-3);
  lp.AddConstraint({Rational(1)}, R::kLessEqual, 2);
  lp.AddConstraint({Rational(0)}, R::kEqual, 0);
  lp.AddConstraint({Rational(3)}, R::kGreaterEqual, 6);
  const VertexResult v = VertexEnumerate(lp);
  ASSERT_EQ(v.status, LpStatus::kOptimal);
  EXPECT_EQ(v.value, -6);
}

TEST(VertexEnumerateTest, AgreesWithSimplex) {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    std::mt19937_64 g(seed);
    auto draw = [&g](int lo, int hi) {
      return lo + static_cast<int>(g() % static_cast<uint64_t>(hi - lo + 1));
    };
    LinearProgram lp;
    const int n = draw(1, 3);
    for (int j = 0; j < n; ++j) lp.AddVariable(draw(-3, 3));
    const int m = draw(1, 5);
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) row.push_back(draw(-2, 3));
      const Relation rel = draw(0, 3) == 0 ? R::kGreaterEqual : R::kLessEqual;
      lp.AddConstraint(std::move(row), rel, draw(-1, 6));
    }
    const LpOutcome s = Solve(lp);
    const VertexResult v = VertexEnumerate(lp);
    ASSERT_EQ(s.status, v.status) << seed;
    if (s.status == LpStatus::kOptimal) {
      EXPECT_EQ(s.value, v.value) << seed;
    }
  }
}

TEST(VertexEnumerateTest, RejectsFreeVariables) {
  LinearProgram lp;
  lp.AddVariable(1, true);
  EXPECT_THROW(VertexEnumerate(lp), std::invalid_argument);
}

TEST(GridTest, SingleProductiveAction) {
  Instance inst;
  inst.rewards = {Rational(1), Rational(0)};
  inst.prior = {Rational(1)};
  inst.actions = {{Action{0, {0, 1}}, Action{rat(1, 2), {1, 0}}}};
  EXPECT_EQ(GridBestSingle(inst, inst.prior, 200, rat(1, 100)), rat(1, 2));
  EXPECT_EQ(GridBestSingle(inst, inst.prior, 3, rat(1, 3)), rat(1, 3));
}

TEST(GridTest, LinearGridOnTwoTypeExample) {
  const Instance inst = GenExampleRlc(rat(1, 10)).instance;
  EXPECT_EQ(GridBestLinear(TypeEnvelopes(inst), {1, 1}, 10), rat(1, 2));
}

}  // namespace
}  // namespace contracts
