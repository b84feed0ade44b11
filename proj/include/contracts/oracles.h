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

// Brute-force reference solvers that share no code with the simplex or the
// enumeration solvers. Only practical for tiny inputs.

#ifndef CONTRACTS_ORACLES_H_
#define CONTRACTS_ORACLES_H_

#include <vector>

#include "contracts/envelope.h"
#include "contracts/instance.h"
#include "contracts/rational.h"
#include "contracts/simplex.h"

namespace contracts {

struct VertexResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

// Solves a program with nonnegative variables by enumerating every basic
// solution, plus the extreme rays of the recession cone for unboundedness.
// Throws std::invalid_argument if a variable is free.
VertexResult VertexEnumerate(const LinearProgram& lp);

// Best weighted profit over contracts x_j = k_j * step, k_j in [0, points),
// with principal-favoring tie-breaking.
Rational GridBestSingle(const Instance& instance,
                        const std::vector<Rational>& weights, int points,
                        const Rational& step);

// Best linear profit over alpha = k / points, k in [0, points).
Rational GridBestLinear(const std::vector<Envelope>& envs,
                        const std::vector<Rational>& weights, int points);

}  // namespace contracts

#endif  // CONTRACTS_ORACLES_H_
