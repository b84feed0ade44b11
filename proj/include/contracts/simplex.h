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

// Exact two-phase simplex over Rational.
//
//   maximize    c . x
//   subject to  a_k . x  (<=, =, >=)  b_k
//               x_j >= 0 unless variable j is free.

#ifndef CONTRACTS_SIMPLEX_H_
#define CONTRACTS_SIMPLEX_H_

#include <cstdint>
#include <string>
#include <vector>

#include "contracts/rational.h"

namespace contracts {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<Rational> row;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<bool> free;  // per variable; nonnegative when false
  std::vector<Constraint> constraints;

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }

  // Appends a variable and returns its index. Existing rows are padded.
  int AddVariable(const Rational& cost, bool is_free = false);
  void AddConstraint(std::vector<Rational> row, Relation relation,
                     const Rational& rhs);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;                // c . x, on kOptimal
  std::vector<Rational> x;       // on kOptimal
  // One price per constraint, on kOptimal. Signs follow the maximization
  // convention: y >= 0 on <= rows, y <= 0 on >= rows, so that b . y equals
  // the optimum and A^T y >= c (with equality on free variables).
  std::vector<Rational> duals;
  int64_t pivots = 0;
};

// Deterministic for a fixed program. Uses Dantzig's rule and falls back to
// Bland's rule after a run of degenerate pivots, which guarantees
// termination. Throws std::invalid_argument if a row has the wrong length.
LpOutcome Solve(const LinearProgram& lp);

}  // namespace contracts

#endif  // CONTRACTS_SIMPLEX_H_
