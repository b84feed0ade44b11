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

// Menus of randomized linear contracts.
//
// Each type reports, then receives a linear contract alpha drawn from the
// distribution attached to its report. The optimal menu is the solution of
// a linear program whose mass variables sit on the merged envelope
// breakpoints alpha_0 = 0 < ... < alpha_p, plus one tail item beyond alpha_p
// per type whose position is encoded by z_t = alpha * mass.

#ifndef CONTRACTS_RLC_MENU_H_
#define CONTRACTS_RLC_MENU_H_

#include <cstdint>
#include <vector>

#include "contracts/envelope.h"
#include "contracts/instance.h"
#include "contracts/rational.h"
#include "contracts/simplex.h"

namespace contracts {

struct RlcItem {
  Rational alpha;
  Rational prob;

  friend bool operator==(const RlcItem&, const RlcItem&) = default;
};

struct RlcMenu {
  std::vector<std::vector<RlcItem>> items;  // items[t], one list per type

  friend bool operator==(const RlcMenu&, const RlcMenu&) = default;
};

// Throws std::domain_error unless every list is nonempty, coefficients are
// nonnegative and distinct, and probabilities are nonnegative summing to 1.
void ValidateMenu(const RlcMenu& menu, int num_types);

// Column layout of the program built by BuildRlcLp.
struct RlcLp {
  LinearProgram lp;
  std::vector<Rational> support;        // sorted, alpha_0 = 0 first
  Rational last_breakpoint;             // alpha_p
  bool bounded = false;                 // no tail when true
  std::vector<std::vector<int>> mass;   // mass[t][i] for support[i]
  std::vector<int> tail;                // tail mass per type, -1 if bounded
  std::vector<int> tail_moment;         // z_t per type, -1 if bounded
};

// Unbounded: support is the merged breakpoints plus a tail item per type.
// Bounded: support is (breakpoints in [0, 1]) with 0 and 1, no tail.
// `extra_support` adds further mass columns at the given coefficients.
RlcLp BuildRlcLp(const Instance& instance, const std::vector<Rational>& weights,
                 bool bounded,
                 const std::vector<Rational>& extra_support = {});

struct RlcResult {
  RlcMenu menu;
  Rational value;
  std::vector<std::vector<Rational>> masses;  // masses[t][i] on support[i]
  std::vector<Rational> tail_mass;
  std::vector<Rational> tail_moment;
  std::vector<Rational> support;
  int64_t pivots = 0;
};

// Solves the program and extracts the menu. The tail item sits at
// z_t / tail mass; zero-mass items are dropped.
RlcResult OptRlcMenu(const Instance& instance,
                     const std::vector<Rational>& weights, bool bounded,
                     const std::vector<Rational>& extra_support = {});

struct RlcEvaluation {
  Rational value;
  std::vector<int> chosen;                      // item list picked per type
  std::vector<std::vector<Rational>> utilities; // utilities[t][t']
  std::vector<Rational> profits;                // unweighted, per type
  std::vector<bool> strict;                     // own row has a unique max
  bool all_strict = false;
  bool incentive_compatible = false;            // chosen[t] == t for all t
};

// Each type picks the list maximizing its expected utility, ties to the
// principal's profit and then the lowest index.
RlcEvaluation EvaluateRlcMenu(const std::vector<Envelope>& envs,
                              const RlcMenu& menu,
                              const std::vector<Rational>& weights);
RlcEvaluation EvaluateRlcMenu(const Instance& instance, const RlcMenu& menu,
                              const std::vector<Rational>& weights);

}  // namespace contracts

#endif  // CONTRACTS_RLC_MENU_H_
