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

// Typed principal-agent instances.
//
// An instance has T agent types and m outcomes with rewards r. Each type t
// owns a (possibly ragged) list of actions; action i of type t costs c_i and
// induces the outcome distribution F^(t)_i. Types are drawn from a prior.
// Every type must own a null action: zero cost, all mass on a zero-reward
// outcome.
//
// For linear contracts only the expected reward R^(t)_i = F^(t)_i . r of each
// action matters, so an instance can also be described by its per-type
// utility envelopes U_t(alpha) = max_i (R^(t)_i alpha - c_i). SlopeSpec is that
// description: breakpoints and the slope of U_t on each piece.

#ifndef CONTRACTS_INSTANCE_H_
#define CONTRACTS_INSTANCE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contracts/rational.h"

namespace contracts {

struct Action {
  Rational cost;
  std::vector<Rational> row;  // outcome probabilities, one per outcome
};

struct Instance {
  std::vector<Rational> rewards;
  std::vector<std::vector<Action>> actions;  // actions[t][i]
  std::vector<Rational> prior;
  std::map<std::string, std::string> meta;

  int num_types() const { return static_cast<int>(actions.size()); }
  int num_outcomes() const { return static_cast<int>(rewards.size()); }
  int num_actions(int type) const {
    return static_cast<int>(actions.at(type).size());
  }

  // R^(t)_i.
  Rational ExpectedReward(int type, int action) const;
  // Expected payment sum_j F^(t)_{i,j} x_j.
  Rational ExpectedPayment(int type, int action,
                           const std::vector<Rational>& payments) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.rewards == b.rewards && a.prior == b.prior &&
           a.actions.size() == b.actions.size() && SameActions(a, b);
  }

 private:
  static bool SameActions(const Instance& a, const Instance& b);
};

// Human-readable descriptions of every invariant violation; empty iff valid.
// Never throws.
std::vector<std::string> Validate(const Instance& instance);

// Throws std::invalid_argument listing the violations when invalid.
void ValidateOrThrow(const Instance& instance);

// U'_t for one type: slopes[k] applies on [breakpoints[k-1], breakpoints[k]),
// with an implicit breakpoint at 0 and the last slope extending to infinity.
struct TypeSlopes {
  std::vector<Rational> breakpoints;
  std::vector<Rational> slopes;

  friend bool operator==(const TypeSlopes&, const TypeSlopes&) = default;
};

struct SlopeSpec {
  std::vector<TypeSlopes> types;
  std::optional<std::vector<Rational>> prior;  // uniform when absent

  friend bool operator==(const SlopeSpec&, const SlopeSpec&) = default;
};

// Violations of the SlopeSpec invariants; empty iff valid.
std::vector<std::string> ValidateSlopes(const SlopeSpec& spec);

// Two-outcome embedding of a slope specification: rewards (r_1, 0) with r_1
// the largest slope, one action per slope piece with R equal to the slope and
// costs accumulated so consecutive lines meet at the breakpoints, plus an
// explicit null action (index 0) when the first slope is positive.
// Throws std::domain_error for an empty slope list and std::invalid_argument
// for other invariant violations.
Instance FromSlopes(const SlopeSpec& spec);

// Per-type upper envelope of the lines (R^(t)_i, c_i) as a SlopeSpec.
// The instance must be valid.
SlopeSpec UtilitiesOf(const Instance& instance);

std::vector<Rational> UniformPrior(int num_types);

}  // namespace contracts

#endif  // CONTRACTS_INSTANCE_H_
