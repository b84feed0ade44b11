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

// General (outcome-wise) contracts: the best single contract and the best
// menu of deterministic contracts, found by enumerating the action each type
// is asked to play and solving one exact LP per assignment.

#ifndef CONTRACTS_GENERAL_CONTRACTS_H_
#define CONTRACTS_GENERAL_CONTRACTS_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "contracts/instance.h"
#include "contracts/rational.h"

namespace contracts {

// Payment per outcome, all entries >= 0.
using GeneralContract = std::vector<Rational>;

struct DetMenu {
  std::vector<GeneralContract> contracts;  // one per reported type
};

struct EnumOptions {
  int64_t profile_cap = 200000;
  bool prune = true;  // collapse identical rows to their cheapest action
  int threads = 0;    // 0 picks the hardware concurrency
};

class ProfileCapExceeded : public std::runtime_error {
 public:
  explicit ProfileCapExceeded(int64_t profiles);
  int64_t profiles() const { return profiles_; }

 private:
  int64_t profiles_;
};

struct EnumStats {
  int64_t profiles = 0;          // assignments enumerated
  int64_t feasible = 0;          // assignments with a feasible LP
  int64_t collapsed_actions = 0; // actions removed by row collapsing
  int64_t pivots = 0;
};

struct SingleResult {
  GeneralContract contract;
  Rational value;
  std::vector<int> profile;  // action per type
  EnumStats stats;
};

struct DetMenuResult {
  DetMenu menu;
  Rational value;
  std::vector<int> profile;
  EnumStats stats;
};

// Number of action assignments the enumeration would visit.
int64_t CountProfiles(const Instance& instance, bool prune);

// Actions per type considered by the enumeration: all of them, or one
// representative per distinct row (the cheapest, then the lowest index).
std::vector<std::vector<int>> CandidateActions(const Instance& instance,
                                               bool prune);

// Throw ProfileCapExceeded before solving anything when the count exceeds
// options.profile_cap.
SingleResult OptSingle(const Instance& instance,
                       const std::vector<Rational>& weights,
                       const EnumOptions& options = {});
DetMenuResult OptDetMenu(const Instance& instance,
                         const std::vector<Rational>& weights,
                         const EnumOptions& options = {});

struct Response {
  int item = 0;      // menu entry taken; 0 for a single contract
  int action = 0;
  Rational utility;
  Rational profit;   // unweighted principal profit
  bool tie_broken = false;  // another choice had the same utility
};

struct ContractEvaluation {
  Rational value;
  std::vector<Response> responses;  // per type
};

// Agents maximize utility; ties go to the principal's profit, then the
// lowest indices.
ContractEvaluation EvaluateSingle(const Instance& instance,
                                  const GeneralContract& x,
                                  const std::vector<Rational>& weights);
ContractEvaluation EvaluateDetMenu(const Instance& instance,
                                   const DetMenu& menu,
                                   const std::vector<Rational>& weights);

}  // namespace contracts

#endif  // CONTRACTS_GENERAL_CONTRACTS_H_
