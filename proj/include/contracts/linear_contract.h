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

#ifndef CONTRACTS_LINEAR_CONTRACT_H_
#define CONTRACTS_LINEAR_CONTRACT_H_

#include <vector>

#include "contracts/envelope.h"
#include "contracts/instance.h"
#include "contracts/rational.h"

namespace contracts {

struct TypeOutcome {
  int action = 0;
  Rational profit;  // unweighted principal profit from this type
};

struct LinearResult {
  Rational alpha_star;
  Rational value;
  std::vector<TypeOutcome> per_type;
};

// sum_t w_t (1 - alpha) U'_t(alpha+). Requires alpha >= 0.
Rational LinearProfit(const std::vector<Envelope>& envs,
                      const std::vector<Rational>& weights,
                      const Rational& alpha);

// Best single linear contract. Scans {0} and the merged breakpoints in
// [0, 1]; ties go to the smaller alpha.
LinearResult OptLinear(const Instance& instance,
                       const std::vector<Rational>& weights);
LinearResult OptLinear(const std::vector<Envelope>& envs,
                       const std::vector<Rational>& weights);

// Linear contract alpha evaluated at every type.
LinearResult EvaluateLinear(const std::vector<Envelope>& envs,
                            const std::vector<Rational>& weights,
                            const Rational& alpha);

// A finite menu of linear contracts: each type takes the alpha with the
// highest utility, ties to the principal's profit, then the lowest index.
// Returns the weighted profit; `chosen` receives the picked indices.
Rational EvaluateLinearMenu(const std::vector<Envelope>& envs,
                            const std::vector<Rational>& alphas,
                            const std::vector<Rational>& weights,
                            std::vector<int>* chosen = nullptr);

}  // namespace contracts

#endif  // CONTRACTS_LINEAR_CONTRACT_H_
