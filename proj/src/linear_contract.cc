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

#include "contracts/linear_contract.h"

#include <stdexcept>

namespace contracts {
namespace {

void CheckWeights(const std::vector<Envelope>& envs,
                  const std::vector<Rational>& weights) {
  if (envs.size() != weights.size()) {
    throw std::invalid_argument("one weight per type required");
  }
}

}  // namespace

Rational LinearProfit(const std::vector<Envelope>& envs,
                      const std::vector<Rational>& weights,
                      const Rational& alpha) {
  CheckWeights(envs, weights);
  if (alpha.sign() < 0) throw std::domain_error("negative transfer coefficient");
  Rational total = 0;
  const Rational keep = Rational(1) - alpha;
  for (size_t t = 0; t < envs.size(); ++t) {
    total += weights[t] * keep * RightSlope(envs[t], alpha);
  }
  return total;
}

LinearResult EvaluateLinear(const std::vector<Envelope>& envs,
                            const std::vector<Rational>& weights,
                            const Rational& alpha) {
  CheckWeights(envs, weights);
  if (alpha.sign() < 0) throw std::domain_error("negative transfer coefficient");
  LinearResult result;
  result.alpha_star = alpha;
  result.value = 0;
  const Rational keep = Rational(1) - alpha;
  for (size_t t = 0; t < envs.size(); ++t) {
    const Rational profit = keep * RightSlope(envs[t], alpha);
    result.per_type.push_back({BestResponse(envs[t], alpha), profit});
    result.value += weights[t] * profit;
  }
  return result;
}

LinearResult OptLinear(const std::vector<Envelope>& envs,
                       const std::vector<Rational>& weights) {
  CheckWeights(envs, weights);
  Rational best_alpha = 0;
  Rational best = LinearProfit(envs, weights, best_alpha);
  for (const Rational& alpha : MergedBreakpoints(envs)) {
    if (alpha > 1) break;
    const Rational value = LinearProfit(envs, weights, alpha);
    if (value > best) {
      best = value;
      best_alpha = alpha;
    }
  }
  return EvaluateLinear(envs, weights, best_alpha);
}

LinearResult OptLinear(const Instance& instance,
                       const std::vector<Rational>& weights) {
  return OptLinear(TypeEnvelopes(instance), weights);
}

Rational EvaluateLinearMenu(const std::vector<Envelope>& envs,
                            const std::vector<Rational>& alphas,
                            const std::vector<Rational>& weights,
                            std::vector<int>* chosen) {
  CheckWeights(envs, weights);
  if (alphas.empty()) throw std::domain_error("empty menu");
  if (chosen) chosen->assign(envs.size(), 0);
  Rational total = 0;
  for (size_t t = 0; t < envs.size(); ++t) {
    int pick = -1;
    Rational best_utility;
    Rational best_profit;
    for (size_t k = 0; k < alphas.size(); ++k) {
      const Rational utility = EvalUtility(envs[t], alphas[k]);
      const Rational profit =
          (Rational(1) - alphas[k]) * RightSlope(envs[t], alphas[k]);
      if (pick < 0 || utility > best_utility ||
          (utility == best_utility && profit > best_profit)) {
        pick = static_cast<int>(k);
        best_utility = utility;
        best_profit = profit;
      }
    }
    if (chosen) (*chosen)[t] = pick;
    total += weights[t] * best_profit;
  }
  return total;
}

}  // namespace contracts
