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

#include <algorithm>
#include <stdexcept>
#include <string>

namespace contracts {
namespace {

std::vector<Rational> SortedUnique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Expected utility and principal profit of type `env` facing `items`.
void Score(const Envelope& env, const std::vector<RlcItem>& items,
           Rational* utility, Rational* profit) {
  *utility = 0;
  *profit = 0;
  for (const RlcItem& item : items) {
    if (item.prob.is_zero()) continue;
    *utility += item.prob * EvalUtility(env, item.alpha);
    *profit += item.prob * (Rational(1) - item.alpha) *
               RightSlope(env, item.alpha);
  }
}

}  // namespace

void ValidateMenu(const RlcMenu& menu, int num_types) {
  if (static_cast<int>(menu.items.size()) != num_types) {
    throw std::domain_error("menu needs one item list per type");
  }
  for (size_t t = 0; t < menu.items.size(); ++t) {
    const std::vector<RlcItem>& items = menu.items[t];
    const std::string name = "menu list " + std::to_string(t);
    if (items.empty()) throw std::domain_error(name + " is empty");
    Rational total = 0;
    std::vector<Rational> alphas;
    for (const RlcItem& item : items) {
      if (item.alpha.sign() < 0) {
        throw std::domain_error(name + " has a negative coefficient");
      }
      if (item.prob.sign() < 0) {
        throw std::domain_error(name + " has a negative probability");
      }
      total += item.prob;
      alphas.push_back(item.alpha);
    }
    if (total != 1) {
      throw std::domain_error(name + " probabilities sum to " + total.ToString());
    }
    if (SortedUnique(alphas).size() != alphas.size()) {
      throw std::domain_error(name + " repeats a coefficient");
    }
  }
}

RlcLp BuildRlcLp(const Instance& instance, const std::vector<Rational>& weights,
                 bool bounded, const std::vector<Rational>& extra_support) {
  const int num_types = instance.num_types();
  if (static_cast<int>(weights.size()) != num_types) {
    throw std::invalid_argument("one weight per type required");
  }
  const std::vector<Envelope> envs = TypeEnvelopes(instance);
  const std::vector<Rational> merged = MergedBreakpoints(envs);

  RlcLp out;
  out.bounded = bounded;
  out.last_breakpoint = merged.back();
  std::vector<Rational> support = extra_support;
  for (const Rational& a : extra_support) {
    if (a.sign() < 0) throw std::domain_error("negative support coefficient");
  }
  if (bounded) {
    for (const Rational& a : merged) {
      if (a <= 1) support.push_back(a);
    }
    support.push_back(Rational(1));
  } else {
    support.insert(support.end(), merged.begin(), merged.end());
  }
  out.support = SortedUnique(std::move(support));
  const size_t k = out.support.size();
  const Rational& last = out.last_breakpoint;

  // Per-type tables over the support.
  std::vector<std::vector<Rational>> utility(num_types), margin(num_types);
  std::vector<Rational> last_slope(num_types), last_utility(num_types);
  for (int t = 0; t < num_types; ++t) {
    for (const Rational& a : out.support) {
      utility[t].push_back(EvalUtility(envs[t], a));
      margin[t].push_back((Rational(1) - a) * RightSlope(envs[t], a));
    }
    last_slope[t] = RightSlope(envs[t], last);
    last_utility[t] = EvalUtility(envs[t], last);
  }

  LinearProgram& lp = out.lp;
  out.mass.assign(num_types, {});
  out.tail.assign(num_types, -1);
  out.tail_moment.assign(num_types, -1);
  for (int t = 0; t < num_types; ++t) {
    for (size_t i = 0; i < k; ++i) {
      out.mass[t].push_back(lp.AddVariable(weights[t] * margin[t][i]));
    }
    if (!bounded) {
      out.tail[t] = lp.AddVariable(weights[t] * last_slope[t]);
      out.tail_moment[t] = lp.AddVariable(-weights[t] * last_slope[t]);
    }
  }
  const int n = lp.num_variables();

  // Coefficients of type t's expected utility from list s.
  auto add_utility = [&](std::vector<Rational>& row, int t, int s,
                         const Rational& sign) {
    for (size_t i = 0; i < k; ++i) row[out.mass[s][i]] += sign * utility[t][i];
    if (!bounded) {
      row[out.tail[s]] += sign * (last_utility[t] - last_slope[t] * last);
      row[out.tail_moment[s]] += sign * last_slope[t];
    }
  };

  for (int t = 0; t < num_types; ++t) {
    for (int s = 0; s < num_types; ++s) {
      if (s == t) continue;
      std::vector<Rational> row(n);
      add_utility(row, t, t, Rational(1));
      add_utility(row, t, s, Rational(-1));
      lp.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
    }
  }
  for (int t = 0; t < num_types; ++t) {
    std::vector<Rational> row(n);
    for (size_t i = 0; i < k; ++i) row[out.mass[t][i]] = 1;
    if (!bounded) row[out.tail[t]] = 1;
    lp.AddConstraint(std::move(row), Relation::kEqual, Rational(1));
  }
  if (!bounded) {
    for (int t = 0; t < num_types; ++t) {
      std::vector<Rational> row(n);
      row[out.tail[t]] = last;
      row[out.tail_moment[t]] = -1;
      lp.AddConstraint(std::move(row), Relation::kLessEqual, Rational(0));
    }
  }
  return out;
}

RlcResult OptRlcMenu(const Instance& instance,
                     const std::vector<Rational>& weights, bool bounded,
                     const std::vector<Rational>& extra_support) {
  const RlcLp built = BuildRlcLp(instance, weights, bounded, extra_support);
  const LpOutcome solved = Solve(built.lp);
  if (solved.status != LpStatus::kOptimal) {
    throw std::logic_error("menu program is " + ToString(solved.status));
  }
  RlcResult result;
  result.value = solved.value;
  result.support = built.support;
  result.pivots = solved.pivots;
  const int num_types = instance.num_types();
  result.menu.items.resize(num_types);
  for (int t = 0; t < num_types; ++t) {
    std::vector<Rational> masses;
    std::vector<RlcItem>& items = result.menu.items[t];
    for (size_t i = 0; i < built.support.size(); ++i) {
      const Rational& mass = solved.x[built.mass[t][i]];
      masses.push_back(mass);
      if (mass.sign() > 0) items.push_back({built.support[i], mass});
    }
    result.masses.push_back(std::move(masses));
    if (bounded) continue;
    const Rational& tail = solved.x[built.tail[t]];
    const Rational& moment = solved.x[built.tail_moment[t]];
    result.tail_mass.push_back(tail);
    result.tail_moment.push_back(moment);
    if (tail.sign() <= 0) continue;
    const Rational alpha = moment / tail;
    auto same = std::find_if(items.begin(), items.end(),
                             [&](const RlcItem& it) { return it.alpha == alpha; });
    if (same != items.end()) {
      same->prob += tail;
    } else {
      items.push_back({alpha, tail});
      std::sort(items.begin(), items.end(),
                [](const RlcItem& a, const RlcItem& b) { return a.alpha < b.alpha; });
    }
  }
  return result;
}

RlcEvaluation EvaluateRlcMenu(const std::vector<Envelope>& envs,
                              const RlcMenu& menu,
                              const std::vector<Rational>& weights) {
  const int num_types = static_cast<int>(envs.size());
  if (static_cast<int>(weights.size()) != num_types) {
    throw std::invalid_argument("one weight per type required");
  }
  ValidateMenu(menu, num_types);
  RlcEvaluation ev;
  ev.value = 0;
  ev.utilities.assign(num_types, std::vector<Rational>(num_types));
  std::vector<std::vector<Rational>> profit(num_types,
                                            std::vector<Rational>(num_types));
  for (int t = 0; t < num_types; ++t) {
    for (int s = 0; s < num_types; ++s) {
      Score(envs[t], menu.items[s], &ev.utilities[t][s], &profit[t][s]);
    }
  }
  ev.all_strict = true;
  ev.incentive_compatible = true;
  for (int t = 0; t < num_types; ++t) {
    int pick = 0;
    for (int s = 1; s < num_types; ++s) {
      const Rational& u = ev.utilities[t][s];
      const Rational& best = ev.utilities[t][pick];
      if (u > best || (u == best && profit[t][s] > profit[t][pick])) pick = s;
    }
    bool unique = true;
    for (int s = 0; s < num_types; ++s) {
      if (s != pick && ev.utilities[t][s] == ev.utilities[t][pick]) unique = false;
    }
    ev.chosen.push_back(pick);
    ev.strict.push_back(unique);
    ev.profits.push_back(profit[t][pick]);
    ev.all_strict = ev.all_strict && unique;
    ev.incentive_compatible = ev.incentive_compatible && pick == t;
    ev.value += weights[t] * profit[t][pick];
  }
  return ev;
}

RlcEvaluation EvaluateRlcMenu(const Instance& instance, const RlcMenu& menu,
                              const std::vector<Rational>& weights) {
  return EvaluateRlcMenu(TypeEnvelopes(instance), menu, weights);
}

}  // namespace contracts
