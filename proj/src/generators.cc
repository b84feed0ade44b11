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

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace contracts {
namespace {

Action NullAction(int num_outcomes, int null_outcome) {
  Action a{Rational(0), std::vector<Rational>(num_outcomes)};
  a.row[null_outcome] = 1;
  return a;
}

// Fills the null outcome with the remaining probability.
Action WithRemainder(Rational cost, std::vector<Rational> row, int null_outcome) {
  row[null_outcome] = 0;
  row[null_outcome] = Rational(1) - Sum(row);
  return Action{std::move(cost), std::move(row)};
}

RlcFamily FinishRlc(SlopeSpec spec, RlcMenu menu,
                    std::map<std::string, std::string> meta) {
  RlcFamily family;
  family.instance = FromSlopes(spec);
  family.instance.meta = std::move(meta);
  ValidateOrThrow(family.instance);
  ValidateMenu(menu, family.instance.num_types());
  family.spec = std::move(spec);
  family.menu = std::move(menu);
  return family;
}

}  // namespace

RlcFamily GenExampleRlc(const Rational& eps) {
  if (eps.sign() <= 0 || eps >= rat(1, 2)) {
    throw std::invalid_argument("example-rlc needs 0 < eps < 1/2");
  }
  const Rational one = 1;
  SlopeSpec spec;
  spec.types.push_back({{one - eps}, {Rational(0), one / (2 * eps) - 1}});
  spec.types.push_back({{rat(1, 2)}, {rat(1, 2), one}});
  RlcMenu menu;
  menu.items.push_back({{Rational(0), rat(2, 3)}, {one - eps, rat(1, 3)}});
  menu.items.push_back({{rat(1, 2), one}});
  return FinishRlc(std::move(spec), std::move(menu),
                   {{"family", "example-rlc"}, {"eps", eps.ToString()}});
}

RlcFamily GenUnboundedRlc() {
  SlopeSpec spec;
  spec.types.push_back({{rat(2, 3), rat(4, 3)}, {rat(1, 5), rat(1, 4), Rational(1)}});
  spec.types.push_back({{rat(1, 3), rat(2, 3)}, {rat(1, 20), rat(1, 4), rat(7, 20)}});
  RlcMenu menu;
  menu.items.push_back(
      {{Rational(0), rat(3, 5)}, {rat(2, 3), rat(79, 200)}, {rat(5, 3), rat(1, 200)}});
  menu.items.push_back({{rat(1, 3), Rational(1)}});
  return FinishRlc(std::move(spec), std::move(menu), {{"family", "unbounded-rlc"}});
}

DetFamily GenOmegaN(int n, const Rational& gamma) {
  if (n < 12) throw std::invalid_argument("omega-n needs n >= 12");
  if (gamma.sign() <= 0 || gamma > rat(1, 3)) {
    throw std::invalid_argument("omega-n needs 0 < gamma <= 1/3");
  }
  const Rational nn = n;
  const Rational n_pow_n = PowInt(nn, n);
  const Rational scale = PowInt(nn, n + 1);
  const int m = 4;
  const int null_outcome = 3;

  // Shared costs; index 0 is the explicit null action.
  std::vector<Rational> cost(2 * n + 2);
  for (int i = 1; i <= n; ++i) {
    const Rational base = (PowInt(nn, i) - i) / scale;
    cost[i] = base;
    cost[n + i] = 4 * base;
  }

  Instance inst;
  inst.rewards = {Rational(1), Rational(0), Rational(1), Rational(0)};
  inst.actions.resize(3);
  const Rational type2_second = 4 * gamma / (PowInt(nn, n - 1) - 1);
  for (int i = 0; i <= 2 * n + 1; ++i) {
    std::vector<Rational> row1(m), row2(m);
    if (i >= 1 && i <= n) {
      row1[0] = PowInt(nn, i - 1 - n);
      row1[1] = (PowInt(nn, i) - i) / (n_pow_n - n) * gamma;
    }
    if (i > n && i <= 2 * n) {
      row2[1] = type2_second;
      row2[2] = 4 * PowInt(nn, i - n - 1 - n);
    }
    if (i == 2 * n + 1) row2[1] = type2_second;
    inst.actions[0].push_back(WithRemainder(cost[i], std::move(row1), null_outcome));
    inst.actions[1].push_back(WithRemainder(cost[i], std::move(row2), null_outcome));
    inst.actions[2].push_back(
        WithRemainder(cost[i], std::vector<Rational>(m), null_outcome));
  }
  const Rational tiny = Rational(1) / PowInt(nn, 2 * n);
  inst.prior = {tiny / 2, tiny / 2, Rational(1) - tiny};
  inst.meta = {{"family", "omega-n"}, {"n", std::to_string(n)},
               {"gamma", gamma.ToString()}};
  ValidateOrThrow(inst);

  DetFamily family;
  family.instance = std::move(inst);
  GeneralContract x1(m), x2(m);
  x1[1] = (PowInt(nn, n - 1) - 1) / (n_pow_n * gamma);
  x2[2] = 1;
  family.menu.contracts = {x1, x2, x2};
  return family;
}

Rational OmegaLogTBase(int num_types, int level) {
  return Rational(1) /
         (2 * Rational(num_types) * (Rational(1) - PowInt(Rational(2), -level)));
}

DetFamily GenOmegaLogT(int num_levels) {
  if (num_levels < 3) throw std::invalid_argument("omega-logt needs N >= 3");
  if (num_levels > 16) throw std::invalid_argument("omega-logt needs N <= 16");
  const int block = 1 << num_levels;
  const int num_types = num_levels * block + 1;
  const int m = num_types;
  const int null_outcome = m - 1;
  const Rational c1 = Rational(1) / (2 * Rational(num_types));

  Instance inst;
  inst.rewards.assign(m, Rational(0));
  inst.rewards[0] = 1;
  inst.actions.resize(num_types);
  inst.prior.resize(num_types);
  const Rational sixteen_pow = PowInt(Rational(16), num_levels);
  Rational used = 0;
  for (int k = 1; k <= num_levels; ++k) {
    const Rational base = OmegaLogTBase(num_types, k);
    const Rational spread = base / PowInt(Rational(2), k + 1);
    for (int l = 1; l <= block; ++l) {
      const int t = (k - 1) * block + l;  // 1-based type and outcome label
      std::vector<Rational> row1(m), row2(m);
      row1[0] = base;
      row1[t - 1] = base;
      for (int j = 2; j <= m - 1; ++j) {
        if (j != t) row2[j - 1] = spread;
      }
      std::vector<Action>& acts = inst.actions[t - 1];
      acts.push_back(NullAction(m, null_outcome));
      acts.push_back(WithRemainder(c1, std::move(row1), null_outcome));
      acts.push_back(WithRemainder(Rational(0), std::move(row2), null_outcome));
      inst.prior[t - 1] = PowInt(Rational(2), k - 1) / sixteen_pow;
      used += inst.prior[t - 1];
    }
  }
  std::vector<Action>& last = inst.actions[num_types - 1];
  last.push_back(NullAction(m, null_outcome));
  last.push_back(Action{c1, NullAction(m, null_outcome).row});
  last.push_back(NullAction(m, null_outcome));
  inst.prior[num_types - 1] = Rational(1) - used;
  inst.meta = {{"family", "omega-logt"}, {"N", std::to_string(num_levels)}};
  ValidateOrThrow(inst);

  DetFamily family;
  family.instance = std::move(inst);
  for (int k = 1; k <= num_levels; ++k) {
    for (int l = 1; l <= block; ++l) {
      const int t = (k - 1) * block + l;
      GeneralContract x(m);
      x[0] = rat(1, 2);
      if (t != 1) x[t - 1] = rat(1, 2) - PowInt(Rational(2), -(k + 1));
      family.menu.contracts.push_back(std::move(x));
    }
  }
  return family;
}

RlcFamily GenOmegaTRlc(int num_types) {
  if (num_types < 2) throw std::invalid_argument("omega-t-rlc needs T >= 2");
  const int T = num_types;
  const int n = 2 * T + 3;
  const Rational eta = Rational(1) / (2 * Rational(T));
  std::vector<Rational> alpha(n + 1);
  for (int i = 1; i < n; ++i) alpha[i] = Rational(1) - PowInt(eta, i);
  std::vector<Rational> height(n);
  for (int i = 0; i < n; ++i) {
    height[i] = PowInt(eta, -i) / (10 * Rational(n));
    if (i < n - 1) height[i] /= Rational(1) - eta;
  }
  SlopeSpec spec;
  RlcMenu menu;
  for (int t = 1; t <= T; ++t) {
    TypeSlopes ts;
    ts.breakpoints.assign(alpha.begin() + 1, alpha.begin() + n);
    for (int i = 0; i < n; ++i) {
      Rational mult = 1;
      if (i == t - 1 || i == n - t - 2) mult += T;
      if (i == t || i == n - t - 1) mult += rat(T, 2);
      ts.slopes.push_back(mult * height[i]);
    }
    spec.types.push_back(std::move(ts));
    menu.items.push_back({{alpha[t], rat(1, 2)}, {alpha[n - t - 1], rat(1, 2)}});
  }
  return FinishRlc(std::move(spec), std::move(menu),
                   {{"family", "omega-t-rlc"}, {"T", std::to_string(T)}});
}

Instance GenRandom(const RandomParams& params) {
  if (params.types < 1 || params.actions < 1 || params.outcomes < 1 ||
      params.grain < 1) {
    throw std::invalid_argument("random instance sizes must be positive");
  }
  std::mt19937_64 rng(params.seed);
  auto draw = [&rng](int lo, int hi) {  // uniform-ish integer in [lo, hi]
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };
  const int m = std::max(2, params.outcomes);
  const int actions =
      params.structure == RandomStructure::kTwoAction ? 2 : params.actions;
  const int g = params.grain;

  Instance inst;
  inst.rewards.assign(m, Rational(0));
  bool positive = false;
  for (int j = 1; j < m; ++j) {
    inst.rewards[j] = rat(draw(0, g), g);
    positive = positive || inst.rewards[j].sign() > 0;
  }
  if (!positive) inst.rewards[draw(1, m - 1)] = 1;

  std::vector<int> prior_weights;
  int prior_total = 0;
  for (int t = 0; t < params.types; ++t) {
    prior_weights.push_back(draw(1, g));
    prior_total += prior_weights.back();
  }
  for (int t = 0; t < params.types; ++t) {
    inst.prior.push_back(rat(prior_weights[t], prior_total));
  }

  inst.actions.resize(params.types);
  for (int t = 0; t < params.types; ++t) {
    inst.actions[t].push_back(NullAction(m, 0));
    for (int i = 1; i < actions; ++i) {
      std::vector<int> w(m);
      int total = 0;
      for (int j = 0; j < m; ++j) {
        w[j] = draw(0, g);
        total += w[j];
      }
      if (total == 0) {
        w[draw(0, m - 1)] = 1;
        total = 1;
      }
      Action a;
      a.cost = rat(draw(0, g), 2 * g);
      for (int j = 0; j < m; ++j) a.row.push_back(rat(w[j], total));
      inst.actions[t].push_back(std::move(a));
    }
  }
  inst.meta = {{"family", "random"},
               {"seed", std::to_string(params.seed)},
               {"structure", params.structure == RandomStructure::kTwoAction
                                 ? "two-action"
                                 : "general"}};
  ValidateOrThrow(inst);
  return inst;
}

}  // namespace contracts
