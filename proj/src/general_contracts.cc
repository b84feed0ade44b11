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

#include "contracts/general_contracts.h"

#include <algorithm>
#include <cstdint>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "contracts/simplex.h"

namespace contracts {
namespace {

void CheckWeights(const Instance& instance, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != instance.num_types()) {
    throw std::invalid_argument("one weight per type required");
  }
}

// Decodes a mixed-radix index into one candidate per type; the first type is
// the most significant digit so index order is lexicographic profile order.
std::vector<int> Decode(int64_t index,
                        const std::vector<std::vector<int>>& candidates) {
  std::vector<int> profile(candidates.size());
  for (size_t t = candidates.size(); t-- > 0;) {
    const int64_t radix = static_cast<int64_t>(candidates[t].size());
    profile[t] = candidates[t][index % radix];
    index /= radix;
  }
  return profile;
}

struct ProfileSolution {
  Rational value;
  std::vector<Rational> x;
};

// Runs `solve` on every profile and keeps the best, ties to the lowest index.
template <typename SolveFn>
std::optional<std::pair<int64_t, ProfileSolution>> Enumerate(
    const std::vector<std::vector<int>>& candidates, int64_t total,
    int threads, EnumStats* stats, SolveFn solve) {
  std::atomic<int64_t> next{0};
  std::mutex mu;
  std::optional<std::pair<int64_t, ProfileSolution>> best;
  auto worker = [&]() {
    std::optional<std::pair<int64_t, ProfileSolution>> local;
    int64_t feasible = 0;
    int64_t pivots = 0;
    while (true) {
      const int64_t index = next.fetch_add(1);
      if (index >= total) break;
      const std::vector<int> profile = Decode(index, candidates);
      LpOutcome out = solve(profile);
      pivots += out.pivots;
      if (out.status != LpStatus::kOptimal) continue;
      ++feasible;
      if (!local || out.value > local->second.value) {
        local = std::make_pair(index, ProfileSolution{out.value, std::move(out.x)});
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    stats->feasible += feasible;
    stats->pivots += pivots;
    if (!local) return;
    if (!best || local->second.value > best->second.value ||
        (local->second.value == best->second.value && local->first < best->first)) {
      best = std::move(local);
    }
  };
  int n = threads > 0 ? threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n = static_cast<int>(std::min<int64_t>(n, std::max<int64_t>(total, 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return best;
}

Rational WeightedReward(const Instance& instance,
                        const std::vector<Rational>& weights,
                        const std::vector<int>& profile) {
  Rational total = 0;
  for (int t = 0; t < instance.num_types(); ++t) {
    total += weights[t] * instance.ExpectedReward(t, profile[t]);
  }
  return total;
}

}  // namespace

ProfileCapExceeded::ProfileCapExceeded(int64_t profiles)
    : std::runtime_error("profile count " + std::to_string(profiles) +
                         " exceeds the cap"),
      profiles_(profiles) {}

std::vector<std::vector<int>> CandidateActions(const Instance& instance,
                                               bool prune) {
  std::vector<std::vector<int>> out(instance.num_types());
  for (int t = 0; t < instance.num_types(); ++t) {
    if (!prune) {
      for (int i = 0; i < instance.num_actions(t); ++i) out[t].push_back(i);
      continue;
    }
    std::map<std::vector<std::string>, int> by_row;
    for (int i = 0; i < instance.num_actions(t); ++i) {
      std::vector<std::string> key;
      for (const Rational& p : instance.actions[t][i].row) key.push_back(p.ToString());
      auto [it, inserted] = by_row.emplace(std::move(key), i);
      if (!inserted &&
          instance.actions[t][i].cost < instance.actions[t][it->second].cost) {
        it->second = i;
      }
    }
    for (const auto& [row, action] : by_row) out[t].push_back(action);
    std::sort(out[t].begin(), out[t].end());
  }
  return out;
}

int64_t CountProfiles(const Instance& instance, bool prune) {
  int64_t count = 1;
  for (const std::vector<int>& c : CandidateActions(instance, prune)) {
    const int64_t size = static_cast<int64_t>(c.size());
    if (size == 0) return 0;
    if (count > INT64_MAX / size) return INT64_MAX;
    count *= size;
  }
  return count;
}

SingleResult OptSingle(const Instance& instance,
                       const std::vector<Rational>& weights,
                       const EnumOptions& options) {
  ValidateOrThrow(instance);
  CheckWeights(instance, weights);
  const auto candidates = CandidateActions(instance, options.prune);
  const int64_t total = CountProfiles(instance, options.prune);
  if (total > options.profile_cap) throw ProfileCapExceeded(total);

  const int m = instance.num_outcomes();
  const int num_types = instance.num_types();
  SingleResult result;
  result.stats.profiles = total;
  for (int t = 0; t < num_types; ++t) {
    result.stats.collapsed_actions +=
        instance.num_actions(t) - static_cast<int64_t>(candidates[t].size());
  }

  auto solve = [&](const std::vector<int>& profile) {
    LinearProgram lp;
    for (int j = 0; j < m; ++j) {
      Rational cost = 0;
      for (int t = 0; t < num_types; ++t) {
        cost -= weights[t] * instance.actions[t][profile[t]].row[j];
      }
      lp.AddVariable(cost);
    }
    for (int t = 0; t < num_types; ++t) {
      const Action& target = instance.actions[t][profile[t]];
      for (int i : candidates[t]) {
        if (i == profile[t]) continue;
        const Action& other = instance.actions[t][i];
        std::vector<Rational> row(m);
        for (int j = 0; j < m; ++j) row[j] = target.row[j] - other.row[j];
        lp.AddConstraint(std::move(row), Relation::kGreaterEqual,
                         target.cost - other.cost);
      }
    }
    LpOutcome out = Solve(lp);
    out.value += WeightedReward(instance, weights, profile);
    return out;
  };

  auto best = Enumerate(candidates, total, options.threads, &result.stats, solve);
  if (!best) throw std::logic_error("no implementable action assignment");
  result.profile = Decode(best->first, candidates);
  result.contract = best->second.x;
  result.value = best->second.value;
  return result;
}

DetMenuResult OptDetMenu(const Instance& instance,
                         const std::vector<Rational>& weights,
                         const EnumOptions& options) {
  ValidateOrThrow(instance);
  CheckWeights(instance, weights);
  const auto candidates = CandidateActions(instance, options.prune);
  const int64_t total = CountProfiles(instance, options.prune);
  if (total > options.profile_cap) throw ProfileCapExceeded(total);

  const int m = instance.num_outcomes();
  const int num_types = instance.num_types();
  DetMenuResult result;
  result.stats.profiles = total;
  for (int t = 0; t < num_types; ++t) {
    result.stats.collapsed_actions +=
        instance.num_actions(t) - static_cast<int64_t>(candidates[t].size());
  }
  auto var = [m](int t, int j) { return t * m + j; };

  auto solve = [&](const std::vector<int>& profile) {
    LinearProgram lp;
    for (int t = 0; t < num_types; ++t) {
      for (int j = 0; j < m; ++j) {
        lp.AddVariable(-weights[t] * instance.actions[t][profile[t]].row[j]);
      }
    }
    const int n = lp.num_variables();
    for (int t = 0; t < num_types; ++t) {
      const Action& target = instance.actions[t][profile[t]];
      for (int s = 0; s < num_types; ++s) {
        for (int i : candidates[t]) {
          if (s == t && i == profile[t]) continue;
          const Action& other = instance.actions[t][i];
          std::vector<Rational> row(n);
          for (int j = 0; j < m; ++j) {
            row[var(t, j)] += target.row[j];
            row[var(s, j)] -= other.row[j];
          }
          lp.AddConstraint(std::move(row), Relation::kGreaterEqual,
                           target.cost - other.cost);
        }
      }
    }
    LpOutcome out = Solve(lp);
    out.value += WeightedReward(instance, weights, profile);
    return out;
  };

  auto best = Enumerate(candidates, total, options.threads, &result.stats, solve);
  if (!best) throw std::logic_error("no implementable action assignment");
  result.profile = Decode(best->first, candidates);
  for (int t = 0; t < num_types; ++t) {
    result.menu.contracts.emplace_back(best->second.x.begin() + var(t, 0),
                                       best->second.x.begin() + var(t, m));
  }
  result.value = best->second.value;
  return result;
}

ContractEvaluation EvaluateDetMenu(const Instance& instance,
                                   const DetMenu& menu,
                                   const std::vector<Rational>& weights) {
  CheckWeights(instance, weights);
  if (menu.contracts.empty()) throw std::domain_error("empty menu");
  for (const GeneralContract& x : menu.contracts) {
    if (static_cast<int>(x.size()) != instance.num_outcomes()) {
      throw std::domain_error("contract length does not match outcomes");
    }
    for (const Rational& v : x) {
      if (v.sign() < 0) throw std::domain_error("negative payment");
    }
  }
  ContractEvaluation ev;
  ev.value = 0;
  for (int t = 0; t < instance.num_types(); ++t) {
    std::optional<Response> best;
    bool tie = false;
    for (size_t k = 0; k < menu.contracts.size(); ++k) {
      for (int i = 0; i < instance.num_actions(t); ++i) {
        const Rational pay = instance.ExpectedPayment(t, i, menu.contracts[k]);
        Response r{static_cast<int>(k), i, pay - instance.actions[t][i].cost,
                   instance.ExpectedReward(t, i) - pay, false};
        if (!best || r.utility > best->utility) {
          best = r;
          tie = false;
        } else if (r.utility == best->utility) {
          tie = true;
          if (r.profit > best->profit) best = r;
        }
      }
    }
    best->tie_broken = tie;
    ev.value += weights[t] * best->profit;
    ev.responses.push_back(*best);
  }
  return ev;
}

ContractEvaluation EvaluateSingle(const Instance& instance,
                                  const GeneralContract& x,
                                  const std::vector<Rational>& weights) {
  return EvaluateDetMenu(instance, DetMenu{{x}}, weights);
}

}  // namespace contracts
