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

#include "contracts/instance.h"

#include <sstream>
#include <stdexcept>

#include "contracts/envelope.h"

namespace contracts {

Rational Instance::ExpectedReward(int type, int action) const {
  return Dot(actions.at(type).at(action).row, rewards);
}

Rational Instance::ExpectedPayment(int type, int action,
                                   const std::vector<Rational>& payments) const {
  return Dot(actions.at(type).at(action).row, payments);
}

bool Instance::SameActions(const Instance& a, const Instance& b) {
  for (size_t t = 0; t < a.actions.size(); ++t) {
    if (a.actions[t].size() != b.actions[t].size()) return false;
    for (size_t i = 0; i < a.actions[t].size(); ++i) {
      if (a.actions[t][i].cost != b.actions[t][i].cost ||
          a.actions[t][i].row != b.actions[t][i].row) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::string> Validate(const Instance& instance) {
  std::vector<std::string> out;
  const int m = instance.num_outcomes();
  const int num_types = instance.num_types();
  if (m == 0) out.push_back("instance has no outcomes");
  if (num_types == 0) out.push_back("instance has no types");
  for (int j = 0; j < m; ++j) {
    if (instance.rewards[j].sign() < 0) {
      out.push_back("reward " + std::to_string(j) + " is negative");
    }
  }

  if (static_cast<int>(instance.prior.size()) != num_types) {
    out.push_back("prior has " + std::to_string(instance.prior.size()) +
                  " entries, expected " + std::to_string(num_types));
  } else {
    for (int t = 0; t < num_types; ++t) {
      if (instance.prior[t].sign() < 0) {
        out.push_back("prior entry " + std::to_string(t) + " is negative");
      }
    }
    const Rational total = Sum(instance.prior);
    if (num_types > 0 && total != 1) {
      out.push_back("prior sums to " + total.ToString());
    }
  }

  for (int t = 0; t < num_types; ++t) {
    const std::string type_name = "type " + std::to_string(t);
    if (instance.actions[t].empty()) {
      out.push_back(type_name + " has no actions");
      continue;
    }
    bool has_null = false;
    for (int i = 0; i < instance.num_actions(t); ++i) {
      const Action& action = instance.actions[t][i];
      const std::string name = type_name + " action " + std::to_string(i);
      if (action.cost.sign() < 0) out.push_back(name + " cost is negative");
      if (static_cast<int>(action.row.size()) != m) {
        out.push_back(name + " row has " + std::to_string(action.row.size()) +
                      " entries, expected " + std::to_string(m));
        continue;
      }
      bool row_ok = true;
      for (int j = 0; j < m; ++j) {
        if (action.row[j].sign() < 0) {
          out.push_back(name + " entry " + std::to_string(j) + " is negative");
          row_ok = false;
        }
      }
      const Rational total = Sum(action.row);
      if (total != 1) {
        out.push_back(name + " row sums to " + total.ToString());
        row_ok = false;
      }
      if (row_ok && action.cost.is_zero()) {
        for (int j = 0; j < m; ++j) {
          if (action.row[j] == 1 && instance.rewards[j].is_zero()) {
            has_null = true;
          }
        }
      }
    }
    if (!has_null) out.push_back(type_name + " has no null action");
  }
  return out;
}

void ValidateOrThrow(const Instance& instance) {
  const std::vector<std::string> violations = Validate(instance);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const std::string& v : violations) msg << "\n  " << v;
  throw std::invalid_argument(msg.str());
}

std::vector<std::string> ValidateSlopes(const SlopeSpec& spec) {
  std::vector<std::string> out;
  if (spec.types.empty()) out.push_back("slope spec has no types");
  for (size_t t = 0; t < spec.types.size(); ++t) {
    const TypeSlopes& ts = spec.types[t];
    const std::string name = "type " + std::to_string(t);
    if (ts.slopes.empty()) {
      out.push_back(name + " has no slopes");
      continue;
    }
    if (ts.slopes.size() != ts.breakpoints.size() + 1) {
      out.push_back(name + " needs exactly one more slope than breakpoints");
    }
    for (size_t k = 0; k < ts.slopes.size(); ++k) {
      if (ts.slopes[k].sign() < 0) {
        out.push_back(name + " slope " + std::to_string(k) + " is negative");
      }
      if (k > 0 && !(ts.slopes[k - 1] < ts.slopes[k])) {
        out.push_back(name + " slopes not strictly increasing at " +
                      std::to_string(k));
      }
    }
    for (size_t k = 0; k < ts.breakpoints.size(); ++k) {
      if (ts.breakpoints[k].sign() <= 0) {
        out.push_back(name + " breakpoint " + std::to_string(k) +
                      " is not positive");
      }
      if (k > 0 && !(ts.breakpoints[k - 1] < ts.breakpoints[k])) {
        out.push_back(name + " breakpoints not strictly increasing at " +
                      std::to_string(k));
      }
    }
  }
  if (spec.prior) {
    if (spec.prior->size() != spec.types.size()) {
      out.push_back("prior size does not match type count");
    } else {
      for (const Rational& p : *spec.prior) {
        if (p.sign() < 0) out.push_back("prior has a negative entry");
      }
      if (Sum(*spec.prior) != 1) out.push_back("prior does not sum to 1");
    }
  }
  return out;
}

Instance FromSlopes(const SlopeSpec& spec) {
  for (const TypeSlopes& ts : spec.types) {
    if (ts.slopes.empty()) throw std::domain_error("empty slope list");
  }
  const std::vector<std::string> violations = ValidateSlopes(spec);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid slope spec: " + violations.front());
  }

  Rational top = 0;
  for (const TypeSlopes& ts : spec.types) top = Max(top, ts.slopes.back());
  const Rational scale = top.is_zero() ? Rational(1) : top;

  Instance instance;
  instance.rewards = {scale, Rational(0)};
  instance.prior = spec.prior ? *spec.prior
                              : UniformPrior(static_cast<int>(spec.types.size()));
  for (const TypeSlopes& ts : spec.types) {
    std::vector<Action> actions;
    if (ts.slopes.front().sign() > 0) {
      actions.push_back(Action{Rational(0), {Rational(0), Rational(1)}});
    }
    Rational cost = 0;
    for (size_t k = 0; k < ts.slopes.size(); ++k) {
      if (k > 0) cost += ts.breakpoints[k - 1] * (ts.slopes[k] - ts.slopes[k - 1]);
      const Rational success = ts.slopes[k] / scale;
      actions.push_back(Action{cost, {success, Rational(1) - success}});
    }
    instance.actions.push_back(std::move(actions));
  }
  return instance;
}

SlopeSpec UtilitiesOf(const Instance& instance) {
  SlopeSpec spec;
  for (const Envelope& env : TypeEnvelopes(instance)) {
    TypeSlopes ts;
    ts.breakpoints = env.breakpoints();
    for (const Line& line : env.segments()) ts.slopes.push_back(line.reward);
    spec.types.push_back(std::move(ts));
  }
  spec.prior = instance.prior;
  return spec;
}

std::vector<Rational> UniformPrior(int num_types) {
  if (num_types <= 0) return {};
  return std::vector<Rational>(static_cast<size_t>(num_types),
                               rat(1, num_types));
}

}  // namespace contracts
