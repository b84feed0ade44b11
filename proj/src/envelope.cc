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

#include "contracts/envelope.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace contracts {
namespace {

// Alpha where line b overtakes line a; requires b.reward > a.reward.
Rational Crossing(const Line& a, const Line& b) {
  return (b.cost - a.cost) / (b.reward - a.reward);
}

}  // namespace

Envelope::Envelope(std::vector<Line> segments, std::vector<Rational> breakpoints)
    : segments_(std::move(segments)), breakpoints_(std::move(breakpoints)) {
  if (segments_.empty() || breakpoints_.size() + 1 != segments_.size()) {
    throw std::invalid_argument("envelope needs one more segment than breakpoints");
  }
}

size_t Envelope::SegmentAt(const Rational& alpha) const {
  return static_cast<size_t>(
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), alpha) -
      breakpoints_.begin());
}

Envelope UpperEnvelope(std::vector<Line> lines) {
  if (lines.empty()) throw std::domain_error("envelope of no lines");

  // By reward ascending; among equal rewards the cheapest, then lowest id.
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.reward != b.reward) return a.reward < b.reward;
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.action < b.action;
  });
  std::vector<Line> unique;
  for (Line& line : lines) {
    if (!unique.empty() && unique.back().reward == line.reward) continue;
    unique.push_back(std::move(line));
  }

  // The segment active at alpha = 0 is the cheapest line with the largest
  // reward; lines with smaller reward are dominated on all of [0, inf).
  size_t first = 0;
  for (size_t k = 1; k < unique.size(); ++k) {
    if (unique[k].cost <= unique[first].cost) first = k;
  }

  std::vector<Line> hull;
  for (size_t k = first; k < unique.size(); ++k) {
    const Line& line = unique[k];
    // The middle line only touches the envelope at a point (or not at all).
    while (hull.size() >= 2 &&
           Crossing(hull[hull.size() - 2], line) <=
               Crossing(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(line);
  }

  std::vector<Rational> breakpoints;
  breakpoints.reserve(hull.size() - 1);
  for (size_t k = 1; k < hull.size(); ++k) {
    breakpoints.push_back(Crossing(hull[k - 1], hull[k]));
  }
  return Envelope(std::move(hull), std::move(breakpoints));
}

Rational EvalUtility(const Envelope& env, const Rational& alpha) {
  if (alpha.sign() < 0) throw std::domain_error("negative transfer coefficient");
  const Line& line = env.segments()[env.SegmentAt(alpha)];
  return line.reward * alpha - line.cost;
}

Rational RightSlope(const Envelope& env, const Rational& alpha) {
  return env.segments()[env.SegmentAt(alpha)].reward;
}

int BestResponse(const Envelope& env, const Rational& alpha) {
  return env.segments()[env.SegmentAt(alpha)].action;
}

Envelope TypeEnvelope(const Instance& instance, int type) {
  std::vector<Line> lines;
  lines.reserve(instance.actions.at(type).size());
  for (int i = 0; i < instance.num_actions(type); ++i) {
    lines.push_back(Line{i, instance.ExpectedReward(type, i),
                         instance.actions[type][i].cost});
  }
  return UpperEnvelope(std::move(lines));
}

std::vector<Envelope> TypeEnvelopes(const Instance& instance) {
  std::vector<Envelope> envs;
  envs.reserve(instance.actions.size());
  for (int t = 0; t < instance.num_types(); ++t) {
    envs.push_back(TypeEnvelope(instance, t));
  }
  return envs;
}

std::vector<Rational> MergedBreakpoints(const std::vector<Envelope>& envs) {
  std::vector<Rational> points = {Rational(0)};
  for (const Envelope& env : envs) {
    points.insert(points.end(), env.breakpoints().begin(),
                  env.breakpoints().end());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<Rational> MergedBreakpoints(const Instance& instance) {
  return MergedBreakpoints(TypeEnvelopes(instance));
}

}  // namespace contracts
