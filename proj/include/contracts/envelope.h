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

#ifndef CONTRACTS_ENVELOPE_H_
#define CONTRACTS_ENVELOPE_H_

#include <vector>

#include "contracts/instance.h"
#include "contracts/rational.h"

namespace contracts {

// The agent's utility from action `action` under linear contract alpha is
// reward * alpha - cost.
struct Line {
  int action = 0;
  Rational reward;
  Rational cost;

  friend bool operator==(const Line&, const Line&) = default;
};

// Upper envelope of a set of lines on [0, inf). Segment k is active on
// [breakpoints[k-1], breakpoints[k]) (with breakpoint -1 read as 0), so at a
// breakpoint the right segment, the one with the larger reward, is active.
class Envelope {
 public:
  Envelope() = default;
  Envelope(std::vector<Line> segments, std::vector<Rational> breakpoints);

  const std::vector<Line>& segments() const { return segments_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }

  // Index of the segment active on [alpha, alpha + delta).
  size_t SegmentAt(const Rational& alpha) const;

 private:
  std::vector<Line> segments_;
  std::vector<Rational> breakpoints_;
};

// Minimal segment set realizing max_i (R_i alpha - c_i) on [0, inf).
// Identical lines collapse to the lowest action id. Throws std::domain_error
// on empty input.
Envelope UpperEnvelope(std::vector<Line> lines);

// U(alpha). Throws std::domain_error for negative alpha.
Rational EvalUtility(const Envelope& env, const Rational& alpha);

// U'(alpha+), the slope of the segment active just right of alpha.
Rational RightSlope(const Envelope& env, const Rational& alpha);

// Utility-maximizing action with the largest expected reward, i.e. the
// principal-favoring choice under a linear contract.
int BestResponse(const Envelope& env, const Rational& alpha);

// Envelope of type t's actions (R^(t)_i, c_i).
Envelope TypeEnvelope(const Instance& instance, int type);
std::vector<Envelope> TypeEnvelopes(const Instance& instance);

// {0} union every type's breakpoints, sorted and deduplicated.
std::vector<Rational> MergedBreakpoints(const std::vector<Envelope>& envs);
std::vector<Rational> MergedBreakpoints(const Instance& instance);

}  // namespace contracts

#endif  // CONTRACTS_ENVELOPE_H_
