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

// Claim suites: each suite builds its instances, runs the solvers and
// compares the results with reference values by exact rational comparison.

#ifndef CONTRACTS_SUITES_H_
#define CONTRACTS_SUITES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contracts/rational.h"

namespace contracts {

enum class Comparator { kEq, kLe, kGe, kLt, kGt };
enum class Verdict { kPass, kFail, kSkipped, kWarn };

std::string ToString(Comparator cmp);
std::string ToString(Verdict verdict);
bool Compare(const Rational& lhs, Comparator cmp, const Rational& rhs);

struct Claim {
  std::string id;
  std::string anchor;   // what the claim asserts, in words
  std::optional<Rational> computed;  // absent when skipped
  Comparator cmp = Comparator::kEq;
  Rational reference;
  std::string weights;  // "prior", "unit", "uniform", ...
  bool hard = true;     // soft claims warn instead of failing
  Verdict verdict = Verdict::kSkipped;
  double seconds = 0;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, std::string>> digests;  // label, digest
  std::map<std::string, int64_t> stats;
  double seconds = 0;

  // True iff no hard claim failed.
  bool Passed() const;
  int Count(Verdict verdict) const;
};

struct SuiteOptions {
  std::optional<uint64_t> seed;  // suite default when absent
  int threads = 0;               // enumeration threads, 0 = hardware
};

// Known suite ids in run order.
std::vector<std::string> SuiteIds();

// Throws std::invalid_argument for an unknown id.
SuiteReport RunSuite(const std::string& id, const SuiteOptions& options = {});

std::string FormatText(const SuiteReport& report);
// One JSON object per line: claims, digests, statistics, then a summary.
std::string FormatMachine(const SuiteReport& report);

}  // namespace contracts

#endif  // CONTRACTS_SUITES_H_
