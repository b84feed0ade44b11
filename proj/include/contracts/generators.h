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

// Deterministic instance families. Each named family comes with the menu
// that witnesses its gap. In explicit instances action 0 is the null action.

#ifndef CONTRACTS_GENERATORS_H_
#define CONTRACTS_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "contracts/general_contracts.h"
#include "contracts/instance.h"
#include "contracts/rational.h"
#include "contracts/rlc_menu.h"

namespace contracts {

struct RlcFamily {
  SlopeSpec spec;
  Instance instance;
  RlcMenu menu;
};

struct DetFamily {
  Instance instance;
  DetMenu menu;  // menu.contracts[t] is the contract meant for type t
};

// Two types with a shared breakpoint structure where a randomized menu beats
// every linear contract. Requires 0 < eps < 1/2.
RlcFamily GenExampleRlc(const Rational& eps);

// Two types whose best randomized menu needs a coefficient above 1.
RlcFamily GenUnboundedRlc();

// Three types, four outcomes, 2n + 2 actions per type. A two-contract menu
// earns order n^-n from the first two types while every single contract
// earns order n^-(n+1). Requires n >= 12 and 0 < gamma <= 1/3.
DetFamily GenOmegaN(int n, const Rational& gamma = rat(1, 3));

// T = N 2^N + 1 types and outcomes, two non-null actions. Requires N >= 3.
// The menu has T - 1 contracts; the last type is meant to take contract 0.
DetFamily GenOmegaLogT(int num_levels);

// Breakpoint coefficients of GenOmegaLogT: 1 / (2T (1 - 2^-k)) for level k.
Rational OmegaLogTBase(int num_types, int level);

// T types with 2T + 3 utility pieces each, uniform prior; a randomized menu
// earns order T times the best linear contract. Requires T >= 2.
RlcFamily GenOmegaTRlc(int num_types);

enum class RandomStructure { kGeneral, kTwoAction };

struct RandomParams {
  uint64_t seed = 1;
  int types = 2;
  int actions = 3;   // per type, including the null action
  int outcomes = 2;  // including the zero-reward null outcome; at least 2
  RandomStructure structure = RandomStructure::kGeneral;
  int grain = 10;    // probabilities, costs and rewards are multiples of 1/grain
};

// Deterministic for fixed parameters on every platform.
Instance GenRandom(const RandomParams& params);

}  // namespace contracts

#endif  // CONTRACTS_GENERATORS_H_
