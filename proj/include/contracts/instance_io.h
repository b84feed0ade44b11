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

// JSON documents for instances and menus. Every number is a "p/q" string.
//
//   {"types": T, "outcomes": m, "rewards": [...], "prior": [...],
//    "actions": [[{"cost": c, "row": [...]}, ...], ...], "meta": {...}}
//
// Menus carry a "kind": "rlc" with "items" (per type, a list of
// {"alpha", "prob"}), "det" with "contracts", or "single" with "contract".

#ifndef CONTRACTS_INSTANCE_IO_H_
#define CONTRACTS_INSTANCE_IO_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "contracts/general_contracts.h"
#include "contracts/instance.h"
#include "contracts/rlc_menu.h"
#include "json.hpp"

namespace contracts {

// Malformed documents and unreadable files. The message names the field or
// the parser position.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json InstanceToJson(const Instance& instance);
// Throws FormatError on structural problems and on invariant violations.
Instance InstanceFromJson(const nlohmann::json& doc);

std::string DumpInstance(const Instance& instance);  // canonical text
Instance ParseInstance(const std::string& text);

Instance ReadInstance(const std::string& path);
void WriteInstance(const Instance& instance, const std::string& path);

// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string InstanceDigest(const Instance& instance);

using Menu = std::variant<RlcMenu, DetMenu, GeneralContract>;

nlohmann::json MenuToJson(const Menu& menu);
Menu MenuFromJson(const nlohmann::json& doc);
Menu ReadMenu(const std::string& path);
void WriteMenu(const Menu& menu, const std::string& path);

}  // namespace contracts

#endif  // CONTRACTS_INSTANCE_IO_H_
