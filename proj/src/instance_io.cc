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

#include "contracts/instance_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace contracts {
namespace {

using nlohmann::json;

json RationalList(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(v.ToString());
  return out;
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw FormatError(where + ": missing field \"" + key + "\"");
  }
  return obj.at(key);
}

Rational ParseRational(const json& value, const std::string& where) {
  if (!value.is_string()) throw FormatError(where + ": expected a \"p/q\" string");
  try {
    return Rational::Parse(value.get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError(where + ": " + e.what());
  }
}

std::vector<Rational> ParseList(const json& value, const std::string& where) {
  if (!value.is_array()) throw FormatError(where + ": expected an array");
  std::vector<Rational> out;
  for (size_t i = 0; i < value.size(); ++i) {
    out.push_back(ParseRational(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int ParseCount(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<int64_t>() < 0) {
    throw FormatError(where + ": expected a nonnegative integer");
  }
  return value.get<int>();
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WriteText(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError(path + ": cannot open for writing");
  out << text << "\n";
  if (!out) throw FormatError(path + ": write failed");
}

}  // namespace

json InstanceToJson(const Instance& instance) {
  json doc;
  doc["types"] = instance.num_types();
  doc["outcomes"] = instance.num_outcomes();
  doc["rewards"] = RationalList(instance.rewards);
  doc["prior"] = RationalList(instance.prior);
  json actions = json::array();
  for (const std::vector<Action>& type_actions : instance.actions) {
    json list = json::array();
    for (const Action& a : type_actions) {
      list.push_back({{"cost", a.cost.ToString()}, {"row", RationalList(a.row)}});
    }
    actions.push_back(std::move(list));
  }
  doc["actions"] = std::move(actions);
  doc["meta"] = json::object();
  for (const auto& [k, v] : instance.meta) doc["meta"][k] = v;
  return doc;
}

Instance InstanceFromJson(const json& doc) {
  if (!doc.is_object()) throw FormatError("instance: expected an object");
  Instance inst;
  const int types = ParseCount(Field(doc, "types", "instance"), "types");
  const int outcomes = ParseCount(Field(doc, "outcomes", "instance"), "outcomes");
  inst.rewards = ParseList(Field(doc, "rewards", "instance"), "rewards");
  inst.prior = ParseList(Field(doc, "prior", "instance"), "prior");
  const json& actions = Field(doc, "actions", "instance");
  if (!actions.is_array()) throw FormatError("actions: expected an array");
  for (size_t t = 0; t < actions.size(); ++t) {
    const std::string where = "actions[" + std::to_string(t) + "]";
    if (!actions[t].is_array()) throw FormatError(where + ": expected an array");
    std::vector<Action> list;
    for (size_t i = 0; i < actions[t].size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      Action a;
      a.cost = ParseRational(Field(actions[t][i], "cost", at), at + ".cost");
      a.row = ParseList(Field(actions[t][i], "row", at), at + ".row");
      list.push_back(std::move(a));
    }
    inst.actions.push_back(std::move(list));
  }
  if (doc.contains("meta")) {
    const json& meta = doc["meta"];
    if (!meta.is_object()) throw FormatError("meta: expected an object");
    for (const auto& [k, v] : meta.items()) {
      inst.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  if (types != inst.num_types()) {
    throw FormatError("types: says " + std::to_string(types) + " but actions has " +
                      std::to_string(inst.num_types()));
  }
  if (outcomes != inst.num_outcomes()) {
    throw FormatError("outcomes: says " + std::to_string(outcomes) +
                      " but rewards has " + std::to_string(inst.num_outcomes()));
  }
  const std::vector<std::string> violations = Validate(inst);
  if (!violations.empty()) {
    std::string msg = "invalid instance:";
    for (const std::string& v : violations) msg += "\n  " + v;
    throw FormatError(msg);
  }
  return inst;
}

std::string DumpInstance(const Instance& instance) {
  return InstanceToJson(instance).dump();
}

Instance ParseInstance(const std::string& text) {
  try {
    return InstanceFromJson(json::parse(text));
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
}

Instance ReadInstance(const std::string& path) {
  const json doc = ReadJsonFile(path);
  try {
    return InstanceFromJson(doc);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WriteInstance(const Instance& instance, const std::string& path) {
  WriteText(InstanceToJson(instance).dump(2), path);
}

std::string InstanceDigest(const Instance& instance) {
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char ch : DumpInstance(instance)) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

json MenuToJson(const Menu& menu) {
  json doc;
  if (const auto* rlc = std::get_if<RlcMenu>(&menu)) {
    doc["kind"] = "rlc";
    doc["items"] = json::array();
    for (const std::vector<RlcItem>& items : rlc->items) {
      json list = json::array();
      for (const RlcItem& item : items) {
        list.push_back({{"alpha", item.alpha.ToString()}, {"prob", item.prob.ToString()}});
      }
      doc["items"].push_back(std::move(list));
    }
  } else if (const auto* det = std::get_if<DetMenu>(&menu)) {
    doc["kind"] = "det";
    doc["contracts"] = json::array();
    for (const GeneralContract& x : det->contracts) doc["contracts"].push_back(RationalList(x));
  } else {
    doc["kind"] = "single";
    doc["contract"] = RationalList(std::get<GeneralContract>(menu));
  }
  return doc;
}

Menu MenuFromJson(const json& doc) {
  const json& kind = Field(doc, "kind", "menu");
  if (!kind.is_string()) throw FormatError("kind: expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "rlc") {
    const json& items = Field(doc, "items", "menu");
    if (!items.is_array()) throw FormatError("items: expected an array");
    RlcMenu menu;
    for (size_t t = 0; t < items.size(); ++t) {
      const std::string where = "items[" + std::to_string(t) + "]";
      if (!items[t].is_array()) throw FormatError(where + ": expected an array");
      std::vector<RlcItem> list;
      for (size_t i = 0; i < items[t].size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        list.push_back({ParseRational(Field(items[t][i], "alpha", at), at + ".alpha"),
                        ParseRational(Field(items[t][i], "prob", at), at + ".prob")});
      }
      menu.items.push_back(std::move(list));
    }
    return menu;
  }
  if (k == "det") {
    const json& contracts = Field(doc, "contracts", "menu");
    if (!contracts.is_array()) throw FormatError("contracts: expected an array");
    DetMenu menu;
    for (size_t t = 0; t < contracts.size(); ++t) {
      menu.contracts.push_back(
          ParseList(contracts[t], "contracts[" + std::to_string(t) + "]"));
    }
    return menu;
  }
  if (k == "single") return ParseList(Field(doc, "contract", "menu"), "contract");
  throw FormatError("kind: unknown menu kind \"" + k + "\"");
}

Menu ReadMenu(const std::string& path) {
  const json doc = ReadJsonFile(path);
  try {
    return MenuFromJson(doc);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WriteMenu(const Menu& menu, const std::string& path) {
  WriteText(MenuToJson(menu).dump(2), path);
}

}  // namespace contracts
