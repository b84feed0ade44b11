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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "contracts/generators.h"

namespace contracts {
namespace {

using nlohmann::json;

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("contracts_io_" + name)).string();
}

std::string ErrorOf(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

const char* kSmall = R"({
  "types": 1, "outcomes": 2, "rewards": ["1", "0"], "prior": ["1"],
  "actions": [[{"cost": "0", "row": ["0", "1"]},
               {"cost": "1/4", "row": ["253/800", "547/800"]}]]
})";

TEST(InstanceIoTest, ParsesExactRationals) {
  const Instance inst = ParseInstance(kSmall);
  EXPECT_EQ(inst.actions[0][1].row[0], rat(253, 800));
  EXPECT_EQ(inst.actions[0][1].cost, rat(1, 4));
}

TEST(InstanceIoTest, FileRoundTripOmegaN) {
  const Instance inst = GenOmegaN(12).instance;
  const std::string path = TempPath("omega_n.json");
  WriteInstance(inst, path);
  const Instance back = ReadInstance(path);
  EXPECT_EQ(back, inst);
  EXPECT_EQ(back.meta, inst.meta);
  EXPECT_EQ(InstanceDigest(back), InstanceDigest(inst));
  std::remove(path.c_str());
}

TEST(InstanceIoTest, RejectsRowSumWithNamedViolation) {
  json doc = json::parse(kSmall);
  doc["actions"][0][1]["row"] = {"1/2", "2/5"};
  const std::string err = ErrorOf(doc.dump());
  EXPECT_NE(err.find("type 0 action 1 row sums to 9/10"), std::string::npos) << err;
}

TEST(InstanceIoTest, NamesTheOffendingField) {
  json doc = json::parse(kSmall);
  doc["actions"][0][1]["row"][1] = 0.5;
  EXPECT_NE(ErrorOf(doc.dump()).find("actions[0][1].row[1]"), std::string::npos);
  doc = json::parse(kSmall);
  doc.erase("rewards");
  EXPECT_NE(ErrorOf(doc.dump()).find("rewards"), std::string::npos);
  doc = json::parse(kSmall);
  doc["prior"][0] = "1/0";
  EXPECT_NE(ErrorOf(doc.dump()).find("prior[0]"), std::string::npos);
  doc = json::parse(kSmall);
  doc["types"] = 2;
  EXPECT_NE(ErrorOf(doc.dump()).find("types"), std::string::npos);
  EXPECT_FALSE(ErrorOf("{\"types\": ").empty());
}

TEST(InstanceIoTest, MissingFile) {
  EXPECT_THROW(ReadInstance(TempPath("does_not_exist.json")), FormatError);
}

TEST(InstanceIoTest, DigestIsStableAndDiscriminating) {
  const Instance a = GenExampleRlc(rat(1, 10)).instance;
  const Instance b = GenExampleRlc(rat(1, 5)).instance;
  const std::string da = InstanceDigest(a);
  EXPECT_EQ(da.size(), 16u);
  EXPECT_EQ(da.find_first_not_of("0123456789abcdef"), std::string::npos);
  EXPECT_EQ(InstanceDigest(ParseInstance(DumpInstance(a))), da);
  EXPECT_NE(InstanceDigest(b), da);
}

TEST(MenuIoTest, RoundTripsEveryKind) {
  const RlcMenu rlc = GenUnboundedRlc().menu;
  const DetMenu det = GenOmegaN(12).menu;
  const GeneralContract single = {rat(1, 3), Rational(0), rat(7, 2)};
  const std::string path = TempPath("menu.json");

  WriteMenu(rlc, path);
  EXPECT_EQ(std::get<RlcMenu>(ReadMenu(path)), rlc);
  WriteMenu(det, path);
  EXPECT_EQ(std::get<DetMenu>(ReadMenu(path)).contracts, det.contracts);
  WriteMenu(single, path);
  EXPECT_EQ(std::get<GeneralContract>(ReadMenu(path)), single);
  std::remove(path.c_str());

  EXPECT_EQ(MenuToJson(Menu(rlc))["kind"], "rlc");
  EXPECT_EQ(MenuToJson(Menu(det))["kind"], "det");
  EXPECT_EQ(MenuToJson(Menu(single))["kind"], "single");
}

TEST(MenuIoTest, RejectsMalformedMenus) {
  EXPECT_THROW(MenuFromJson(json{{"kind", "lottery"}}), FormatError);
  EXPECT_THROW(MenuFromJson(json{{"kind", "single"}}), FormatError);
  EXPECT_THROW(MenuFromJson(json{{"kind", "single"}, {"contract", {"1/2", 3}}}),
               FormatError);
  EXPECT_THROW(MenuFromJson(json::array()), FormatError);
}

}  // namespace
}  // namespace contracts
