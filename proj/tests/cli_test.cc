// Copyright 2026 The chambers Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "chambers/cli.h"
#include "chambers/complex.h"
#include "chambers/metric_graph.h"
#include "chambers/text_util.h"

namespace chambers {
namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> Numbers(const std::string& s) {
  static const std::regex digits("[0-9]+");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), digits); it != std::sregex_iterator(); ++it) {
    out.push_back(it->str());
  }
  return out;
}

// Rationals {num, den} become "num/den", or "num" when den is 1.
nlohmann::ordered_json FoldRationals(const nlohmann::ordered_json& j) {
  if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den")) {
    const auto den = j["den"].get<int64_t>();
    return std::to_string(j["num"].get<int64_t>()) + (den == 1 ? "" : "/" + std::to_string(den));
  }
  if (!j.is_structured()) return j;
  nlohmann::ordered_json out = j;
  for (auto& [key, value] : out.items()) value = FoldRationals(value);
  return out;
}

std::filesystem::path TempDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("chambers_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(CliTest, ClassifyListsSixNamedClasses) {
  const CliRun r = Cli({"classify", "--q", "2", "--k", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("num_classes: 6"), std::string::npos);
  for (const char* name : {"G1", "G2", "G3", "G4", "G5", "G6"}) {
    EXPECT_NE(r.out.find(std::string("name=") + name), std::string::npos) << name;
  }
  EXPECT_NE(r.out.find("rank=18/11"), std::string::npos);
  const CliRun j = Cli({"--json", "classify", "--q", "2", "--k", "3"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["result"]["classes"].size(), 6u);
}

TEST(CliTest, H1OfV60) {
  const CliRun r = Cli({"h1", "catalog:V6_0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "h1: Z + Z/2");
}

TEST(CliTest, ExtendCountSec6IsZero) {
  const CliRun r = Cli({"extend", "catalog:V6_3_sec6", "--count"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "0\n");
  EXPECT_EQ(Cli({"extend", "catalog:V6_0", "--count"}).out, "1\n");
}

TEST(CliTest, RankDispatchesOnInputKind) {
  const CliRun graph = Cli({"rank", "catalog:G1"});
  EXPECT_NE(graph.out.find("rank: 18/11"), std::string::npos);
  EXPECT_NE(graph.out.find("roots: 66"), std::string::npos);
  const CliRun complex = Cli({"rank", "catalog:V6_0"});
  EXPECT_NE(complex.out.find("local_rank: 3/2"), std::string::npos);
  const CliRun inf = Cli({"rank", "catalog:G5", "--p", "inf"});
  EXPECT_NE(inf.out.find("rank: 3/2"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"rank", "catalog:G1", "--p", "0.5"}).code, kExitUsage);
  EXPECT_EQ(Cli({"h1", "catalog:nope"}).code, kExitDomainError);
  EXPECT_EQ(Cli({"h1", "catalog:G1"}).code, kExitDomainError);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CliTest, UnknownFileFormat) {
  const auto dir = TempDir("format");
  WriteFile((dir / "x.txt").string(), "polygon p\n");
  const CliRun r = Cli({"spectrum", (dir / "x.txt").string()});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("unknown file format"), std::string::npos);
}

TEST(CliTest, JsonReportShape) {
  const CliRun r = Cli({"--json", "npc", "catalog:V1"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("command"));
  EXPECT_TRUE(j.contains("timing_ms"));
  EXPECT_EQ(j["inputs"][0]["digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
  EXPECT_TRUE(j["result"]["nonpositively_curved"].get<bool>());
}

TEST(CliProperty, TextAndJsonCarryTheSameNumbers) {
  const std::vector<std::vector<std::string>> commands = {
      {"classify", "--q", "2", "--k", "2"},
      {"spectrum", "catalog:G3"},
      {"rank", "catalog:G4"},
      {"rank", "catalog:V1"},
      {"link", "catalog:V_fig5"},
      {"npc", "catalog:V6_1"},
      {"h1", "catalog:V6_3_sec4"},
      {"invariant", "catalog:V6_3_sec6"},
      {"extend", "catalog:V6_0", "--list-families"},
      {"develop", "catalog:V6_0", "--radius", "2", "--flat-census"},
      {"prescribe", "catalog:G5", "--radius", "2"},
      {"complete", "catalog:G6"},
  };
  for (const auto& command : commands) {
    const CliRun text = Cli(command);
    std::vector<std::string> json_args = {"--json"};
    json_args.insert(json_args.end(), command.begin(), command.end());
    const CliRun json = Cli(json_args);
    ASSERT_EQ(text.code, kExitOk) << command[0] << text.err;
    ASSERT_EQ(json.code, kExitOk) << command[0];
    const auto result = nlohmann::ordered_json::parse(json.out)["result"];
    EXPECT_EQ(Numbers(text.out), Numbers(FoldRationals(result).dump())) << command[0];
  }
}

TEST(CliProperty, EmittedFilesRoundTrip) {
  const auto dir = TempDir("emit");
  ASSERT_EQ(Cli({"catalog", "--emit", dir.string()}).code, kExitOk);
  ASSERT_EQ(Cli({"extend", "catalog:V6_0", "--emit", (dir / "ext").string()}).code, kExitOk);
  ASSERT_EQ(Cli({"link", "catalog:V1", "--emit", (dir / "links").string()}).code, kExitOk);
  int files = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    ++files;
    const std::string text = ReadFile(entry.path().string());
    if (entry.path().extension() == ".graph") {
      EXPECT_EQ(GraphToText(ParseGraphText(text)), text) << entry.path();
    } else {
      EXPECT_EQ(ComplexToText(ParseComplexText(text)), text) << entry.path();
    }
  }
  EXPECT_GE(files, 20);
}

TEST(CliTest, InvariantGraphIsParsable) {
  const CliRun r = Cli({"extend", "catalog:V6_3_sec6", "--invariant"});
  ASSERT_EQ(r.code, kExitOk);
  const MetricGraph g = ParseGraphText(r.out);
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 6);
  EXPECT_EQ(g.edge(0).attributes.at("type"), "0");
}

TEST(CliTest, OutFileAndBallExport) {
  const auto dir = TempDir("out");
  const auto report = dir / "report.txt";
  const auto ball = dir / "ball.complex";
  const CliRun r = Cli({"--out", report.string(), "develop", "catalog:V6_0", "--radius", "1", "--export",
                     ball.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(ReadFile(report.string()).find("faces: 18"), std::string::npos);
  EXPECT_NE(ReadFile(ball.string()).find("projection"), std::string::npos);
}

TEST(CliTest, PrescribeViaDevelop) {
  const auto dir = TempDir("prescribe");
  ASSERT_EQ(Cli({"catalog", "--emit", dir.string()}).code, kExitOk);
  const CliRun r = Cli({"develop", "--prescribe", (dir / "G5.graph").string(), "--radius", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("sat: false"), std::string::npos);
  EXPECT_NE(r.out.find("depth: 2"), std::string::npos);
}

}  // namespace
}  // namespace chambers
