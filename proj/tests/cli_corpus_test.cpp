// Copyright 2026 The sdt Authors
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


#include <gtest/gtest.h>

#include <random>

#include "sdt/aut_search.hpp"
#include "sdt/corpus.hpp"
#include "sdt/error.hpp"
#include "sdt/graph6.hpp"
#include "sdt/perm_text.hpp"
#include "sdt/report.hpp"
#include "support.hpp"

namespace sdt {
namespace {

using testing::AutGroup;
using testing::Corpus;

std::string ParseMessage(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "expected a parse error";
  return "";
}

TEST(Graph6Test, Examples) {
  const Graph k4 = ParseGraph6("C~");
  EXPECT_EQ(k4.order(), 4);
  EXPECT_EQ(k4.size(), 6);
  const Graph edge = ParseGraph6("A_");
  EXPECT_EQ(edge.order(), 2);
  EXPECT_EQ(edge.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(ParseGraph6(">>graph6<<C~\n").size(), 6);
  EXPECT_EQ(EncodeGraph6(Corpus("Petersen")), "IheA@GUAo");
  EXPECT_EQ(EncodeGraph6(Corpus("K33")), "EFz_");
}

TEST(Graph6Test, Errors) {
  EXPECT_NE(ParseMessage([] { ParseGraph6(""); }).find("empty"), std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseGraph6("C~~"); }).find("byte 2"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseGraph6("C!"); }).find("byte 1"),
            std::string::npos);
  // Two vertices use one of six bits; the rest must be zero.
  EXPECT_NE(ParseMessage([] { ParseGraph6("A`"); }).find("padding"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseGraph6("~~???????"); }).find("8-byte"),
            std::string::npos);
  EXPECT_NE(ParseMessage([] { ParseGraph6("~??"); }).find("truncated"),
            std::string::npos);
}

TEST(Graph6Test, RoundTrip) {
  for (const auto& entry : sdt::Corpus()) {
    const Graph g = entry.build();
    const Graph back = ParseGraph6(EncodeGraph6(g));
    EXPECT_EQ(back.edges(), g.edges()) << entry.name;
  }
  std::mt19937 rng(1);
  for (int n : {1, 2, 7, 62, 63, 64, 100, 200}) {
    const Graph g = n == 1 ? Graph::FromEdges(1, {})
                           : testing::RandomConnectedGraph(rng, n, 0.05);
    const std::string text = EncodeGraph6(g);
    EXPECT_EQ(text.front() == '~', n >= 63);
    EXPECT_EQ(ParseGraph6(text).edges(), g.edges()) << n;
  }
}

TEST(PermTextTest, Examples) {
  const Permutation c = ParseCycles("(0 1 2)", 6);
  EXPECT_EQ(c.images().size(), 6u);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[2], 0);
  EXPECT_EQ(c[4], 4);
  const Permutation swap = ParseCycles("(0 3)(1 4)(2 5)", 6);
  EXPECT_TRUE(IsAutomorphism(Corpus("K33"), swap));
  const auto gens = ParseGenerators("# comment\n(0 1)\n\n[1, 2, 0, 3]\n", 4);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[1].ToCycleString(), "(0 1 2)");
}

TEST(PermTextTest, Errors) {
  ParseMessage([] { ParseCycles("(0 0 1)", 6); });
  ParseMessage([] { ParseCycles("(0 6)", 6); });
  ParseMessage([] { ParseCycles("(0 1", 6); });
  ParseMessage([] { ParseCycles("(0 99999999999999999999)", 6); });
  const std::string where =
      ParseMessage([] { ParseGenerators("(0 1)\n(2 x)\n", 4); });
  EXPECT_NE(where.find("generator line 2"), std::string::npos) << where;
  ParseMessage([] { ParseGenerators("[0, 0, 1]", 3); });
}

TEST(CorpusTest, Entries) {
  for (const char* name : {"K4", "K33", "C5", "C6", "C8", "Petersen", "Heawood",
                           "Pappus", "Desargues", "Dodecahedron", "TutteCoxeter",
                           "Q3", "Q4", "K44", "K5"}) {
    EXPECT_NO_THROW(FindCorpusEntry(name)) << name;
  }
  const auto& k33 = FindCorpusEntry("K33");
  ASSERT_EQ(k33.subgroups.size(), 1u);
  EXPECT_EQ(k33.subgroups[0].name, "C3wrC2");
  const Graph g = k33.build();
  EXPECT_EQ(GeneratedGroup::SchreierSims(
                6, ParseGenerators(k33.subgroups[0].generators, 6))
                .order()
                .str(),
            k33.subgroups[0].order);
  EXPECT_EQ(FindCorpusEntry("TutteCoxeter").expected.automorphism_order, "1440");
  try {
    FindCorpusEntry("NoSuchGraph");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST(ReportTest, HeawoodReport) {
  const Graph g = Corpus("Heawood");
  const AnalysisReport r = Analyze(g, AutGroup(g), "Heawood", "Aut");
  const nlohmann::json j = ToJson(r);
  EXPECT_EQ(j.at("schema"), kReportSchema);
  EXPECT_EQ(j.at("distance_regularity").at("array").at("text"), "{3,2,2;1,1,3}");
  EXPECT_EQ(j.at("verdict").at("verdict"), "consistent");
  EXPECT_FALSE(j.contains("elapsed_ms"));
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "distance_regularity", "findings", "girth", "graph", "group",
                      "local_depth", "local_intersection_numbers", "radii",
                      "schema", "transitivity", "verdict"}));
  EXPECT_FALSE(r.HasViolation());
}

TEST(ReportTest, RoundTripAndDeterminism) {
  for (const auto& entry : sdt::Corpus()) {
    const Graph g = entry.build();
    const AnalysisReport a = Analyze(g, AutGroup(g), entry.name, "Aut");
    const AnalysisReport b = Analyze(g, AutGroup(g), entry.name, "Aut");
    EXPECT_EQ(SerializeReport(a), SerializeReport(b)) << entry.name;
    const AnalysisReport back = ReportFromJson(ToJson(a));
    EXPECT_EQ(back, a) << entry.name;
    EXPECT_EQ(SerializeReport(back), SerializeReport(a)) << entry.name;
    EXPECT_FALSE(a.HasViolation()) << entry.name;
  }
  const Graph k33 = Corpus("K33");
  const GeneratedGroup sub = GeneratedGroup::SchreierSims(
      6, ParseGenerators(FindCorpusEntry("K33").subgroups[0].generators, 6));
  const AnalysisReport r = Analyze(k33, sub, "K33", "C3wrC2");
  EXPECT_EQ(ReportFromJson(ToJson(r)), r);
}

TEST(ReportTest, ForestAndTiming) {
  const Graph path = testing::PathGraph(3);
  AnalysisReport r = Analyze(path, AutGroup(path), "P3", "Aut");
  nlohmann::json j = ToJson(r);
  EXPECT_TRUE(j.at("girth").at("girth").is_null());
  EXPECT_TRUE(j.at("graph").at("valency").is_null());
  r.elapsed_ms = 1.5;
  j = ToJson(r);
  EXPECT_EQ(j.at("elapsed_ms"), 1.5);
  EXPECT_EQ(ReportFromJson(j), r);
}

TEST(ReportTest, SchemaMismatch) {
  const Graph g = Corpus("K4");
  nlohmann::json j = ToJson(Analyze(g, AutGroup(g), "K4", "Aut"));
  j["schema"] = "sdt-report/0";
  try {
    ReportFromJson(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

}  // namespace
}  // namespace sdt
