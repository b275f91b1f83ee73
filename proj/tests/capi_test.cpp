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


#include "sdt/sdt.h"

#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

namespace {

using nlohmann::json;

// Takes ownership of a string returned by the library.
std::string Take(char* s) {
  std::string out = s ? s : "";
  sdt_string_free(s);
  return out;
}

struct Handles {
  sdt_graph* g = nullptr;
  sdt_group* group = nullptr;
  ~Handles() {
    sdt_group_free(group);
    sdt_graph_free(g);
  }
};

TEST(CApiTest, VersionAndStatusNames) {
  EXPECT_STREQ(sdt_version(), "0.1.0");
  EXPECT_STREQ(sdt_status_name(SDT_OK), "ok");
  EXPECT_STREQ(sdt_status_name(SDT_E_PARSE), "parse");
  EXPECT_STREQ(sdt_status_name(SDT_E_INTERNAL), "internal");
}

TEST(CApiTest, GraphLoaders) {
  Handles h;
  ASSERT_EQ(sdt_graph_from_graph6("IheA@GUAo", &h.g), SDT_OK);
  EXPECT_EQ(sdt_graph_order(h.g), 10);
  char* text = nullptr;
  ASSERT_EQ(sdt_graph_to_graph6(h.g, &text), SDT_OK);
  EXPECT_EQ(Take(text), "IheA@GUAo");

  sdt_graph* bad = nullptr;
  EXPECT_EQ(sdt_graph_from_graph6("", &bad), SDT_E_PARSE);
  EXPECT_EQ(bad, nullptr);
  EXPECT_NE(std::string(sdt_last_error()).find("empty"), std::string::npos);
  EXPECT_EQ(sdt_graph_from_corpus("NoSuchGraph", &bad), SDT_E_NOT_FOUND);
  const int two_edges[] = {0, 1, 2, 3};
  EXPECT_EQ(sdt_graph_from_edges(4, two_edges, 2, &bad), SDT_E_CONNECTIVITY);
  const int loop[] = {0, 0};
  EXPECT_EQ(sdt_graph_from_edges(1, loop, 1, &bad), SDT_E_INVARIANT);
  EXPECT_EQ(sdt_graph_from_graph6("C~", nullptr), SDT_E_ARGUMENT);
}

TEST(CApiTest, Groups) {
  Handles h;
  ASSERT_EQ(sdt_graph_from_corpus("K33", &h.g), SDT_OK);
  ASSERT_EQ(sdt_group_automorphisms(h.g, &h.group), SDT_OK);
  char* order = nullptr;
  ASSERT_EQ(sdt_group_order(h.group, &order), SDT_OK);
  EXPECT_EQ(Take(order), "72");

  sdt_group* sub = nullptr;
  ASSERT_EQ(sdt_group_named("K33", "C3wrC2", &sub), SDT_OK);
  ASSERT_EQ(sdt_group_order(sub, &order), SDT_OK);
  EXPECT_EQ(Take(order), "18");
  sdt_group_free(sub);
  sub = nullptr;
  EXPECT_EQ(sdt_group_named("K33", "Missing", &sub), SDT_E_NOT_FOUND);

  ASSERT_EQ(sdt_group_from_text(h.g, "(0 1 2)\n", &sub), SDT_OK);
  ASSERT_EQ(sdt_group_order(sub, &order), SDT_OK);
  EXPECT_EQ(Take(order), "3");
  sdt_group_free(sub);
  sub = nullptr;
  EXPECT_EQ(sdt_group_from_text(h.g, "(0 3)\n", &sub), SDT_E_ARGUMENT);
  EXPECT_EQ(sdt_group_from_text(h.g, "(0 9)\n", &sub), SDT_E_PARSE);
  EXPECT_EQ(sub, nullptr);
}

TEST(CApiTest, AnalyzeAndVerify) {
  Handles h;
  ASSERT_EQ(sdt_graph_from_corpus("Heawood", &h.g), SDT_OK);
  ASSERT_EQ(sdt_group_automorphisms(h.g, &h.group), SDT_OK);
  char* out = nullptr;
  ASSERT_EQ(sdt_analyze_json(h.g, h.group, "Heawood", "Aut", 0, &out), SDT_OK);
  const json report = json::parse(Take(out));
  EXPECT_EQ(report.at("group").at("order"), "336");
  EXPECT_EQ(report.at("verdict").at("verdict"), "consistent");
  EXPECT_FALSE(report.contains("elapsed_ms"));

  ASSERT_EQ(sdt_analyze_json(h.g, h.group, "Heawood", "Aut", 1, &out), SDT_OK);
  EXPECT_TRUE(json::parse(Take(out)).contains("elapsed_ms"));

  ASSERT_EQ(sdt_verify_json(h.g, h.group, "Heawood", "Aut", &out), SDT_OK);
  const json verdict = json::parse(Take(out));
  EXPECT_EQ(verdict.at("verdict").at("verdict"), "consistent");
  EXPECT_TRUE(verdict.at("findings").empty());

  ASSERT_EQ(sdt_designs_json(h.g, h.group, &out), SDT_OK);
  EXPECT_FALSE(json::parse(Take(out)).at("radii").empty());
}

TEST(CApiTest, TablesAndOracle) {
  char* out = nullptr;
  ASSERT_EQ(sdt_orders_json(&out), SDT_OK);
  const json orders = json::parse(Take(out));
  EXPECT_EQ(orders.at("case_orders").size(), 4u);
  ASSERT_EQ(sdt_small_designs_json(4, 2, &out), SDT_OK);
  EXPECT_EQ(json::parse(Take(out)).size(), 3u);
  ASSERT_EQ(sdt_corpus_json(&out), SDT_OK);
  EXPECT_GE(json::parse(Take(out)).size(), 18u);

  Handles small, big;
  ASSERT_EQ(sdt_graph_from_corpus("Petersen", &small.g), SDT_OK);
  ASSERT_EQ(sdt_oracle_json(small.g, &out), SDT_OK);
  EXPECT_TRUE(json::parse(Take(out)).at("agrees").get<bool>());
  ASSERT_EQ(sdt_graph_from_corpus("Heawood", &big.g), SDT_OK);
  EXPECT_EQ(sdt_oracle_json(big.g, &out), SDT_E_SCALE);
}

}  // namespace
