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

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdt/aut_search.hpp"
#include "sdt/corpus.hpp"
#include "sdt/design.hpp"
#include "sdt/error.hpp"
#include "sdt/graph6.hpp"
#include "sdt/harness.hpp"
#include "sdt/oracle.hpp"
#include "sdt/orbit_design.hpp"
#include "sdt/perm_text.hpp"
#include "sdt/report.hpp"

struct sdt_graph {
  sdt::Graph g;
};

struct sdt_group {
  sdt::GeneratedGroup group;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

template <typename Fn>
sdt_status Guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return SDT_OK;
  } catch (const sdt::Error& e) {
    last_error = e.what();
    return static_cast<sdt_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SDT_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return SDT_E_INTERNAL;
  }
}

void RequireOut(const void* out) {
  if (out == nullptr) sdt::Fail(sdt::ErrorCode::kArgument, "null output pointer");
}

void RequireGraph(const sdt_graph* g) {
  if (g == nullptr) sdt::Fail(sdt::ErrorCode::kArgument, "null graph");
}

void RequireGroup(const sdt_graph* g, const sdt_group* group) {
  RequireGraph(g);
  if (group == nullptr) sdt::Fail(sdt::ErrorCode::kArgument, "null group");
  if (group->group.degree() != g->g.order()) {
    sdt::Fail(sdt::ErrorCode::kArgument,
              "group degree " + std::to_string(group->group.degree()) +
                  " does not match graph order " +
                  std::to_string(g->g.order()));
  }
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void Emit(const json& j, char** out) { *out = Copy(j.dump(2) + "\n"); }

void Publish(sdt::Graph g, sdt_graph** out) {
  g.RequireConnected();
  *out = new sdt_graph{std::move(g)};
}

std::string Str(const char* s) { return s == nullptr ? "" : s; }

json DesignsJson(const sdt::Graph& g, const sdt::GeneratedGroup& group) {
  json radii = json::array();
  const int ecc = sdt::BfsLevels(g, 0).eccentricity();
  for (int s = 1; s + 1 <= ecc; ++s) {
    sdt::SphereOrbitProfile profile;
    try {
      profile = sdt::ComputeSphereOrbitProfile(g, group, 0, s);
    } catch (const sdt::Error& e) {
      if (e.code() != sdt::ErrorCode::kPrecondition) throw;
      break;
    }
    json orbits = json::array();
    for (size_t i = 0; i < profile.orbits.size(); ++i) {
      json entry{{"index", i},
                 {"size", profile.orbit_sizes[i]},
                 {"b_prime", profile.b_prime[i]},
                 {"c_prime", profile.c_prime[i]}};
      try {
        const sdt::BlockDesign design = sdt::ExtractDesign(g, profile, i);
        entry["design"] = sdt::ToJson(design);
        const int k = design.points;
        if (k == 3 || k == 4) {
          const auto classes =
              sdt::EnumerateSmallOneDesigns(k, design.block_size);
          if (auto row = sdt::MatchSmallDesign(classes, design.blocks)) {
            const auto& c = classes[*row];
            entry["table_row"] = {
                {"parameters",
                 sdt::DesignParameters(1, k, c.block_size, c.lambda1)},
                {"strongest",
                 sdt::DesignParameters(c.strength, k, c.block_size,
                                       c.strength_lambda)},
                {"labelings", c.labelings.size()}};
          } else {
            entry["table_row"] = nullptr;
          }
        }
      } catch (const sdt::Error& e) {
        if (e.code() != sdt::ErrorCode::kHypothesis) throw;
        entry["skipped"] = e.what();
      }
      orbits.push_back(std::move(entry));
    }
    radii.push_back({{"s", s}, {"orbits", std::move(orbits)}});
  }
  return radii;
}

}  // namespace

extern "C" {

const char* sdt_version(void) { return "0.1.0"; }

const char* sdt_status_name(sdt_status status) {
  if (status == SDT_OK) return "ok";
  if (status == SDT_E_INTERNAL) return "internal";
  if (status >= SDT_E_ARGUMENT && status <= SDT_E_APPLICABILITY) {
    return sdt::ErrorCodeName(static_cast<sdt::ErrorCode>(status));
  }
  return "unknown";
}

const char* sdt_last_error(void) { return last_error.c_str(); }

void sdt_string_free(char* s) { std::free(s); }

sdt_status sdt_graph_from_graph6(const char* line, sdt_graph** out) {
  return Guard([&] {
    RequireOut(out);
    if (line == nullptr) sdt::Fail(sdt::ErrorCode::kArgument, "null graph6 line");
    Publish(sdt::ParseGraph6(line), out);
  });
}

sdt_status sdt_graph_from_corpus(const char* name, sdt_graph** out) {
  return Guard([&] {
    RequireOut(out);
    Publish(sdt::FindCorpusEntry(Str(name)).build(), out);
  });
}

sdt_status sdt_graph_from_edges(int order, const int* endpoints,
                                size_t edge_count, sdt_graph** out) {
  return Guard([&] {
    RequireOut(out);
    if (order < 0) sdt::Fail(sdt::ErrorCode::kArgument, "negative order");
    if (endpoints == nullptr && edge_count > 0) {
      sdt::Fail(sdt::ErrorCode::kArgument, "null edge list");
    }
    std::vector<sdt::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    }
    Publish(sdt::Graph::FromEdges(order, edges), out);
  });
}

int sdt_graph_order(const sdt_graph* g) { return g == nullptr ? -1 : g->g.order(); }

sdt_status sdt_graph_to_graph6(const sdt_graph* g, char** out) {
  return Guard([&] {
    RequireOut(out);
    RequireGraph(g);
    *out = Copy(sdt::EncodeGraph6(g->g));
  });
}

void sdt_graph_free(sdt_graph* g) { delete g; }

sdt_status sdt_group_automorphisms(const sdt_graph* g, sdt_group** out) {
  return Guard([&] {
    RequireOut(out);
    RequireGraph(g);
    auto found = sdt::AutomorphismGenerators(g->g);
    *out = new sdt_group{sdt::GeneratedGroup::SchreierSims(
        g->g.order(), std::move(found.generators))};
  });
}

sdt_status sdt_group_from_text(const sdt_graph* g, const char* text,
                               sdt_group** out) {
  return Guard([&] {
    RequireOut(out);
    RequireGraph(g);
    auto gens = sdt::ParseGenerators(Str(text), g->g.order());
    for (size_t i = 0; i < gens.size(); ++i) {
      if (auto broken = sdt::BrokenEdge(g->g, gens[i])) {
        sdt::Fail(sdt::ErrorCode::kArgument,
                  "generator " + std::to_string(i) + " " +
                      gens[i].ToCycleString() + " breaks edge {" +
                      std::to_string(broken->first) + "," +
                      std::to_string(broken->second) + "}");
      }
    }
    *out = new sdt_group{
        sdt::GeneratedGroup::SchreierSims(g->g.order(), std::move(gens))};
  });
}

sdt_status sdt_group_named(const char* graph_name, const char* subgroup,
                           sdt_group** out) {
  return Guard([&] {
    RequireOut(out);
    const auto& entry = sdt::FindCorpusEntry(Str(graph_name));
    const std::string wanted = Str(subgroup);
    for (const auto& sub : entry.subgroups) {
      if (sub.name != wanted) continue;
      const sdt::Graph g = entry.build();
      *out = new sdt_group{sdt::GeneratedGroup::SchreierSims(
          g.order(), sdt::ParseGenerators(sub.generators, g.order()))};
      return;
    }
    sdt::Fail(sdt::ErrorCode::kNotFound,
              "graph " + entry.name + " has no subgroup named " + wanted);
  });
}

sdt_status sdt_group_order(const sdt_group* group, char** out) {
  return Guard([&] {
    RequireOut(out);
    if (group == nullptr) sdt::Fail(sdt::ErrorCode::kArgument, "null group");
    *out = Copy(group->group.order().str());
  });
}

void sdt_group_free(sdt_group* group) { delete group; }

sdt_status sdt_corpus_json(char** out) {
  return Guard([&] {
    RequireOut(out);
    json entries = json::array();
    for (const auto& e : sdt::Corpus()) {
      json subgroups = json::array();
      for (const auto& s : e.subgroups) {
        subgroups.push_back({{"name", s.name}, {"order", s.order}});
      }
      entries.push_back({{"name", e.name},
                         {"description", e.description},
                         {"order", e.expected.order},
                         {"valency", e.expected.valency},
                         {"subgroups", std::move(subgroups)}});
    }
    Emit(entries, out);
  });
}

sdt_status sdt_analyze_json(const sdt_graph* g, const sdt_group* group,
                            const char* name, const char* group_name,
                            int with_timing, char** out) {
  return Guard([&] {
    RequireOut(out);
    RequireGroup(g, group);
    const auto start = std::chrono::steady_clock::now();
    sdt::AnalysisReport report =
        sdt::Analyze(g->g, group->group, Str(name), Str(group_name));
    if (with_timing) {
      report.elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    }
    *out = Copy(sdt::SerializeReport(report));
  });
}

sdt_status sdt_verify_json(const sdt_graph* g, const sdt_group* group,
                           const char* name, const char* group_name,
                           char** out) {
  return Guard([&] {
    RequireOut(out);
    RequireGroup(g, group);
    const sdt::AnalysisReport report =
        sdt::Analyze(g->g, group->group, Str(name), Str(group_name));
    json findings = json::array();
    for (const auto& f : report.findings) findings.push_back(sdt::ToJson(f));
    Emit({{"verdict", sdt::ToJson(report.verdict)},
          {"findings", std::move(findings)},
          {"violation", report.HasViolation()}},
         out);
  });
}

sdt_status sdt_designs_json(const sdt_graph* g, const sdt_group* group,
                            char** out) {
  return Guard([&] {
    RequireOut(out);
    RequireGroup(g, group);
    Emit({{"radii", DesignsJson(g->g, group->group)}}, out);
  });
}

sdt_status sdt_small_designs_json(int points, int block_size, char** out) {
  return Guard([&] {
    RequireOut(out);
    json rows = json::array();
    for (const auto& c : sdt::EnumerateSmallOneDesigns(points, block_size)) {
      json row = sdt::ToJson(c);
      row["parameters"] = sdt::DesignParameters(1, points, block_size, c.lambda1);
      row["strongest"] =
          sdt::DesignParameters(c.strength, points, block_size, c.strength_lambda);
      rows.push_back(std::move(row));
    }
    Emit(rows, out);
  });
}

sdt_status sdt_orders_json(char** out) {
  return Guard([&] {
    RequireOut(out);
    const int diameters[] = {3, 4, 5, 8};
    json case_orders = json::array();
    for (int d : diameters) {
      case_orders.push_back({{"d", d}, {"order", sdt::CaseOrder(d)}});
    }
    json grid = json::array();
    for (int c = 1; c <= 4; ++c) {
      for (int d : diameters) {
        grid.push_back(
            {{"c_d", c}, {"d", d}, {"order", sdt::TetravalentOrder(c, d)}});
      }
    }
    const long long largest = sdt::CaseOrder(8);
    Emit({{"case_orders", std::move(case_orders)},
          {"girth_orders", std::move(grid)},
          {"factorization",
           {{"n", largest}, {"factors", sdt::PrimeFactors(largest)}}}},
         out);
  });
}

sdt_status sdt_oracle_json(const sdt_graph* g, char** out) {
  return Guard([&] {
    RequireOut(out);
    RequireGraph(g);
    const sdt::OracleComparison c = sdt::CompareWithOracles(g->g);
    Emit({{"order", c.order},
          {"brute_group_order", c.brute_group_order},
          {"search_group_order", c.search_group_order},
          {"same_order", c.same_order},
          {"same_membership", c.same_membership},
          {"same_orbits", c.same_orbits},
          {"brute_array", c.brute_array},
          {"core_array", c.core_array},
          {"same_array", c.same_array},
          {"agrees", c.agrees()}},
         out);
  });
}

}  // extern "C"
