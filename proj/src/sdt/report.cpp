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


#include "sdt/report.hpp"

#include <algorithm>

#include "sdt/error.hpp"
#include "sdt/graph6.hpp"

namespace nlohmann {

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& value) {
    if (value) {
      j = *value;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& value) {
    if (j.is_null()) {
      value.reset();
    } else {
      value = j.get<T>();
    }
  }
};

}  // namespace nlohmann

namespace sdt {

using nlohmann::json;

namespace {

json CycleLength(int length) {
  return length == kNoCycle ? json(nullptr) : json(length);
}

int CycleLengthFrom(const json& j) {
  return j.is_null() ? kNoCycle : j.get<int>();
}

json CycleLengths(const std::vector<int>& lengths) {
  json out = json::array();
  for (int x : lengths) out.push_back(CycleLength(x));
  return out;
}

std::vector<int> CycleLengthsFrom(const json& j) {
  std::vector<int> out;
  for (const auto& x : j) out.push_back(CycleLengthFrom(x));
  return out;
}

}  // namespace

void to_json(json& j, const Permutation& p) {
  j = std::vector<int>(p.images().begin(), p.images().end());
}
void from_json(const json& j, Permutation& p) {
  p = Permutation(j.get<std::vector<int>>());
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Triple, c, a, b)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CountWitness, base, level, vertex, counts)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CountMismatch, first, second)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LevelCounts, level, size, counts, witness)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Finding, clause, detail)

void to_json(json& j, const LocalIntersectionNumbers& x) {
  j = json{{"base", x.base},
           {"valency", x.valency},
           {"alpha_girth", CycleLength(x.alpha_girth)},
           {"tree_depth", x.tree_depth},
           {"alpha_girth_depth", x.alpha_girth_depth},
           {"levels", x.levels}};
}
void from_json(const json& j, LocalIntersectionNumbers& x) {
  j.at("base").get_to(x.base);
  j.at("valency").get_to(x.valency);
  x.alpha_girth = CycleLengthFrom(j.at("alpha_girth"));
  j.at("tree_depth").get_to(x.tree_depth);
  j.at("alpha_girth_depth").get_to(x.alpha_girth_depth);
  j.at("levels").get_to(x.levels);
}

void to_json(json& j, const IntersectionArray& x) {
  j = json{{"b", x.b}, {"c", x.c}, {"text", x.ToString()}};
}
void from_json(const json& j, IntersectionArray& x) {
  j.at("b").get_to(x.b);
  j.at("c").get_to(x.c);
}

void to_json(json& j, const DistanceRegularity& x) {
  j = json{{"regular", x.regular()}, {"array", x.array}, {"witness", x.witness}};
}
void from_json(const json& j, DistanceRegularity& x) {
  j.at("array").get_to(x.array);
  j.at("witness").get_to(x.witness);
}

void to_json(json& j, const GirthData& x) {
  j = json{{"girth", CycleLength(x.girth)},
           {"alpha_girth", CycleLengths(x.alpha_girth)},
           {"local_girth", CycleLengths(x.local_girth)}};
}
void from_json(const json& j, GirthData& x) {
  x.girth = CycleLengthFrom(j.at("girth"));
  x.alpha_girth = CycleLengthsFrom(j.at("alpha_girth"));
  x.local_girth = CycleLengthsFrom(j.at("local_girth"));
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SphereOrbitProfile, alpha, s, valency, neighbors,
                                   sphere, sphere_b, orbits, orbit_sizes, b_prime,
                                   c_prime, cross, stabilizer_generators,
                                   stabilizer_order)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BlockDesign, point_labels, points, block_size,
                                   strength, b_prime, s, orbit_size, blocks,
                                   block_class_size, lambda, delta, violations)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(UniformDesign, mu, m, b, lambda, f_j, f_j_m,
                                   tau, lambda_tau, f_j_tau, point_blocks,
                                   blocks_m)

NLOHMANN_JSON_SERIALIZE_ENUM(StructureTag,
                             {{StructureTag::kMatching, "matching"},
                              {StructureTag::kStarUnion, "star-union"},
                              {StructureTag::kUniform, "uniform"},
                              {StructureTag::kIrregular, "irregular"}})
NLOHMANN_JSON_SERIALIZE_ENUM(TheoremClause, {{TheoremClause::kNone, "none"},
                                             {TheoremClause::kCubic, "cubic"},
                                             {TheoremClause::kTetravalent,
                                              "tetravalent"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Verdict, {{Verdict::kConsistent, "consistent"},
                                       {Verdict::kViolation, "violation"},
                                       {Verdict::kNotApplicable,
                                        "not_applicable"}})

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AdjacencyRelationClass, partition, tag, m, b,
                                   f_j, canonical_gamma, canonical_blocks,
                                   canonical_parts, uniform, checks, violations)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TransitivityReport, vertex_transitive, diameter,
                                   max_distance_transitivity,
                                   fully_distance_transitive, max_arc_transitivity,
                                   arc_transitivity_capped, local_homogeneity,
                                   group_order)

void to_json(json& j, const TheoremVerdict& x) {
  j = json{{"graph", x.graph},
           {"group", x.group},
           {"clause", x.clause},
           {"hypothesis_holds", x.hypothesis_holds},
           {"predicts_distance_regular", x.predicts_distance_regular},
           {"girth_clause", x.girth_clause},
           {"girth_bound", x.girth_bound},
           {"valency", x.valency},
           {"diameter", x.diameter},
           {"girth", CycleLength(x.girth)},
           {"distance_regular", x.distance_regular},
           {"intersection_array", x.intersection_array},
           {"transitivity", x.transitivity},
           {"verdict", x.verdict},
           {"witnesses", x.witnesses},
           {"notes", x.notes}};
}
void from_json(const json& j, TheoremVerdict& x) {
  j.at("graph").get_to(x.graph);
  j.at("group").get_to(x.group);
  j.at("clause").get_to(x.clause);
  j.at("hypothesis_holds").get_to(x.hypothesis_holds);
  j.at("predicts_distance_regular").get_to(x.predicts_distance_regular);
  j.at("girth_clause").get_to(x.girth_clause);
  j.at("girth_bound").get_to(x.girth_bound);
  j.at("valency").get_to(x.valency);
  j.at("diameter").get_to(x.diameter);
  x.girth = CycleLengthFrom(j.at("girth"));
  j.at("distance_regular").get_to(x.distance_regular);
  j.at("intersection_array").get_to(x.intersection_array);
  j.at("transitivity").get_to(x.transitivity);
  j.at("verdict").get_to(x.verdict);
  j.at("witnesses").get_to(x.witnesses);
  j.at("notes").get_to(x.notes);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SmallDesignClass, points, block_size, lambda1,
                                   block_count, strength, strength_lambda,
                                   labelings)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OrbitAnalysis, index, design, adjacency, skipped)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RadiusAnalysis, profile, orbits)

bool AnalysisReport::HasViolation() const {
  return !findings.empty() || verdict.verdict == Verdict::kViolation;
}

AnalysisReport Analyze(const Graph& g, const GeneratedGroup& group,
                       const std::string& name, const std::string& group_name) {
  g.RequireConnected();
  AnalysisReport r;
  r.name = name;
  r.graph6 = EncodeGraph6(g);
  r.order = g.order();
  r.size = g.size();
  r.valency = g.valency();
  r.girth = ComputeGirthData(g);
  r.distance_regularity = DistanceRegular(g);
  r.group_name = group_name;
  r.group_order = group.order().str();
  r.group_generators = group.generators();
  r.transitivity = ClassifyTransitivity(g, group);
  if (r.order == 0) return r;
  if (r.valency) {
    try {
      r.local = ComputeLocalIntersectionNumbers(g, 0);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTheoremViolation) throw;
      r.findings.push_back({"tree-levels", e.what()});
    }
  }

  const DistanceData bfs = BfsLevels(g, 0);
  const GeneratedGroup stabilizer = group.PointStabilizer(0);
  for (int i = 1; i <= bfs.eccentricity(); ++i) {
    if (Orbits(stabilizer, bfs.levels[i]).orbits.size() != 1) break;
    r.local_depth = i;
  }
  for (int s = 1; s <= std::min(r.local_depth, bfs.eccentricity() - 1); ++s) {
    RadiusAnalysis radius;
    try {
      radius.profile = ComputeSphereOrbitProfile(g, group, 0, s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTheoremViolation) throw;
      r.findings.push_back({"profile", "s=" + std::to_string(s) + ": " + e.what()});
      continue;
    }
    for (size_t i = 0; i < radius.profile.orbits.size(); ++i) {
      OrbitAnalysis orbit;
      orbit.index = static_cast<int>(i);
      const std::string where =
          "s=" + std::to_string(s) + " orbit " + std::to_string(i) + ": ";
      try {
        orbit.design = ExtractDesign(g, radius.profile, i);
        orbit.adjacency = AdjacencyRelationClassOf(g, radius.profile, i);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kHypothesis) throw;
        orbit.skipped = e.what();
      }
      if (orbit.design) {
        for (const Finding& f : orbit.design->violations) {
          r.findings.push_back({"design:" + f.clause, where + f.detail});
        }
      }
      if (orbit.adjacency) {
        for (const Finding& f : orbit.adjacency->violations) {
          r.findings.push_back({"adjacency:" + f.clause, where + f.detail});
        }
      }
      radius.orbits.push_back(std::move(orbit));
    }
    r.radii.push_back(std::move(radius));
  }
  r.verdict = VerifyMainTheorem(g, group, name, group_name);
  return r;
}

json ToJson(const AnalysisReport& r) {
  json j{{"schema", r.schema},
         {"graph", {{"name", r.name},
                    {"graph6", r.graph6},
                    {"order", r.order},
                    {"size", r.size},
                    {"valency", r.valency}}},
         {"girth", r.girth},
         {"distance_regularity", r.distance_regularity},
         {"local_intersection_numbers", r.local},
         {"group", {{"name", r.group_name},
                    {"order", r.group_order},
                    {"generators", r.group_generators}}},
         {"transitivity", r.transitivity},
         {"local_depth", r.local_depth},
         {"radii", r.radii},
         {"verdict", r.verdict},
         {"findings", r.findings}};
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

AnalysisReport ReportFromJson(const json& j) {
  try {
    AnalysisReport r;
    j.at("schema").get_to(r.schema);
    if (r.schema != kReportSchema) {
      Fail(ErrorCode::kParse, "unsupported report schema '" + r.schema + "'");
    }
    const json& graph = j.at("graph");
    graph.at("name").get_to(r.name);
    graph.at("graph6").get_to(r.graph6);
    graph.at("order").get_to(r.order);
    graph.at("size").get_to(r.size);
    graph.at("valency").get_to(r.valency);
    j.at("girth").get_to(r.girth);
    j.at("distance_regularity").get_to(r.distance_regularity);
    j.at("local_intersection_numbers").get_to(r.local);
    const json& group = j.at("group");
    group.at("name").get_to(r.group_name);
    group.at("order").get_to(r.group_order);
    group.at("generators").get_to(r.group_generators);
    j.at("transitivity").get_to(r.transitivity);
    j.at("local_depth").get_to(r.local_depth);
    j.at("radii").get_to(r.radii);
    j.at("verdict").get_to(r.verdict);
    j.at("findings").get_to(r.findings);
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed report: ") + e.what());
  }
}

json ToJson(const TheoremVerdict& verdict) { return verdict; }
json ToJson(const BlockDesign& design) { return design; }
json ToJson(const AdjacencyRelationClass& adjacency) { return adjacency; }
json ToJson(const SmallDesignClass& design_class) { return design_class; }
json ToJson(const Finding& finding) { return finding; }

std::string SerializeReport(const AnalysisReport& report) {
  return ToJson(report).dump(2) + "\n";
}

}  // namespace sdt
