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


// Full per-graph analysis and its canonical JSON form.

#ifndef SDT_REPORT_HPP_
#define SDT_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdt/adjacency.hpp"
#include "sdt/design.hpp"
#include "sdt/graph.hpp"
#include "sdt/group.hpp"
#include "sdt/harness.hpp"
#include "sdt/orbit_design.hpp"

namespace sdt {

inline constexpr const char* kReportSchema = "sdt-report/1";

struct OrbitAnalysis {
  int index = 0;
  std::optional<BlockDesign> design;
  std::optional<AdjacencyRelationClass> adjacency;
  std::string skipped;  // why design and adjacency are absent

  bool operator==(const OrbitAnalysis&) const = default;
};

struct RadiusAnalysis {
  SphereOrbitProfile profile;
  std::vector<OrbitAnalysis> orbits;

  bool operator==(const RadiusAnalysis&) const = default;
};

struct AnalysisReport {
  std::string schema = kReportSchema;
  std::string name;
  std::string graph6;
  int order = 0;
  int size = 0;
  std::optional<int> valency;
  GirthData girth;
  DistanceRegularity distance_regularity;
  std::optional<LocalIntersectionNumbers> local;  // at vertex 0, regular graphs
  std::string group_name;
  std::string group_order;
  std::vector<Permutation> group_generators;
  TransitivityReport transitivity;
  int local_depth = 0;  // largest s with G_0 transitive on levels 1..s
  std::vector<RadiusAnalysis> radii;
  TheoremVerdict verdict;
  std::vector<Finding> findings;  // theorem violations found anywhere above
  std::optional<double> elapsed_ms;

  bool operator==(const AnalysisReport&) const = default;
  bool HasViolation() const;
};

// Runs every analysis at base vertex 0. Throws kConnectivity for a
// disconnected graph and kArgument for a non-automorphism generator.
AnalysisReport Analyze(const Graph& g, const GeneratedGroup& group,
                       const std::string& name, const std::string& group_name);

nlohmann::json ToJson(const AnalysisReport& report);
// kParse on schema mismatch or malformed input.
AnalysisReport ReportFromJson(const nlohmann::json& j);
// JSON forms of the records a report is built from.
nlohmann::json ToJson(const TheoremVerdict& verdict);
nlohmann::json ToJson(const BlockDesign& design);
nlohmann::json ToJson(const AdjacencyRelationClass& adjacency);
nlohmann::json ToJson(const SmallDesignClass& design_class);
nlohmann::json ToJson(const Finding& finding);

// Two-space indented, sorted keys, trailing newline.
std::string SerializeReport(const AnalysisReport& report);

}  // namespace sdt

#endif  // SDT_REPORT_HPP_
