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


// Transitivity classification of a (graph, group) pair and the check of the
// cubic and tetravalent distance-regularity statements against it.

#ifndef SDT_HARNESS_HPP_
#define SDT_HARNESS_HPP_

#include <string>
#include <vector>

#include "sdt/graph.hpp"
#include "sdt/group.hpp"

namespace sdt {

struct TransitivityReport {
  bool vertex_transitive = false;
  int diameter = 0;
  // Largest s with G_α transitive on Γ_1(α)..Γ_s(α); -1 when G is not
  // vertex-transitive.
  int max_distance_transitivity = -1;
  bool fully_distance_transitive = false;
  // Largest s with G transitive on s-arcs; -1 when not vertex-transitive.
  int max_arc_transitivity = -1;
  // Set when the arc level stopped at the search cap rather than failing.
  bool arc_transitivity_capped = false;
  int local_homogeneity = 0;  // largest t with G_α j-homogeneous for j <= t
  std::string group_order;

  bool operator==(const TransitivityReport&) const = default;
};

// Throws kArgument naming the broken edge if a generator is not an
// automorphism, kConnectivity for a disconnected graph.
TransitivityReport ClassifyTransitivity(const Graph& g, const GeneratedGroup& group);

enum class TheoremClause { kNone, kCubic, kTetravalent };
enum class Verdict { kConsistent, kViolation, kNotApplicable };

const char* TheoremClauseName(TheoremClause clause);
const char* VerdictName(Verdict verdict);

struct TheoremVerdict {
  std::string graph;
  std::string group;
  TheoremClause clause = TheoremClause::kNone;
  bool hypothesis_holds = false;
  bool predicts_distance_regular = false;
  // "applies", "vacuous" (d = 2), "not-triggered" (G-distance-transitive or
  // hypothesis fails), "not-applicable".
  std::string girth_clause = "not-applicable";
  int girth_bound = 0;  // 2d - 1 when the girth clause applies
  int valency = 0;
  int diameter = 0;
  int girth = 0;        // kNoCycle for forests
  bool distance_regular = false;
  std::string intersection_array;  // empty when not distance-regular
  TransitivityReport transitivity;
  Verdict verdict = Verdict::kNotApplicable;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  bool operator==(const TheoremVerdict&) const = default;
};

TheoremVerdict VerifyMainTheorem(const Graph& g, const GeneratedGroup& group,
                                 const std::string& graph_name = "",
                                 const std::string& group_name = "");

// (6 + 12/c_d) 3^(d-2) - 1. kArgument unless c_d in 1..4 and d >= 3.
long long TetravalentOrder(int c_d, int d);
// 11 * 3^(d-2) - 1. kArgument unless d >= 3.
long long CaseOrder(int d);
// Prime factors in ascending order with multiplicity. n >= 1.
std::vector<long long> PrimeFactors(long long n);

}  // namespace sdt

#endif  // SDT_HARNESS_HPP_
