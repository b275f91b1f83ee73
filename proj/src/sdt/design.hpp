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


// Block designs induced on the neighbourhood of a vertex by an orbit on the
// next sphere, plus the exhaustive catalogue of small 1-designs.

#ifndef SDT_DESIGN_HPP_
#define SDT_DESIGN_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdt/graph.hpp"
#include "sdt/group.hpp"
#include "sdt/orbit_design.hpp"

namespace sdt {

// One failed identity. `clause` is a stable machine-readable key.
struct Finding {
  std::string clause;
  std::string detail;
  bool operator==(const Finding&) const = default;
};

using Block = std::vector<int>;  // sorted, 1-based points

struct BlockDesign {
  std::vector<int> point_labels;  // β_1..β_k as vertex ids
  int points = 0;                 // k
  int block_size = 0;             // c'
  int strength = 0;               // t
  int b_prime = 0;
  int s = 0;
  int orbit_size = 0;             // |Δ|
  std::vector<Block> blocks;      // lexicographic
  int block_class_size = 0;       // e, or 0 when not constant
  std::vector<int> lambda;        // lambda[j-1] = λ_j, 1 <= j <= t
  std::vector<int> delta;         // delta[j-1] = δ_j measured on Δ
  std::vector<Finding> violations;

  bool ok() const { return violations.empty(); }

  bool operator==(const BlockDesign&) const = default;
};

// b'(k-1)^(s-1) C(c'-1, t-1) / C(k-1, t-1). kArgument unless
// 1 <= t <= c' <= k, b' >= 1, s >= 1; kApplicability if not an integer.
long long DeltaTFormula(int b_prime, int c_prime, int k, int s, int t);

// Δ(S) = {x : S ⊆ S(x)} for every S of size `size` with Δ(S) non-empty.
// Values are indices into incidence.delta.
std::map<Block, std::vector<int>> BlockClasses(const LocalIncidence& incidence,
                                               int size);

// Checks every counting identity of the induced design at strengths 1..t.
// Works on synthetic incidences; failures go to `violations`.
BlockDesign AnalyzeDesign(const LocalIncidence& incidence, int b_prime,
                          int c_prime, int t);

// Graph entry point. Throws kHypothesis naming the failed clause when the
// valency is below 3, the local girth at α is below 2s+2, or the local
// action is not t-homogeneous at the requested t. With no t, the largest
// homogeneous t in 1..c' is used; a requested t above c' is lowered to c'.
BlockDesign ExtractDesign(const Graph& g, const SphereOrbitProfile& profile,
                          size_t orbit_index, std::optional<int> t = {});

// Hypothesis clauses shared with the adjacency classification.
void RequireDesignHypothesis(const Graph& g, const SphereOrbitProfile& profile);

struct SmallDesignClass {
  int points = 0;
  int block_size = 0;
  int lambda1 = 0;
  int block_count = 0;
  int strength = 0;         // largest t <= block size with a t-design
  int strength_lambda = 0;  // λ at that strength
  // Every labeling in the class, lexicographic; the first is canonical.
  std::vector<std::vector<Block>> labelings;

  bool operator==(const SmallDesignClass&) const = default;
};

// All 1-designs with distinct blocks of the given size on k in {3, 4}
// points, up to relabeling, ordered by λ_1. kScope for other k.
std::vector<SmallDesignClass> EnumerateSmallOneDesigns(int k, int block_size);

// "t-(k,c,λ)".
std::string DesignParameters(int t, int k, int block_size, int lambda);

// Index of the class containing `blocks` as one of its labelings.
std::optional<size_t> MatchSmallDesign(const std::vector<SmallDesignClass>& classes,
                                       const std::vector<Block>& blocks);

}  // namespace sdt

#endif  // SDT_DESIGN_HPP_
