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


// How the edges between Γ_s(α) and an orbit Δ ⊆ Γ_{s+1}(α) split across
// the block classes Δ(S), and the nested designs that the split induces.

#ifndef SDT_ADJACENCY_HPP_
#define SDT_ADJACENCY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sdt/design.hpp"

namespace sdt {

enum class StructureTag { kMatching, kStarUnion, kUniform, kIrregular };

const char* StructureTagName(StructureTag tag);

// Blocks through a fixed point j and the family of m-sets {B_j^γ}.
struct UniformDesign {
  int mu = 0;       // |B(c', j)|
  int m = 0;
  int b = 0;
  int lambda = 0;   // replication of each block in the m-set family
  int f_j = 0;      // |B_j(S)|
  int f_j_m = 0;    // |B_j(S_1..S_m)|
  std::optional<int> tau;         // homogeneity on B(c', j), when known
  std::optional<int> lambda_tau;  // set when tau < m
  std::optional<int> f_j_tau;     // set when tau < m
  std::vector<Block> point_blocks;             // B(c', 1)
  std::vector<std::vector<int>> blocks_m;      // m-sets as indices into point_blocks

  bool operator==(const UniformDesign&) const = default;
};

struct AdjacencyRelationClass {
  std::vector<int> partition;  // P_{s+1}(α, Δ), descending
  StructureTag tag = StructureTag::kIrregular;
  int m = 0;
  int b = 0;
  int f_j = 0;
  int canonical_gamma = -1;                   // smallest vertex of B_1
  std::vector<Block> canonical_blocks;        // B_1^γ
  std::vector<std::vector<int>> canonical_parts;  // Δ_1^γ, aligned with blocks
  std::optional<UniformDesign> uniform;
  std::vector<std::string> checks;            // clauses that were evaluated
  std::vector<Finding> violations;

  bool ok() const { return violations.empty(); }

  bool operator==(const AdjacencyRelationClass&) const = default;
};

// Classifies an incidence. label_actions[j], when given, holds generators of
// the stabilizer of β_{j+1} acting on labels 0..k-1; it is needed only for
// the homogeneity level of the nested design.
AdjacencyRelationClass ClassifyAdjacency(
    const LocalIncidence& incidence, int b_prime, int c_prime,
    const std::vector<std::vector<Permutation>>* label_actions = nullptr);

// Graph entry point; same hypothesis as ExtractDesign.
AdjacencyRelationClass AdjacencyRelationClassOf(const Graph& g,
                                                const SphereOrbitProfile& profile,
                                                size_t orbit_index);

}  // namespace sdt

#endif  // SDT_ADJACENCY_HPP_
