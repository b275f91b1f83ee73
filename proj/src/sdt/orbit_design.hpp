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

// Intersection numbers between invariant vertex sets, the orbit structure of
// a vertex stabilizer on the sphere just past a transitive radius, and the
// local incidence structure between Γ_s(α) and one of those orbits.

#ifndef SDT_ORBIT_DESIGN_HPP_
#define SDT_ORBIT_DESIGN_HPP_

#include <span>
#include <string>
#include <vector>

#include "sdt/graph.hpp"
#include "sdt/group.hpp"

namespace sdt {

// |Γ(δ) ∩ omega| for δ in `delta`, after checking that the group is
// transitive on `delta`, fixes `omega` setwise, and that the count does not
// depend on δ. Violations throw kPrecondition; if the counts also differ the
// message names two witnesses.
int Kappa(const Graph& g, std::span<const Permutation> generators,
          std::span<const int> delta, std::span<const int> omega);

struct SphereOrbitProfile {
  int alpha = 0;
  int s = 0;
  int valency = 0;                 // deg(α)
  std::vector<int> neighbors;      // β_1..β_k, ascending ids
  std::vector<int> sphere;         // Γ_s(α)
  int sphere_b = 0;                // b_s(Γ, α)
  std::vector<std::vector<int>> orbits;  // G_α-orbits Δ_i on Γ_{s+1}(α)
  std::vector<int> orbit_sizes;    // δ_i
  std::vector<int> b_prime;        // κ(Γ_s(α), Δ_i)
  std::vector<int> c_prime;        // κ(Δ_i, Γ_s(α))
  std::vector<std::vector<int>> cross;   // a_{i,j} = κ(Δ_i, Δ_j)
  std::vector<Permutation> stabilizer_generators;
  std::string stabilizer_order;

  bool operator==(const SphereOrbitProfile&) const = default;
};

// Requires G <= Aut(g), 1 <= s, s + 1 <= ε(α), and G_α transitive on
// Γ_i(α) for 1 <= i <= s (kPrecondition naming the level and two orbit
// representatives otherwise). Throws kTheoremViolation if the edge-count
// identities between the sphere and its orbits fail.
SphereOrbitProfile ComputeSphereOrbitProfile(const Graph& g,
                                             const GeneratedGroup& group,
                                             int alpha, int s);

// Two-layer incidence between Γ_s(α), split into branches B_1..B_k, and an
// orbit Δ ⊆ Γ_{s+1}(α). labels[i] is S(x) for x = delta[i]: the points j
// (1-based) with ∂(x, β_j) = s. Synthetic structures can be built directly.
struct LocalIncidence {
  int k = 0;
  int s = 0;
  std::vector<std::vector<int>> branches;  // branches[j-1] = B_j
  std::vector<int> delta;
  std::vector<std::vector<int>> labels;
  std::vector<Edge> cross_edges;           // (γ ∈ Γ_s(α), x ∈ Δ)
};

LocalIncidence BuildLocalIncidence(const Graph& g,
                                   const SphereOrbitProfile& profile,
                                   size_t orbit_index);

// Generators of G_{αβ_j} restricted to Γ_1(α), as permutations of the
// 0-based labels 0..k-1; one list per j.
std::vector<std::vector<Permutation>> NeighborStabilizerActions(
    const Graph& g, const SphereOrbitProfile& profile);

}  // namespace sdt

#endif  // SDT_ORBIT_DESIGN_HPP_
