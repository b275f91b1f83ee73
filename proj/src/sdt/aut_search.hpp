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

#ifndef SDT_AUT_SEARCH_HPP_
#define SDT_AUT_SEARCH_HPP_

#include <optional>
#include <vector>

#include "sdt/graph.hpp"
#include "sdt/group.hpp"

namespace sdt {

struct SearchStats {
  long long nodes_visited = 0;
  long long pruned_by_refinement = 0;
  int generators_found = 0;
};

struct AutomorphismSearchResult {
  std::vector<Permutation> generators;
  SearchStats stats;
};

// Generators of Aut(g) by individualization-refinement with automorphism
// pruning along the first path of the search tree.
AutomorphismSearchResult AutomorphismGenerators(const Graph& g);

// Every automorphism of g, by exhaustive backtracking. n <= 12.
inline constexpr int kBruteForceMaxOrder = 12;
std::vector<Permutation> BruteForceAutomorphisms(const Graph& g);

// Stable 1-dimensional Weisfeiler-Leman refinement of an ordered colouring.
// Colours in the result are 0..c-1, ordered consistently with the input.
std::vector<int> RefineColoring(const Graph& g, std::vector<int> colors);

// The first edge whose image is a non-edge, if any.
std::optional<Edge> BrokenEdge(const Graph& g, const Permutation& p);
inline bool IsAutomorphism(const Graph& g, const Permutation& p) {
  return p.degree() == g.order() && !BrokenEdge(g, p);
}

}  // namespace sdt

#endif  // SDT_AUT_SEARCH_HPP_
