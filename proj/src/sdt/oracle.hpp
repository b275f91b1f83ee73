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


// Exhaustive re-computations that share no code with the fast paths.

#ifndef SDT_ORACLE_HPP_
#define SDT_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sdt/graph.hpp"
#include "sdt/group.hpp"

namespace sdt {

// All-pairs distances by Floyd-Warshall; -1 for unreachable pairs.
std::vector<std::vector<int>> AllPairsDistances(const Graph& g);

// Intersection array from counts over every ordered vertex pair, or nullopt
// when some count depends on the pair.
std::optional<IntersectionArray> BruteForceIntersectionArray(const Graph& g);

struct OracleComparison {
  int order = 0;
  std::string brute_group_order;
  std::string search_group_order;
  bool same_order = false;
  bool same_membership = false;  // every exhaustive automorphism is in the group
  bool same_orbits = false;
  std::string brute_array;       // empty when not distance-regular
  std::string core_array;
  bool same_array = false;

  bool agrees() const {
    return same_order && same_membership && same_orbits && same_array;
  }
};

// kScale above the exhaustive automorphism cap.
OracleComparison CompareWithOracles(const Graph& g);

}  // namespace sdt

#endif  // SDT_ORACLE_HPP_
