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


#include "sdt/oracle.hpp"

#include <numeric>

#include "sdt/aut_search.hpp"

namespace sdt {

std::vector<std::vector<int>> AllPairsDistances(const Graph& g) {
  const int n = g.order();
  constexpr int kFar = 1 << 29;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int m = 0; m < n; ++m) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        d[u][v] = std::min(d[u][v], d[u][m] + d[m][v]);
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x == kFar) x = -1;
    }
  }
  return d;
}

std::optional<IntersectionArray> BruteForceIntersectionArray(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const auto d = AllPairsDistances(g);
  int diameter = 0;
  for (const auto& row : d) {
    for (int x : row) {
      if (x < 0) return std::nullopt;
      diameter = std::max(diameter, x);
    }
  }
  // counts[h] = (c, a, b), fixed by the first pair seen at distance h.
  std::vector<std::optional<Triple>> counts(diameter + 1);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int h = d[u][v];
      Triple t;
      for (int w : g.neighbors(v)) {
        if (d[u][w] == h - 1) ++t.c;
        if (d[u][w] == h) ++t.a;
        if (d[u][w] == h + 1) ++t.b;
      }
      if (!counts[h]) {
        counts[h] = t;
      } else if (*counts[h] != t) {
        return std::nullopt;
      }
    }
  }
  IntersectionArray array;
  for (int h = 0; h < diameter; ++h) array.b.push_back(counts[h]->b);
  for (int h = 1; h <= diameter; ++h) array.c.push_back(counts[h]->c);
  return array;
}

OracleComparison CompareWithOracles(const Graph& g) {
  OracleComparison out;
  out.order = g.order();
  const std::vector<Permutation> all = BruteForceAutomorphisms(g);
  const GeneratedGroup searched =
      GeneratedGroup::SchreierSims(g.order(), AutomorphismGenerators(g).generators);
  out.brute_group_order = std::to_string(all.size());
  out.search_group_order = searched.order().str();
  out.same_order = out.brute_group_order == out.search_group_order;
  out.same_membership = true;
  for (const Permutation& p : all) {
    if (!searched.Contains(p)) {
      out.same_membership = false;
      break;
    }
  }
  std::vector<int> points(g.order());
  std::iota(points.begin(), points.end(), 0);
  out.same_orbits = Orbits(all, points) == Orbits(searched, points);

  if (auto brute = BruteForceIntersectionArray(g)) out.brute_array = brute->ToString();
  if (g.connected()) {
    const DistanceRegularity core = DistanceRegular(g);
    if (core.array) out.core_array = core.array->ToString();
  }
  out.same_array = out.brute_array == out.core_array;
  return out;
}

}  // namespace sdt
