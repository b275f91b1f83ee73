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


// Shared fixtures: seeded random graphs and small helpers.

#ifndef SDT_TESTS_SUPPORT_HPP_
#define SDT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdt/aut_search.hpp"
#include "sdt/corpus.hpp"
#include "sdt/graph.hpp"
#include "sdt/group.hpp"

namespace sdt::testing {

inline GeneratedGroup AutGroup(const Graph& g) {
  return GeneratedGroup::SchreierSims(g.order(),
                                      AutomorphismGenerators(g).generators);
}

inline Graph Corpus(const std::string& name) {
  return FindCorpusEntry(name).build();
}

// Connected graph on n vertices: a random spanning tree plus each remaining
// pair with probability p.
inline Graph RandomConnectedGraph(std::mt19937& rng, int n, double p) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  auto add = [&](int u, int v) {
    Edge e{std::min(u, v), std::max(u, v)};
    if (seen.insert(e).second) edges.push_back(e);
  };
  for (int v = 1; v < n; ++v) {
    add(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) add(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

// Connected simple k-regular graph by the pairing model with rejection.
inline Graph RandomRegularGraph(std::mt19937& rng, int n, int k) {
  while (true) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), k, v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<Edge> seen;
    bool simple = true;
    for (size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      const int u = std::min(stubs[i], stubs[i + 1]);
      const int v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v && seen.insert({u, v}).second;
    }
    if (!simple) continue;
    const std::vector<Edge> edges(seen.begin(), seen.end());
    Graph g = Graph::FromEdges(n, edges);
    if (g.connected()) return g;
  }
}

inline Graph PathGraph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::FromEdges(n, edges);
}

inline Graph StarGraph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::FromEdges(leaves + 1, edges);
}

inline std::vector<int> LevelSizes(const DistanceData& d) {
  std::vector<int> out;
  for (const auto& level : d.levels) out.push_back(static_cast<int>(level.size()));
  return out;
}

}  // namespace sdt::testing

#endif  // SDT_TESTS_SUPPORT_HPP_
