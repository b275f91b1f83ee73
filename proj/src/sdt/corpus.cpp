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


#include "sdt/corpus.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "sdt/error.hpp"

namespace sdt {

namespace {

Graph FromEdgeSet(int n, const std::set<Edge>& edges) {
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::FromEdges(n, list);
}

void AddEdge(std::set<Edge>& edges, int u, int v) {
  edges.insert({std::min(u, v), std::max(u, v)});
}

}  // namespace

Graph CompleteGraph(int n) {
  std::set<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) AddEdge(edges, u, v);
  }
  return FromEdgeSet(n, edges);
}

Graph CompleteBipartiteGraph(int a, int b) {
  std::set<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) AddEdge(edges, u, a + v);
  }
  return FromEdgeSet(a + b, edges);
}

Graph CycleGraph(int n) {
  if (n < 3) Fail(ErrorCode::kArgument, "cycle needs at least 3 vertices");
  std::set<Edge> edges;
  for (int v = 0; v < n; ++v) AddEdge(edges, v, (v + 1) % n);
  return FromEdgeSet(n, edges);
}

Graph GeneralizedPetersenGraph(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    Fail(ErrorCode::kArgument, "generalized Petersen graph needs 1 <= k < n/2");
  }
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) {
    AddEdge(edges, i, (i + 1) % n);
    AddEdge(edges, i, n + i);
    AddEdge(edges, n + i, n + (i + k) % n);
  }
  return FromEdgeSet(2 * n, edges);
}

Graph LcfGraph(int n, const std::vector<int>& shifts) {
  if (shifts.empty() || n % static_cast<int>(shifts.size()) != 0) {
    Fail(ErrorCode::kArgument, "LCF pattern length must divide n");
  }
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) {
    AddEdge(edges, i, (i + 1) % n);
    const int shift = shifts[i % shifts.size()];
    AddEdge(edges, i, ((i + shift) % n + n) % n);
  }
  return FromEdgeSet(n, edges);
}

Graph HypercubeGraph(int dimension) {
  const int n = 1 << dimension;
  std::set<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < dimension; ++bit) AddEdge(edges, v, v ^ (1 << bit));
  }
  return FromEdgeSet(n, edges);
}

Graph OddGraph(int k) {
  const int ground = 2 * k - 1;
  std::vector<int> masks;
  for (int mask = 0; mask < (1 << ground); ++mask) {
    if (__builtin_popcount(mask) == k - 1) masks.push_back(mask);
  }
  std::set<Edge> edges;
  for (size_t u = 0; u < masks.size(); ++u) {
    for (size_t v = u + 1; v < masks.size(); ++v) {
      if ((masks[u] & masks[v]) == 0) AddEdge(edges, u, v);
    }
  }
  return FromEdgeSet(static_cast<int>(masks.size()), edges);
}

Graph ProjectivePlaneIncidenceGraph(int q) {
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) Fail(ErrorCode::kArgument, "field order must be prime");
  }
  // Normalised projective coordinates: the first non-zero entry is 1.
  std::vector<std::array<int, 3>> points;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        const std::array<int, 3> p{a, b, c};
        const auto lead = std::find_if(p.begin(), p.end(), [](int x) { return x != 0; });
        if (lead != p.end() && *lead == 1) points.push_back(p);
      }
    }
  }
  const int m = static_cast<int>(points.size());
  std::set<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const auto& p = points[i];
      const auto& l = points[j];
      if ((p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0) AddEdge(edges, i, m + j);
    }
  }
  return FromEdgeSet(2 * m, edges);
}

const std::vector<NamedGraphEntry>& Corpus() {
  static const std::vector<NamedGraphEntry> corpus = [] {
    std::vector<NamedGraphEntry> c;
    c.push_back({"K4", "complete graph on 4 vertices",
                 [] { return CompleteGraph(4); },
                 {4, 3, 3, 1, "{3;1}", "24"}, {}});
    c.push_back({"K33", "complete bipartite graph K_{3,3}; sides 0-2 and 3-5",
                 [] { return CompleteBipartiteGraph(3, 3); },
                 {6, 3, 4, 2, "{3,2;1,3}", "72"},
                 {{"C3wrC2", "(0 1 2)\n(3 4 5)\n(0 3)(1 4)(2 5)\n", "18"}}});
    c.push_back({"C5", "5-cycle", [] { return CycleGraph(5); },
                 {5, 2, 5, 2, "{2,1;1,1}", "10"}, {}});
    c.push_back({"C6", "6-cycle", [] { return CycleGraph(6); },
                 {6, 2, 6, 3, "{2,1,1;1,1,2}", "12"}, {}});
    c.push_back({"C8", "8-cycle", [] { return CycleGraph(8); },
                 {8, 2, 8, 4, "{2,1,1,1;1,1,1,2}", "16"}, {}});
    c.push_back({"Petersen", "generalized Petersen graph GP(5,2)",
                 [] { return GeneralizedPetersenGraph(5, 2); },
                 {10, 3, 5, 2, "{3,2;1,1}", "120"}, {}});
    c.push_back({"Heawood", "LCF [5,-5]^7",
                 [] { return LcfGraph(14, {5, -5}); },
                 {14, 3, 6, 3, "{3,2,2;1,1,3}", "336"}, {}});
    c.push_back({"Pappus", "LCF [5,7,-7,7,-7,-5]^3",
                 [] { return LcfGraph(18, {5, 7, -7, 7, -7, -5}); },
                 {18, 3, 6, 4, "{3,2,2,1;1,1,2,3}", "216"}, {}});
    c.push_back({"Desargues", "generalized Petersen graph GP(10,3)",
                 [] { return GeneralizedPetersenGraph(10, 3); },
                 {20, 3, 6, 5, "{3,2,2,1,1;1,1,2,2,3}", "240"}, {}});
    c.push_back({"Dodecahedron", "generalized Petersen graph GP(10,2)",
                 [] { return GeneralizedPetersenGraph(10, 2); },
                 {20, 3, 5, 5, "{3,2,1,1,1;1,1,1,2,3}", "120"}, {}});
    c.push_back({"TutteCoxeter", "LCF [-13,-9,7,-7,9,13]^5",
                 [] { return LcfGraph(30, {-13, -9, 7, -7, 9, 13}); },
                 {30, 3, 8, 4, "{3,2,2,2;1,1,1,3}", "1440"}, {}});
    c.push_back({"MobiusKantor", "generalized Petersen graph GP(8,3)",
                 [] { return GeneralizedPetersenGraph(8, 3); },
                 {16, 3, 6, 4, "", "96"}, {}});
    c.push_back({"Q3", "3-cube", [] { return HypercubeGraph(3); },
                 {8, 3, 4, 3, "{3,2,1;1,2,3}", "48"}, {}});
    c.push_back({"Q4", "4-cube", [] { return HypercubeGraph(4); },
                 {16, 4, 4, 4, "{4,3,2,1;1,2,3,4}", "384"}, {}});
    c.push_back({"K44", "complete bipartite graph K_{4,4}",
                 [] { return CompleteBipartiteGraph(4, 4); },
                 {8, 4, 4, 2, "{4,3;1,4}", "1152"}, {}});
    c.push_back({"K5", "complete graph on 5 vertices",
                 [] { return CompleteGraph(5); },
                 {5, 4, 3, 1, "{4;1}", "120"}, {}});
    c.push_back({"PG23", "point-line incidence graph of PG(2,3)",
                 [] { return ProjectivePlaneIncidenceGraph(3); },
                 {26, 4, 6, 3, "{4,3,3;1,1,4}", "11232"}, {}});
    c.push_back({"O4", "odd graph on the 3-subsets of a 7-set",
                 [] { return OddGraph(4); },
                 {35, 4, 6, 3, "{4,3,3;1,1,2}", "5040"}, {}});
    return c;
  }();
  return corpus;
}

const NamedGraphEntry& FindCorpusEntry(std::string_view name) {
  for (const auto& entry : Corpus()) {
    if (entry.name == name) return entry;
  }
  Fail(ErrorCode::kNotFound, "unknown corpus graph '" + std::string(name) + "'");
}

}  // namespace sdt
