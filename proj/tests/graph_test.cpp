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


#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "sdt/error.hpp"
#include "sdt/graph.hpp"
#include "sdt/graph6.hpp"
#include "sdt/oracle.hpp"
#include "support.hpp"

namespace sdt {
namespace {

using testing::Corpus;
using testing::LevelSizes;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an sdt::Error";
  return ErrorCode::kArgument;
}

// Shortest cycle through edge {u,v}: distance from u to v without that edge.
int CycleThroughEdge(const Graph& g, int u, int v) {
  std::vector<Edge> rest;
  for (const auto& e : g.edges()) {
    if (e != Edge{std::min(u, v), std::max(u, v)}) rest.push_back(e);
  }
  const auto d = AllPairsDistances(Graph::FromEdges(g.order(), rest));
  return d[u][v] < 0 ? kNoCycle : d[u][v] + 1;
}

GirthData GirthOracle(const Graph& g) {
  GirthData out;
  const int n = g.order();
  out.alpha_girth.assign(n, kNoCycle);
  for (const auto& [u, v] : g.edges()) {
    const int len = CycleThroughEdge(g, u, v);
    out.alpha_girth[u] = std::min(out.alpha_girth[u], len);
    out.alpha_girth[v] = std::min(out.alpha_girth[v], len);
    out.girth = std::min(out.girth, len);
  }
  out.local_girth = out.alpha_girth;
  for (int a = 0; a < n; ++a) {
    for (int b : g.neighbors(a)) {
      if (out.alpha_girth[b] != kNoCycle) {
        out.local_girth[a] = std::min(out.local_girth[a], out.alpha_girth[b] + 1);
      }
    }
  }
  return out;
}

TEST(GraphTest, RejectsLoopsAndRepeatedEdges) {
  const Edge loop[] = {{0, 0}};
  EXPECT_EQ(CodeOf([&] { Graph::FromEdges(2, loop); }), ErrorCode::kInvariant);
  const Edge twice[] = {{0, 1}, {1, 0}};
  EXPECT_EQ(CodeOf([&] { Graph::FromEdges(2, twice); }), ErrorCode::kInvariant);
  const Edge outside[] = {{0, 5}};
  EXPECT_EQ(CodeOf([&] { Graph::FromEdges(2, outside); }), ErrorCode::kArgument);
}

TEST(GraphTest, AdjacencyIsSymmetricAndSorted) {
  for (const auto& entry : sdt::Corpus()) {
    const Graph g = entry.build();
    for (int v = 0; v < g.order(); ++v) {
      const auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end())) << entry.name;
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      for (int w : nb) {
        EXPECT_NE(w, v);
        EXPECT_TRUE(g.adjacent(w, v)) << entry.name;
      }
    }
  }
}

TEST(GraphTest, DisconnectedGraphIsRejectedByAnalyses) {
  const Edge edges[] = {{0, 1}, {2, 3}};
  const Graph g = Graph::FromEdges(4, edges);
  EXPECT_FALSE(g.connected());
  EXPECT_EQ(CodeOf([&] { BfsLevels(g, 0); }), ErrorCode::kConnectivity);
  EXPECT_EQ(CodeOf([&] { BfsLevels(Corpus("K4"), 4); }), ErrorCode::kArgument);
}

TEST(BfsLevelsTest, Examples) {
  const DistanceData k4 = BfsLevels(Corpus("K4"), 0);
  EXPECT_EQ(k4.levels, (std::vector<std::vector<int>>{{0}, {1, 2, 3}}));
  EXPECT_EQ(k4.eccentricity(), 1);
  const Graph petersen = Corpus("Petersen");
  for (int a = 0; a < petersen.order(); ++a) {
    EXPECT_EQ(LevelSizes(BfsLevels(petersen, a)), (std::vector<int>{1, 3, 6}));
  }
  const DistanceData path = BfsLevels(testing::PathGraph(3), 0);
  EXPECT_EQ(LevelSizes(path), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(path.eccentricity(), 2);
}

TEST(BfsLevelsTest, LevelsPartitionAndAgreeWithAllPairs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::RandomConnectedGraph(rng, 2 + trial % 15, 0.2);
    const auto d = AllPairsDistances(g);
    for (int a = 0; a < g.order(); ++a) {
      const DistanceData bfs = BfsLevels(g, a);
      EXPECT_EQ(bfs.levels[0], std::vector<int>{a});
      int covered = 0;
      for (int i = 0; i <= bfs.eccentricity(); ++i) {
        covered += static_cast<int>(bfs.levels[i].size());
        for (int v : bfs.levels[i]) {
          EXPECT_EQ(d[a][v], i);
          if (i > 0) {
            const auto nb = g.neighbors(v);
            EXPECT_TRUE(std::any_of(nb.begin(), nb.end(), [&](int w) {
              return bfs.distance[w] == i - 1;
            }));
          }
        }
      }
      EXPECT_EQ(covered, g.order());
    }
  }
}

TEST(GirthTest, Examples) {
  const GirthData petersen = ComputeGirthData(Corpus("Petersen"));
  EXPECT_EQ(petersen.girth, 5);
  EXPECT_EQ(petersen.alpha_girth, std::vector<int>(10, 5));
  EXPECT_EQ(ComputeGirthData(Corpus("K33")).girth, 4);
  const GirthData star = ComputeGirthData(testing::StarGraph(3));
  EXPECT_EQ(star.girth, kNoCycle);
  EXPECT_EQ(star.alpha_girth, std::vector<int>(4, kNoCycle));
  EXPECT_EQ(star.local_girth, std::vector<int>(4, kNoCycle));
}

TEST(GirthTest, MatchesEdgeRemovalOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::RandomConnectedGraph(rng, 3 + trial % 12, 0.15);
    EXPECT_EQ(ComputeGirthData(g), GirthOracle(g)) << "trial " << trial;
  }
  for (const auto& entry : sdt::Corpus()) {
    const Graph g = entry.build();
    EXPECT_EQ(ComputeGirthData(g), GirthOracle(g)) << entry.name;
  }
}

TEST(LocalIntersectionTest, Examples) {
  auto triples = [](const Graph& g) {
    std::vector<Triple> out;
    for (const auto& level : ComputeLocalIntersectionNumbers(g, 0).levels) {
      EXPECT_TRUE(level.counts.has_value());
      out.push_back(level.counts.value_or(Triple{}));
    }
    return out;
  };
  EXPECT_EQ(triples(Corpus("Petersen")),
            (std::vector<Triple>{{1, 0, 2}, {1, 2, 0}}));
  EXPECT_EQ(triples(Corpus("K33")), (std::vector<Triple>{{1, 0, 2}, {3, 0, 0}}));
  EXPECT_EQ(triples(Corpus("C6")),
            (std::vector<Triple>{{1, 0, 1}, {1, 0, 1}, {2, 0, 0}}));
}

TEST(LocalIntersectionTest, NonRegularIsRejected) {
  EXPECT_EQ(CodeOf([] { ComputeLocalIntersectionNumbers(testing::PathGraph(3), 0); }),
            ErrorCode::kRegularity);
}

TEST(LocalIntersectionTest, WitnessForNonConstantLevel) {
  const LocalIntersectionNumbers mk =
      ComputeLocalIntersectionNumbers(Corpus("MobiusKantor"), 0);
  bool found = false;
  for (const auto& level : mk.levels) {
    if (!level.witness) continue;
    found = true;
    EXPECT_FALSE(level.counts.has_value());
    EXPECT_NE(level.witness->first.counts, level.witness->second.counts);
  }
  EXPECT_TRUE(found);
}

bool TreeLike(const LocalIntersectionNumbers& local, int k, int s) {
  long long size = k;
  for (int i = 1; i <= s; ++i) {
    const LevelCounts& level = local.levels[i - 1];
    if (!level.counts || *level.counts != Triple{1, 0, k - 1} || level.size != size) {
      return false;
    }
    size *= k - 1;
  }
  return true;
}

// Levels 1..tree_depth are always tree-like. Under the weaker α-girth bound
// alone they can fail, but only when some vertex near α lies on a short
// cycle. Returns the number of such failures.
int CheckTreeLevels(const Graph& g, int k, int* exercised) {
  int literal_failures = 0;
  std::optional<GirthData> oracle;
  for (int a = 0; a < g.order(); ++a) {
    const LocalIntersectionNumbers local = ComputeLocalIntersectionNumbers(g, a);
    for (const auto& level : local.levels) {
      if (level.counts) {
        EXPECT_EQ(level.counts->c + level.counts->a + level.counts->b, k);
      }
    }
    EXPECT_LE(local.tree_depth, local.alpha_girth_depth);
    EXPECT_TRUE(TreeLike(local, k, local.tree_depth));
    *exercised += local.tree_depth;
    for (int s = local.tree_depth + 1; s <= local.alpha_girth_depth; ++s) {
      if (TreeLike(local, k, s)) continue;
      ++literal_failures;
      if (!oracle) oracle = GirthOracle(g);
      const DistanceData bfs = BfsLevels(g, a);
      bool short_cycle = false;
      for (int j = 1; j < s; ++j) {
        for (int w : bfs.levels[j]) {
          short_cycle |= oracle->alpha_girth[w] < 2 * (s - j) + 2;
        }
      }
      EXPECT_TRUE(short_cycle) << "vertex " << a << " s=" << s;
    }
  }
  return literal_failures;
}

TEST(LocalIntersectionTest, TreeLevelsOnRandomRegularGraphs) {
  std::mt19937 rng(2026);
  int exercised = 0;
  int literal_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = trial % 2 == 0 ? 3 : 4;
    int n = 6 + static_cast<int>(rng() % 35);
    if (n * k % 2) ++n;
    n = std::min(n, 40);
    literal_failures +=
        CheckTreeLevels(testing::RandomRegularGraph(rng, n, k), k, &exercised);
  }
  EXPECT_GT(exercised, 1000);
  EXPECT_GT(literal_failures, 0);
}

// α-girth 6 at vertex 8 and eccentricity 3, yet level 2 carries (1,1,1): a
// triangle hangs off a neighbour of α without touching α.
TEST(LocalIntersectionTest, AlphaGirthAloneDoesNotForceTreeLevels) {
  const Graph g = ParseGraph6("KW?W^A?S?``S");
  const LocalIntersectionNumbers local = ComputeLocalIntersectionNumbers(g, 8);
  EXPECT_EQ(local.alpha_girth, 6);
  EXPECT_EQ(local.alpha_girth_depth, 2);
  EXPECT_EQ(local.tree_depth, 1);
  ASSERT_TRUE(local.levels[1].counts.has_value());
  EXPECT_EQ(*local.levels[1].counts, (Triple{1, 1, 1}));
  EXPECT_EQ(ComputeGirthData(g).girth, 3);
}

TEST(LocalIntersectionTest, TreeLevelsOnCorpus) {
  int exercised = 0;
  for (const auto& entry : sdt::Corpus()) {
    const Graph g = entry.build();
    // Vertex-transitive: every vertex has the same α-girth, so the bounds agree.
    EXPECT_EQ(CheckTreeLevels(g, g.RequireRegular(), &exercised), 0) << entry.name;
    EXPECT_EQ(ComputeLocalIntersectionNumbers(g, 0).tree_depth,
              ComputeLocalIntersectionNumbers(g, 0).alpha_girth_depth)
        << entry.name;
  }
  EXPECT_GT(exercised, 0);
}

TEST(DistanceRegularTest, Examples) {
  EXPECT_EQ(DistanceRegular(Corpus("Petersen")).array->ToString(), "{3,2;1,1}");
  EXPECT_EQ(DistanceRegular(Corpus("Heawood")).array->ToString(), "{3,2,2;1,1,3}");
  const IntersectionArray q3 = *DistanceRegular(Corpus("Q3")).array;
  EXPECT_EQ(q3.a(), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(DistanceRegular(Corpus("Petersen")).array->a(),
            (std::vector<int>{0, 0, 2}));

  std::vector<Edge> edges = CompleteBipartiteGraph(3, 3).edges();
  edges.erase(edges.begin());
  const DistanceRegularity minus = DistanceRegular(Graph::FromEdges(6, edges));
  EXPECT_FALSE(minus.regular());
  ASSERT_TRUE(minus.witness.has_value());
  EXPECT_NE(minus.witness->first.counts, minus.witness->second.counts);
}

TEST(DistanceRegularTest, AgreesWithPairCountOracle) {
  for (const auto& entry : sdt::Corpus()) {
    const Graph g = entry.build();
    const auto core = DistanceRegular(g).array;
    EXPECT_EQ(core, BruteForceIntersectionArray(g)) << entry.name;
    EXPECT_EQ(core ? core->ToString() : "", entry.expected.intersection_array)
        << entry.name;
  }
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g =
        trial % 2 ? testing::RandomRegularGraph(rng, 2 * (3 + trial % 12), 3)
                  : testing::RandomConnectedGraph(rng, 3 + trial % 10, 0.5);
    EXPECT_EQ(DistanceRegular(g).array, BruteForceIntersectionArray(g));
  }
}

TEST(InducedDegreesTest, Examples) {
  const Graph petersen = Corpus("Petersen");
  const InducedDegreeProfile p =
      InducedDegrees(petersen, BfsLevels(petersen, 0).levels[2]);
  EXPECT_EQ(p.degrees, std::vector<int>(6, 2));
  EXPECT_EQ(p.degree_two_count, 6);
  EXPECT_TRUE(InducedDegrees(petersen, {}).degrees.empty());
  const Graph k33 = Corpus("K33");
  EXPECT_EQ(InducedDegrees(k33, BfsLevels(k33, 0).levels[2]).degrees,
            (std::vector<int>{0, 0}));
  const int bad[] = {99};
  EXPECT_EQ(CodeOf([&] { InducedDegrees(k33, bad); }), ErrorCode::kArgument);
}

TEST(CorpusTest, ExpectedFactsAreRederived) {
  for (const auto& entry : sdt::Corpus()) {
    const Graph g = entry.build();
    EXPECT_TRUE(g.connected()) << entry.name;
    EXPECT_EQ(g.order(), entry.expected.order) << entry.name;
    EXPECT_EQ(g.valency(), entry.expected.valency) << entry.name;
    EXPECT_EQ(ComputeGirthData(g).girth, entry.expected.girth) << entry.name;
    int diameter = 0;
    for (int a = 0; a < g.order(); ++a) {
      diameter = std::max(diameter, BfsLevels(g, a).eccentricity());
    }
    EXPECT_EQ(diameter, entry.expected.diameter) << entry.name;
  }
}

}  // namespace
}  // namespace sdt
