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

#include <random>
#include <set>

#include "sdt/error.hpp"
#include "sdt/harness.hpp"
#include "sdt/perm_text.hpp"
#include "support.hpp"

namespace sdt {
namespace {

using testing::AutGroup;
using testing::Corpus;

GeneratedGroup K33Subgroup() {
  return GeneratedGroup::SchreierSims(
      6, ParseGenerators(FindCorpusEntry("K33").subgroups.at(0).generators, 6));
}

std::vector<Permutation> Elements(const GeneratedGroup& G) {
  std::set<Permutation> seen{Permutation::Identity(G.degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : G.generators()) {
      Permutation next = queue[i] * g;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return queue;
}

std::vector<std::vector<int>> Arcs(const Graph& g, int s) {
  std::vector<std::vector<int>> arcs;
  for (int v = 0; v < g.order(); ++v) arcs.push_back({v});
  for (int step = 0; step < s; ++step) {
    std::vector<std::vector<int>> next;
    for (const auto& arc : arcs) {
      for (int w : g.neighbors(arc.back())) {
        if (arc.size() >= 2 && w == arc[arc.size() - 2]) continue;
        auto longer = arc;
        longer.push_back(w);
        next.push_back(std::move(longer));
      }
    }
    arcs = std::move(next);
  }
  return arcs;
}

// Largest s <= limit with the group transitive on s-arcs, by enumeration.
int ArcTransitivityOracle(const Graph& g, const std::vector<Permutation>& elements,
                          int limit) {
  int best = -1;
  for (int s = 0; s <= limit; ++s) {
    const auto arcs = Arcs(g, s);
    std::set<std::vector<int>> orbit;
    for (const auto& p : elements) {
      std::vector<int> image;
      for (int v : arcs.front()) image.push_back(p[v]);
      orbit.insert(image);
    }
    if (orbit.size() != arcs.size()) break;
    best = s;
  }
  return best;
}

TEST(TransitivityTest, Examples) {
  const TransitivityReport p = ClassifyTransitivity(Corpus("Petersen"),
                                                    AutGroup(Corpus("Petersen")));
  EXPECT_TRUE(p.vertex_transitive);
  EXPECT_EQ(p.diameter, 2);
  EXPECT_EQ(p.max_distance_transitivity, 2);
  EXPECT_TRUE(p.fully_distance_transitive);
  EXPECT_EQ(p.max_arc_transitivity, 3);
  EXPECT_EQ(p.group_order, "120");

  const TransitivityReport k = ClassifyTransitivity(Corpus("K33"), K33Subgroup());
  EXPECT_EQ(k.max_distance_transitivity, 1);
  EXPECT_EQ(k.diameter, 2);
  EXPECT_FALSE(k.fully_distance_transitive);

  const TransitivityReport full =
      ClassifyTransitivity(Corpus("K33"), AutGroup(Corpus("K33")));
  EXPECT_TRUE(full.fully_distance_transitive);
  EXPECT_EQ(full.group_order, "72");
}

TEST(TransitivityTest, NotVertexTransitive) {
  const Graph path = testing::PathGraph(3);
  const TransitivityReport r = ClassifyTransitivity(path, AutGroup(path));
  EXPECT_FALSE(r.vertex_transitive);
  EXPECT_EQ(r.max_distance_transitivity, -1);
  EXPECT_EQ(r.max_arc_transitivity, -1);
}

TEST(TransitivityTest, RejectsNonAutomorphism) {
  const Graph k33 = Corpus("K33");
  const GeneratedGroup bogus =
      GeneratedGroup::SchreierSims(6, {Permutation({3, 1, 2, 0, 4, 5})});
  try {
    ClassifyTransitivity(k33, bogus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArgument);
    EXPECT_NE(std::string(e.what()).find("breaks edge"), std::string::npos);
  }
}

TEST(TransitivityTest, CyclesHitTheArcCap) {
  const Graph c6 = Corpus("C6");
  const TransitivityReport r = ClassifyTransitivity(c6, AutGroup(c6));
  EXPECT_TRUE(r.arc_transitivity_capped);
  EXPECT_EQ(r.max_arc_transitivity, 6);
}

// Arc levels agree with enumeration, and s-arc-transitivity implies
// min(s, d)-distance-transitivity, for Aut and random subgroups.
TEST(TransitivityTest, ArcLevelsAgreeWithEnumeration) {
  std::mt19937 rng(99);
  int checked = 0;
  for (const auto& entry : sdt::Corpus()) {
    const Graph g = entry.build();
    const GeneratedGroup aut = AutGroup(g);
    if (aut.order() > 1500) continue;
    const auto elements = Elements(aut);
    std::vector<GeneratedGroup> groups{aut};
    for (int trial = 0; trial < 4; ++trial) {
      groups.push_back(GeneratedGroup::SchreierSims(
          g.order(), {elements[rng() % elements.size()],
                      elements[rng() % elements.size()]}));
    }
    for (const auto& G : groups) {
      const TransitivityReport r = ClassifyTransitivity(g, G);
      if (!r.vertex_transitive) {
        EXPECT_EQ(r.max_arc_transitivity, -1);
        continue;
      }
      ++checked;
      const int limit = std::min(r.max_arc_transitivity + 1, 6);
      const int oracle = ArcTransitivityOracle(g, Elements(G), limit);
      if (!r.arc_transitivity_capped) {
        EXPECT_EQ(r.max_arc_transitivity, oracle) << entry.name;
      } else {
        EXPECT_EQ(oracle, limit) << entry.name;
      }
      EXPECT_GE(r.max_distance_transitivity,
                std::min(r.max_arc_transitivity, r.diameter))
          << entry.name;
      EXPECT_LE(r.max_distance_transitivity, r.diameter);
    }
  }
  EXPECT_GT(checked, 15);
}

TEST(VerifyMainTheoremTest, Examples) {
  const Graph heawood = Corpus("Heawood");
  const TheoremVerdict h = VerifyMainTheorem(heawood, AutGroup(heawood), "Heawood");
  EXPECT_EQ(h.clause, TheoremClause::kCubic);
  EXPECT_TRUE(h.hypothesis_holds);
  EXPECT_TRUE(h.distance_regular);
  EXPECT_EQ(h.verdict, Verdict::kConsistent);

  const TheoremVerdict k =
      VerifyMainTheorem(Corpus("K33"), K33Subgroup(), "K33", "C3wrC2");
  EXPECT_EQ(k.clause, TheoremClause::kCubic);
  EXPECT_TRUE(k.hypothesis_holds);
  EXPECT_EQ(k.transitivity.max_distance_transitivity, 1);
  EXPECT_FALSE(k.transitivity.fully_distance_transitive);
  EXPECT_EQ(k.girth_clause, "vacuous");
  EXPECT_EQ(k.verdict, Verdict::kConsistent);
  EXPECT_EQ(k.intersection_array, "{3,2;1,3}");
  bool uniqueness_note = false;
  for (const auto& note : k.notes) {
    uniqueness_note |= note.find("unverified") != std::string::npos;
  }
  EXPECT_TRUE(uniqueness_note);

  const Graph tc = Corpus("TutteCoxeter");
  const TheoremVerdict t = VerifyMainTheorem(tc, AutGroup(tc));
  EXPECT_EQ(t.transitivity.max_distance_transitivity, 4);
  EXPECT_EQ(t.verdict, Verdict::kConsistent);

  const Graph c6 = Corpus("C6");
  EXPECT_EQ(VerifyMainTheorem(c6, AutGroup(c6)).verdict, Verdict::kNotApplicable);
  const Graph k44 = Corpus("K44");
  EXPECT_EQ(VerifyMainTheorem(k44, AutGroup(k44)).verdict, Verdict::kNotApplicable);
}

TEST(VerifyMainTheoremTest, CorpusIsConsistent) {
  for (const auto& entry : sdt::Corpus()) {
    const Graph g = entry.build();
    const TheoremVerdict v = VerifyMainTheorem(g, AutGroup(g), entry.name);
    EXPECT_NE(v.verdict, Verdict::kViolation) << entry.name;
    if (v.clause == TheoremClause::kCubic && v.hypothesis_holds) {
      EXPECT_TRUE(v.distance_regular) << entry.name;
    }
    if (v.verdict == Verdict::kConsistent) EXPECT_TRUE(v.witnesses.empty());
  }
}

TEST(OrdersTest, Tables) {
  const int diameters[] = {3, 4, 5, 8};
  std::vector<long long> cases;
  for (int d : diameters) cases.push_back(CaseOrder(d));
  EXPECT_EQ(cases, (std::vector<long long>{32, 98, 296, 8018}));
  std::vector<long long> grid;
  for (int c = 1; c <= 4; ++c) {
    for (int d : diameters) grid.push_back(TetravalentOrder(c, d));
  }
  EXPECT_EQ(grid, (std::vector<long long>{53, 161, 485, 13121,   //
                                          35, 107, 323, 8747,    //
                                          29, 89, 269, 7289,     //
                                          26, 80, 242, 6560}));
  EXPECT_EQ(PrimeFactors(8018), (std::vector<long long>{2, 19, 211}));
  EXPECT_THROW(TetravalentOrder(5, 3), Error);
  EXPECT_THROW(TetravalentOrder(0, 3), Error);
}

TEST(OrdersTest, MatchesLevelCounting) {
  // 1 + 4 + 4*3 + ... + 4*3^(d-2) + (3/c_d) * 4*3^(d-2).
  for (int c = 1; c <= 4; ++c) {
    for (int d = 3; d <= 9; ++d) {
      long long total = 1;
      long long level = 4;
      for (int i = 1; i <= d - 1; ++i) {
        total += level;
        if (i < d - 1) level *= 3;
      }
      total += 3 * level / c;
      EXPECT_EQ(TetravalentOrder(c, d), total) << c << " " << d;
    }
  }
}

}  // namespace
}  // namespace sdt
