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


// Named graphs with the facts a correct analysis must re-derive.

#ifndef SDT_CORPUS_HPP_
#define SDT_CORPUS_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sdt/graph.hpp"

namespace sdt {

Graph CompleteGraph(int n);
Graph CompleteBipartiteGraph(int a, int b);
Graph CycleGraph(int n);
Graph GeneralizedPetersenGraph(int n, int k);
// Hamiltonian cycle 0..n-1 plus chords i ~ i + shifts[i mod |shifts|].
Graph LcfGraph(int n, const std::vector<int>& shifts);
Graph HypercubeGraph(int dimension);
// Vertices are the (k-1)-subsets of a (2k-1)-set, adjacent when disjoint.
Graph OddGraph(int k);
// Point-line incidence graph of the projective plane over GF(q), q prime.
Graph ProjectivePlaneIncidenceGraph(int q);

struct NamedSubgroup {
  std::string name;
  std::string generators;  // cycle notation, one per line
  std::string order;       // expected order, decimal
};

struct ExpectedFacts {
  int order = 0;
  int valency = 0;
  int girth = 0;
  int diameter = 0;
  std::string intersection_array;  // empty when not distance-regular
  std::string automorphism_order;
};

struct NamedGraphEntry {
  std::string name;
  std::string description;
  std::function<Graph()> build;
  ExpectedFacts expected;
  std::vector<NamedSubgroup> subgroups;
};

const std::vector<NamedGraphEntry>& Corpus();
// kNotFound for unknown names.
const NamedGraphEntry& FindCorpusEntry(std::string_view name);

}  // namespace sdt

#endif  // SDT_CORPUS_HPP_
