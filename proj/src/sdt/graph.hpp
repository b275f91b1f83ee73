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

// Simple undirected graphs on dense vertex ids and the distance-based
// measurements built on them: BFS levels, girth (global, per-vertex and
// local), per-vertex intersection numbers and the distance-regularity test.

#ifndef SDT_GRAPH_HPP_
#define SDT_GRAPH_HPP_

#include <compare>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sdt {

using Edge = std::pair<int, int>;

// Immutable simple graph. Neighbor lists are sorted; vertex ids are 0..n-1.
// Construction rejects loops, repeated edges and out-of-range ids. A
// disconnected graph can be represented, but every analysis entry point calls
// RequireConnected() first.
class Graph {
 public:
  Graph() = default;

  static Graph FromEdges(int n, std::span<const Edge> edges,
                         std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(offsets_.size()) - 1; }
  int size() const { return static_cast<int>(targets_.size()) / 2; }

  std::span<const int> neighbors(int v) const {
    return {targets_.data() + offsets_[v],
            static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(int u, int v) const;

  // Common valency, or nullopt for a non-regular graph.
  std::optional<int> valency() const { return valency_; }
  bool connected() const { return connected_; }

  // Input labels retained from parsing, indexed by dense id. Empty when the
  // input ids were already dense.
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<Edge> edges() const;

  void RequireVertex(int v) const;
  void RequireConnected() const;
  int RequireRegular() const;

 private:
  std::vector<int> offsets_{0};
  std::vector<int> targets_;
  std::vector<std::string> labels_;
  std::optional<int> valency_;
  bool connected_ = true;
};

// Γ_0(α), Γ_1(α), ... together with the distance of every vertex from α.
struct DistanceData {
  int source = 0;
  std::vector<std::vector<int>> levels;
  std::vector<int> distance;

  int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
};

DistanceData BfsLevels(const Graph& g, int source);

// Sentinel for "no cycle" (forests and vertices on no cycle).
inline constexpr int kNoCycle = std::numeric_limits<int>::max();

struct GirthData {
  int girth = kNoCycle;
  std::vector<int> alpha_girth;  // shortest cycle through each vertex
  std::vector<int> local_girth;  // min{λ_α, λ_β + 1 : β ~ α}

  bool operator==(const GirthData&) const = default;
};

int AlphaGirth(const Graph& g, int alpha);
GirthData ComputeGirthData(const Graph& g);

struct Triple {
  int c = 0;
  int a = 0;
  int b = 0;
  auto operator<=>(const Triple&) const = default;
};

// A vertex together with its counted triple relative to a base vertex.
struct CountWitness {
  int base = 0;
  int level = 0;
  int vertex = 0;
  Triple counts;
  bool operator==(const CountWitness&) const = default;
};

struct CountMismatch {
  CountWitness first;
  CountWitness second;
  bool operator==(const CountMismatch&) const = default;
};

struct LevelCounts {
  int level = 0;
  int size = 0;
  std::optional<Triple> counts;          // set when constant on the level
  std::optional<CountMismatch> witness;  // set otherwise
  bool operator==(const LevelCounts&) const = default;
};

struct LocalIntersectionNumbers {
  int base = 0;
  int valency = 0;
  int alpha_girth = kNoCycle;
  // Largest s < ε(α) with λ_w ≥ 2(s - d(α,w)) + 2 for every w at distance
  // below s. Levels 1..tree_depth are checked to be (1, 0, k-1).
  int tree_depth = 0;
  // Largest s < ε(α) with λ_α ≥ 2s+2. Equals tree_depth on vertex-transitive
  // graphs; elsewhere a short cycle avoiding α can break the levels.
  int alpha_girth_depth = 0;
  std::vector<LevelCounts> levels;  // levels[i-1] describes Γ_i(α)
  bool operator==(const LocalIntersectionNumbers&) const = default;
};

// Counts (c, a, b) for every vertex of every level around `alpha`. Throws
// kRegularity on a non-regular graph and kTheoremViolation if levels
// 1..tree_depth do not carry (1, 0, k-1).
LocalIntersectionNumbers ComputeLocalIntersectionNumbers(const Graph& g,
                                                         int alpha);

struct IntersectionArray {
  std::vector<int> b;  // b_0 .. b_{d-1}
  std::vector<int> c;  // c_1 .. c_d

  int valency() const { return b.empty() ? 0 : b.front(); }
  int diameter() const { return static_cast<int>(c.size()); }
  // a_0 .. a_d.
  std::vector<int> a() const;
  // "{3,2;1,1}"
  std::string ToString() const;
  bool operator==(const IntersectionArray&) const = default;
};

struct DistanceRegularity {
  std::optional<IntersectionArray> array;
  std::optional<CountMismatch> witness;

  bool regular() const { return array.has_value(); }
  bool operator==(const DistanceRegularity&) const = default;
};

// Intersection array when every level of every base vertex has constant
// counts that agree across bases; otherwise a witness pair. A non-regular
// graph yields a level-0 witness (two vertices of different degree).
DistanceRegularity DistanceRegular(const Graph& g);

struct InducedDegreeProfile {
  std::vector<int> degrees;  // ascending
  int degree_two_count = 0;
  bool operator==(const InducedDegreeProfile&) const = default;
};

InducedDegreeProfile InducedDegrees(const Graph& g, std::span<const int> subset);

}  // namespace sdt

#endif  // SDT_GRAPH_HPP_
