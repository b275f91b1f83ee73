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

#include "sdt/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "sdt/error.hpp"

namespace sdt {

Graph Graph::FromEdges(int n, std::span<const Edge> edges,
                       std::vector<std::string> labels) {
  if (n < 0) Fail(ErrorCode::kArgument, "negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    Fail(ErrorCode::kArgument, "label count does not match vertex count");
  }
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      Fail(ErrorCode::kArgument, "edge {" + std::to_string(u) + "," +
                                     std::to_string(v) + "} out of range");
    }
    if (u == v) Fail(ErrorCode::kInvariant, "loop at " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.offsets_.assign(1, 0);
  g.offsets_.reserve(n + 1);
  for (int v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      Fail(ErrorCode::kInvariant,
           "repeated edge at vertex " + std::to_string(v));
    }
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(static_cast<int>(g.targets_.size()));
  }
  g.labels_ = std::move(labels);

  if (n > 0) {
    const int k = g.degree(0);
    bool regular = true;
    for (int v = 1; v < n && regular; ++v) regular = g.degree(v) == k;
    if (regular) g.valency_ = k;

    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    g.connected_ = reached == n;
  }
  return g;
}

bool Graph::adjacent(int u, int v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::RequireVertex(int v) const {
  if (v < 0 || v >= order()) {
    Fail(ErrorCode::kArgument, "vertex " + std::to_string(v) +
                                   " out of range for order " +
                                   std::to_string(order()));
  }
}

void Graph::RequireConnected() const {
  if (!connected_) Fail(ErrorCode::kConnectivity, "graph is disconnected");
}

int Graph::RequireRegular() const {
  if (!valency_) Fail(ErrorCode::kRegularity, "graph is not regular");
  return *valency_;
}

DistanceData BfsLevels(const Graph& g, int source) {
  g.RequireVertex(source);
  g.RequireConnected();
  DistanceData out;
  out.source = source;
  out.distance.assign(g.order(), -1);
  out.distance[source] = 0;
  out.levels.push_back({source});
  while (true) {
    std::vector<int> next;
    for (int v : out.levels.back()) {
      for (int w : g.neighbors(v)) {
        if (out.distance[w] < 0) {
          out.distance[w] = out.distance[v] + 1;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.levels.push_back(std::move(next));
  }
  return out;
}

int AlphaGirth(const Graph& g, int alpha) {
  g.RequireVertex(alpha);
  // BFS tree rooted at alpha; each vertex remembers which child of alpha its
  // tree path starts with. A non-tree edge joining two different branches
  // closes a cycle through alpha of length d(u) + d(v) + 1, and the shortest
  // such edge gives the shortest cycle through alpha.
  const int n = g.order();
  std::vector<int> dist(n, -1), parent(n, -1), branch(n, -1);
  std::deque<int> queue{alpha};
  dist[alpha] = 0;
  int best = kNoCycle;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        branch[w] = v == alpha ? w : branch[v];
        queue.push_back(w);
      } else if (w != parent[v] && v != parent[w] && branch[v] != branch[w] &&
                 v != alpha && w != alpha) {
        best = std::min(best, dist[v] + dist[w] + 1);
      }
    }
  }
  return best;
}

GirthData ComputeGirthData(const Graph& g) {
  GirthData out;
  const int n = g.order();
  out.alpha_girth.resize(n);
  for (int v = 0; v < n; ++v) {
    out.alpha_girth[v] = AlphaGirth(g, v);
    out.girth = std::min(out.girth, out.alpha_girth[v]);
  }
  out.local_girth.resize(n);
  for (int v = 0; v < n; ++v) {
    int local = out.alpha_girth[v];
    for (int w : g.neighbors(v)) {
      if (out.alpha_girth[w] != kNoCycle) {
        local = std::min(local, out.alpha_girth[w] + 1);
      }
    }
    out.local_girth[v] = local;
  }
  return out;
}

namespace {

Triple CountAround(const Graph& g, const std::vector<int>& distance, int v) {
  Triple t;
  const int level = distance[v];
  for (int w : g.neighbors(v)) {
    const int dw = distance[w];
    if (dw == level - 1) {
      ++t.c;
    } else if (dw == level) {
      ++t.a;
    } else {
      ++t.b;
    }
  }
  return t;
}

std::vector<LevelCounts> CountLevels(const Graph& g, const DistanceData& bfs) {
  std::vector<LevelCounts> out;
  for (int i = 1; i <= bfs.eccentricity(); ++i) {
    const auto& level = bfs.levels[i];
    LevelCounts lc;
    lc.level = i;
    lc.size = static_cast<int>(level.size());
    const Triple first = CountAround(g, bfs.distance, level.front());
    lc.counts = first;
    for (int v : level) {
      const Triple t = CountAround(g, bfs.distance, v);
      if (t != first) {
        lc.counts.reset();
        lc.witness = CountMismatch{{bfs.source, i, level.front(), first},
                                   {bfs.source, i, v, t}};
        break;
      }
    }
    out.push_back(std::move(lc));
  }
  return out;
}

}  // namespace

LocalIntersectionNumbers ComputeLocalIntersectionNumbers(const Graph& g,
                                                         int alpha) {
  g.RequireVertex(alpha);
  g.RequireConnected();
  const int k = g.RequireRegular();
  const DistanceData bfs = BfsLevels(g, alpha);

  LocalIntersectionNumbers out;
  out.base = alpha;
  out.valency = k;
  out.alpha_girth = AlphaGirth(g, alpha);
  out.levels = CountLevels(g, bfs);

  const int ecc = bfs.eccentricity();
  int literal = 0;
  while (literal + 1 < ecc &&
         (out.alpha_girth == kNoCycle ||
          out.alpha_girth >= 2 * (literal + 1) + 2)) {
    ++literal;
  }
  out.alpha_girth_depth = literal;

  // A short cycle through any vertex w of the ball spoils the levels beyond
  // w, so s needs λ_w ≥ 2(s - d(α,w)) + 2 for every w with d(α,w) < s.
  std::vector<int> girth_at(g.order(), -1);
  auto girth_of = [&](int w) {
    if (girth_at[w] < 0) girth_at[w] = AlphaGirth(g, w);
    return girth_at[w];
  };
  auto ball_ok = [&](int s) {
    for (int j = 0; j < s; ++j) {
      for (int w : bfs.levels[j]) {
        const int lw = girth_of(w);
        if (lw != kNoCycle && lw < 2 * (s - j) + 2) return false;
      }
    }
    return true;
  };
  int depth = 0;
  while (depth + 1 < ecc && ball_ok(depth + 1)) ++depth;
  out.tree_depth = depth;

  long long expected_size = k;
  for (int i = 1; i <= depth; ++i) {
    const LevelCounts& lc = out.levels[i - 1];
    if (!lc.counts || *lc.counts != Triple{1, 0, k - 1} ||
        lc.size != expected_size) {
      Fail(ErrorCode::kTheoremViolation,
           "level " + std::to_string(i) + " around vertex " +
               std::to_string(alpha) +
               " is not tree-like inside a ball of large vertex girths");
    }
    expected_size *= k - 1;
  }
  return out;
}

std::vector<int> IntersectionArray::a() const {
  const int k = valency();
  const int d = diameter();
  std::vector<int> out(d + 1, 0);
  for (int h = 1; h <= d; ++h) {
    const int bh = h < d ? b[h] : 0;
    out[h] = k - c[h - 1] - bh;
  }
  return out;
}

std::string IntersectionArray::ToString() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ';';
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

DistanceRegularity DistanceRegular(const Graph& g) {
  g.RequireConnected();
  DistanceRegularity out;
  const int n = g.order();
  if (n == 0) Fail(ErrorCode::kArgument, "empty graph");
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != g.degree(0)) {
      out.witness = CountMismatch{{0, 0, 0, {0, 0, g.degree(0)}},
                                  {v, 0, v, {0, 0, g.degree(v)}}};
      return out;
    }
  }

  const DistanceData ref_bfs = BfsLevels(g, 0);
  const std::vector<LevelCounts> ref = CountLevels(g, ref_bfs);
  for (const LevelCounts& lc : ref) {
    if (lc.witness) {
      out.witness = lc.witness;
      return out;
    }
  }
  for (int alpha = 1; alpha < n; ++alpha) {
    const DistanceData bfs = BfsLevels(g, alpha);
    for (int i = 1; i <= bfs.eccentricity(); ++i) {
      for (int v : bfs.levels[i]) {
        const Triple t = CountAround(g, bfs.distance, v);
        // Matching counts on every earlier level force ε(α) = ε(0), so
        // level i always exists in the reference.
        const LevelCounts& r = ref[i - 1];
        if (t != *r.counts) {
          out.witness = CountMismatch{
              {0, i, ref_bfs.levels[i].front(), *r.counts}, {alpha, i, v, t}};
          return out;
        }
      }
    }
  }

  IntersectionArray arr;
  arr.b.push_back(g.degree(0));
  for (const LevelCounts& lc : ref) {
    arr.c.push_back(lc.counts->c);
    if (lc.counts->b > 0) arr.b.push_back(lc.counts->b);
  }
  out.array = std::move(arr);
  return out;
}

InducedDegreeProfile InducedDegrees(const Graph& g,
                                    std::span<const int> subset) {
  std::vector<char> member(g.order(), 0);
  for (int v : subset) {
    g.RequireVertex(v);
    if (member[v]) {
      Fail(ErrorCode::kArgument, "vertex " + std::to_string(v) +
                                     " listed twice in subset");
    }
    member[v] = 1;
  }
  InducedDegreeProfile out;
  for (int v : subset) {
    int deg = 0;
    for (int w : g.neighbors(v)) deg += member[w];
    out.degrees.push_back(deg);
    if (deg == 2) ++out.degree_two_count;
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

}  // namespace sdt
