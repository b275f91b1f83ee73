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

#include "sdt/aut_search.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "sdt/error.hpp"

namespace sdt {

std::optional<Edge> BrokenEdge(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) {
    Fail(ErrorCode::kArgument, "permutation degree " +
                                   std::to_string(p.degree()) +
                                   " does not match graph order " +
                                   std::to_string(g.order()));
  }
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p[u], p[v])) return Edge{u, v};
  }
  return std::nullopt;
}

namespace {

// Re-rank vertices by key; keys compare lexicographically.
template <typename Key>
int RankBy(const std::vector<Key>& keys, std::vector<int>& colors) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return keys[x] < keys[y]; });
  int next = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++next;
    colors[order[i]] = next;
  }
  return next + 1;
}

int CountColors(const std::vector<int>& colors) {
  return colors.empty() ? 0
                        : *std::max_element(colors.begin(), colors.end()) + 1;
}

std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Label-independent summary of an equitable colouring: cell sizes plus a
// hash of the coloured edge multiset.
struct NodeInvariant {
  std::vector<int> cell_sizes;
  std::uint64_t edge_hash = 0;
  bool operator==(const NodeInvariant&) const = default;
};

NodeInvariant Summarize(const Graph& g, const std::vector<int>& colors) {
  NodeInvariant inv;
  inv.cell_sizes.assign(CountColors(colors), 0);
  for (int c : colors) ++inv.cell_sizes[c];
  for (const auto& [u, v] : g.edges()) {
    const auto lo = static_cast<std::uint64_t>(std::min(colors[u], colors[v]));
    const auto hi = static_cast<std::uint64_t>(std::max(colors[u], colors[v]));
    inv.edge_hash += Mix(lo * 0x100000001b3ULL + hi);
  }
  return inv;
}

std::vector<int> Individualize(const Graph& g, const std::vector<int>& colors,
                               int v) {
  std::vector<std::pair<int, int>> keys(colors.size());
  for (size_t u = 0; u < colors.size(); ++u) {
    keys[u] = {colors[u], static_cast<int>(u) == v ? 0 : 1};
  }
  std::vector<int> out(colors.size());
  RankBy(keys, out);
  return RefineColoring(g, std::move(out));
}

// Smallest colour whose cell has at least two vertices, or -1.
int TargetCell(const std::vector<int>& colors) {
  std::vector<int> sizes(CountColors(colors), 0);
  for (int c : colors) ++sizes[c];
  for (size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] > 1) return static_cast<int>(c);
  }
  return -1;
}

std::vector<int> CellMembers(const std::vector<int>& colors, int cell) {
  std::vector<int> out;
  for (size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] == cell) out.push_back(static_cast<int>(v));
  }
  return out;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  AutomorphismSearchResult Run() {
    const int n = g_.order();
    AutomorphismSearchResult result;
    if (n == 0) return result;

    // First path: always individualize the smallest vertex of the target.
    std::vector<int> colors = RefineColoring(g_, std::vector<int>(n, 0));
    ++stats_.nodes_visited;
    while (true) {
      path_colors_.push_back(colors);
      path_invariants_.push_back(Summarize(g_, colors));
      const int cell = TargetCell(colors);
      if (cell < 0) break;
      const int v = CellMembers(colors, cell).front();
      path_choices_.push_back(v);
      colors = Individualize(g_, colors, v);
      ++stats_.nodes_visited;
    }
    leaf_ = colors;

    // Bottom-up: generators found at deeper levels fix the path prefix, so
    // their orbits prune the sibling candidates at shallower levels.
    const int depth = static_cast<int>(path_choices_.size());
    for (int level = depth - 1; level >= 0; --level) {
      const std::vector<int>& node = path_colors_[level];
      const int chosen = path_choices_[level];
      std::vector<int> tried{chosen};
      for (int w : CellMembers(node, TargetCell(node))) {
        if (w == chosen) continue;
        if (SharesOrbit(w, tried)) continue;
        tried.push_back(w);
        std::vector<int> child = Individualize(g_, node, w);
        ++stats_.nodes_visited;
        if (!(Summarize(g_, child) == path_invariants_[level + 1])) {
          ++stats_.pruned_by_refinement;
          continue;
        }
        if (auto found = Descend(child, level + 1)) {
          generators_.push_back(std::move(*found));
          ++stats_.generators_found;
        }
      }
    }
    result.generators = generators_;
    result.stats = stats_;
    return result;
  }

 private:
  bool SharesOrbit(int w, const std::vector<int>& tried) const {
    const OrbitPartition orbits = Orbits(generators_, AllPoints());
    for (const auto& orbit : orbits.orbits) {
      if (!std::binary_search(orbit.begin(), orbit.end(), w)) continue;
      for (int t : tried) {
        if (std::binary_search(orbit.begin(), orbit.end(), t)) return true;
      }
      return false;
    }
    return false;
  }

  std::vector<int> AllPoints() const {
    std::vector<int> all(g_.order());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  std::optional<Permutation> Descend(const std::vector<int>& colors,
                                     int level) {
    const int cell = TargetCell(colors);
    if (cell < 0) {
      // Map the first-path leaf onto this leaf cell by cell.
      std::vector<int> by_color(colors.size());
      for (size_t v = 0; v < colors.size(); ++v) by_color[colors[v]] = v;
      std::vector<int> images(colors.size());
      for (size_t v = 0; v < colors.size(); ++v) {
        images[v] = by_color[leaf_[v]];
      }
      Permutation p(std::move(images));
      if (IsAutomorphism(g_, p)) return p;
      return std::nullopt;
    }
    for (int u : CellMembers(colors, cell)) {
      std::vector<int> child = Individualize(g_, colors, u);
      ++stats_.nodes_visited;
      if (level + 1 >= static_cast<int>(path_invariants_.size()) ||
          !(Summarize(g_, child) == path_invariants_[level + 1])) {
        ++stats_.pruned_by_refinement;
        continue;
      }
      if (auto found = Descend(child, level + 1)) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::vector<std::vector<int>> path_colors_;
  std::vector<NodeInvariant> path_invariants_;
  std::vector<int> path_choices_;
  std::vector<int> leaf_;
  std::vector<Permutation> generators_;
  SearchStats stats_;
};

}  // namespace

std::vector<int> RefineColoring(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  if (static_cast<int>(colors.size()) != n) {
    Fail(ErrorCode::kArgument, "colouring size does not match graph order");
  }
  {
    // Normalise to 0..c-1 preserving order.
    std::vector<int> keys = colors;
    RankBy(keys, colors);
  }
  int count = CountColors(colors);
  while (true) {
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.reserve(g.degree(v) + 1);
      key.push_back(colors[v]);
      for (int w : g.neighbors(v)) key.push_back(colors[w]);
      std::sort(key.begin() + 1, key.end());
    }
    const int next = RankBy(keys, colors);
    if (next == count) break;
    count = next;
  }
  return colors;
}

AutomorphismSearchResult AutomorphismGenerators(const Graph& g) {
  return Search(g).Run();
}

std::vector<Permutation> BruteForceAutomorphisms(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    Fail(ErrorCode::kScale, "brute-force automorphism search is capped at " +
                                std::to_string(kBruteForceMaxOrder) +
                                " vertices, got " + std::to_string(n));
  }
  std::vector<Permutation> out;
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.emplace_back(image);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || g.degree(y) != g.degree(x)) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        ok = g.adjacent(x, z) == g.adjacent(y, image[z]);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      self(self, x + 1);
      used[y] = 0;
    }
    image[x] = -1;
  };
  extend(extend, 0);
  return out;
}

}  // namespace sdt
