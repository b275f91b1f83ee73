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

#include "sdt/group.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "sdt/error.hpp"

namespace sdt {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> hit(n, 0);
  for (int p = 0; p < n; ++p) {
    const int q = images_[p];
    if (q < 0 || q >= n || hit[q]) {
      Fail(ErrorCode::kInvariant,
           "image sequence is not a bijection on 0.." + std::to_string(n - 1) +
               " (point " + std::to_string(p) + " -> " + std::to_string(q) +
               ")");
    }
    hit[q] = 1;
  }
}

Permutation Permutation::Identity(int degree) {
  Permutation p;
  p.images_.resize(degree);
  for (int i = 0; i < degree; ++i) p.images_[i] = i;
  return p;
}

bool Permutation::IsIdentity() const { return FirstMovedPoint() < 0; }

int Permutation::FirstMovedPoint() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return i;
  }
  return -1;
}

Permutation Permutation::Inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) inv.images_[images_[i]] = i;
  return inv;
}

std::string Permutation::ToCycleString() const {
  std::ostringstream os;
  std::vector<char> done(degree(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    os << '(';
    int p = start;
    bool first = true;
    do {
      os << (first ? "" : " ") << p;
      first = false;
      done[p] = 1;
      p = images_[p];
    } while (p != start);
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) {
    Fail(ErrorCode::kArgument, "degree mismatch in permutation product");
  }
  Permutation out;
  out.images_.resize(lhs.images_.size());
  for (int i = 0; i < lhs.degree(); ++i) out.images_[i] = rhs[lhs[i]];
  return out;
}

GeneratedGroup GeneratedGroup::SchreierSims(int degree,
                                            std::vector<Permutation> generators,
                                            std::span<const int> base_prefix) {
  if (degree < 0) Fail(ErrorCode::kArgument, "negative degree");
  for (size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].degree() != degree) {
      Fail(ErrorCode::kArgument,
           "generator " + std::to_string(i) + " has degree " +
               std::to_string(generators[i].degree()) + ", expected " +
               std::to_string(degree));
    }
  }
  GeneratedGroup g;
  g.degree_ = degree;
  g.generators_ = generators.empty()
                      ? std::vector<Permutation>{Permutation::Identity(degree)}
                      : std::move(generators);
  std::vector<char> used(degree, 0);
  for (int b : base_prefix) {
    if (b < 0 || b >= degree || used[b]) {
      Fail(ErrorCode::kArgument, "invalid base point " + std::to_string(b));
    }
    used[b] = 1;
    g.base_.push_back(b);
  }
  g.Run();
  return g;
}

void GeneratedGroup::RebuildOrbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.slot[level.base_point] = 0;
  level.transversal.assign(1, Permutation::Identity(degree_));
  for (size_t idx = 0; idx < level.orbit.size(); ++idx) {
    const int p = level.orbit[idx];
    for (int gid : level.generator_ids) {
      const Permutation& s = strong_[gid];
      const int q = s[p];
      if (level.slot[q] < 0) {
        level.slot[q] = static_cast<int>(level.transversal.size());
        level.transversal.push_back(level.transversal[level.slot[p]] * s);
        level.orbit.push_back(q);
      }
    }
  }
}

std::pair<Permutation, int> GeneratedGroup::Sift(Permutation h,
                                                 int first_level) const {
  const int depth = static_cast<int>(levels_.size());
  for (int l = first_level; l < depth; ++l) {
    const Level& level = levels_[l];
    const int beta = h[level.base_point];
    if (level.slot[beta] < 0) return {std::move(h), l};
    h = h * level.transversal[level.slot[beta]].Inverse();
  }
  return {std::move(h), depth};
}

void GeneratedGroup::Run() {
  for (const Permutation& s : generators_) {
    if (s.IsIdentity()) continue;
    if (std::find(strong_.begin(), strong_.end(), s) != strong_.end()) continue;
    strong_.push_back(s);
    const bool fixes_base = std::all_of(
        base_.begin(), base_.end(), [&](int b) { return s[b] == b; });
    if (fixes_base) base_.push_back(s.FirstMovedPoint());
  }
  for (size_t i = 0; i < base_.size(); ++i) {
    Level level;
    level.base_point = base_[i];
    for (size_t gid = 0; gid < strong_.size(); ++gid) {
      bool fixes = true;
      for (size_t j = 0; j < i && fixes; ++j) {
        fixes = strong_[gid][base_[j]] == base_[j];
      }
      if (fixes) level.generator_ids.push_back(static_cast<int>(gid));
    }
    RebuildOrbit(level);
    levels_.push_back(std::move(level));
  }

  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const Level& level = levels_[i];
    // `level` may dangle once levels_ grows; the loops exit right after.
    for (size_t idx = 0; !extended && idx < level.orbit.size(); ++idx) {
      const int p = level.orbit[idx];
      const Permutation& up = level.transversal[level.slot[p]];
      for (size_t gi = 0; gi < level.generator_ids.size(); ++gi) {
        const Permutation& s = strong_[level.generator_ids[gi]];
        const int q = s[p];
        Permutation schreier =
            up * s * level.transversal[level.slot[q]].Inverse();
        if (schreier.IsIdentity()) continue;
        auto [residue, stop] = Sift(std::move(schreier), i + 1);
        const int depth = static_cast<int>(levels_.size());
        if (stop == depth && residue.IsIdentity()) continue;
        if (stop == depth) {
          const int point = residue.FirstMovedPoint();
          base_.push_back(point);
          Level fresh;
          fresh.base_point = point;
          levels_.push_back(std::move(fresh));
        }
        strong_.push_back(std::move(residue));
        const int id = static_cast<int>(strong_.size()) - 1;
        for (int l = i + 1; l <= stop; ++l) {
          levels_[l].generator_ids.push_back(id);
          RebuildOrbit(levels_[l]);
        }
        i = stop;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const Level& level : levels_) order_ *= level.orbit.size();
}

std::vector<int> GeneratedGroup::FundamentalOrbitLengths() const {
  std::vector<int> out;
  for (const Level& level : levels_) {
    out.push_back(static_cast<int>(level.orbit.size()));
  }
  return out;
}

std::vector<Permutation> GeneratedGroup::StrongGenerators(int level) const {
  std::vector<Permutation> out;
  for (const Permutation& s : strong_) {
    bool fixes = true;
    for (int j = 0; j < level && j < static_cast<int>(base_.size()) && fixes;
         ++j) {
      fixes = s[base_[j]] == base_[j];
    }
    if (fixes) out.push_back(s);
  }
  return out;
}

bool GeneratedGroup::Contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stop] = Sift(p, 0);
  return stop == static_cast<int>(levels_.size()) && residue.IsIdentity();
}

GeneratedGroup GeneratedGroup::PointStabilizer(int point) const {
  if (point < 0 || point >= degree_) {
    Fail(ErrorCode::kArgument, "point " + std::to_string(point) +
                                   " out of range for degree " +
                                   std::to_string(degree_));
  }
  const int prefix[] = {point};
  const GeneratedGroup rebased = SchreierSims(degree_, generators_, prefix);
  return SchreierSims(degree_, rebased.StrongGenerators(1));
}

void RequireInvariant(std::span<const Permutation> generators,
                      std::span<const int> domain) {
  if (generators.empty()) return;
  const int n = generators.front().degree();
  std::vector<char> member(n, 0);
  for (int p : domain) {
    if (p < 0 || p >= n) {
      Fail(ErrorCode::kArgument, "point " + std::to_string(p) +
                                     " out of range for degree " +
                                     std::to_string(n));
    }
    member[p] = 1;
  }
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    for (int p : domain) {
      const int q = generators[gi][p];
      if (!member[q]) {
        Fail(ErrorCode::kInvariance,
             "generator " + std::to_string(gi) + " (" +
                 generators[gi].ToCycleString() + ") maps point " +
                 std::to_string(p) + " to " + std::to_string(q) +
                 " outside the domain");
      }
    }
  }
}

OrbitPartition Orbits(std::span<const Permutation> generators,
                      std::span<const int> domain) {
  RequireInvariant(generators, domain);
  OrbitPartition out;
  out.domain.assign(domain.begin(), domain.end());
  std::sort(out.domain.begin(), out.domain.end());
  out.domain.erase(std::unique(out.domain.begin(), out.domain.end()),
                   out.domain.end());
  if (out.domain.empty()) return out;
  const int n = generators.empty() ? out.domain.back() + 1
                                   : generators.front().degree();
  std::vector<char> seen(n, 0);
  for (int start : out.domain) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = 1;
    for (size_t idx = 0; idx < orbit.size(); ++idx) {
      for (const Permutation& g : generators) {
        const int q = g[orbit[idx]];
        if (!seen[q]) {
          seen[q] = 1;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

OrbitPartition Orbits(const GeneratedGroup& group,
                      std::span<const int> domain) {
  return Orbits(group.generators(), domain);
}

namespace {

constexpr std::uint64_t kSubsetCap = std::uint64_t{1} << 20;

// C(n, r), saturating at cap + 1.
std::uint64_t BoundedBinomial(int n, int r, std::uint64_t cap) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<std::uint64_t>(n - r + i) / i;
    if (acc > cap) return cap + 1;
  }
  return acc;
}

}  // namespace

bool IsTHomogeneous(std::span<const Permutation> generators,
                    std::span<const int> domain, int t) {
  std::vector<int> points(domain.begin(), domain.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const int m = static_cast<int>(points.size());
  if (t < 1 || t > m) {
    Fail(ErrorCode::kArgument, "t = " + std::to_string(t) +
                                   " outside 1.." + std::to_string(m));
  }
  RequireInvariant(generators, points);
  const std::uint64_t total = BoundedBinomial(m, t, kSubsetCap);
  if (total > kSubsetCap) {
    Fail(ErrorCode::kScale, "C(" + std::to_string(m) + "," +
                                std::to_string(t) + ") exceeds 2^20 subsets");
  }
  if (total == 1) return true;

  // Colex ranking of index subsets.
  std::vector<std::vector<std::uint64_t>> binom(
      m + 1, std::vector<std::uint64_t>(t + 2, 0));
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; b <= t + 1; ++b) binom[a][b] = BoundedBinomial(a, b, kSubsetCap);
  }
  const int n = std::max(points.back() + 1,
                         generators.empty() ? 0 : generators.front().degree());
  std::vector<int> index_of(n, -1);
  for (int i = 0; i < m; ++i) index_of[points[i]] = i;

  auto rank = [&](const std::vector<int>& subset) {
    std::uint64_t r = 0;
    for (int i = 0; i < t; ++i) r += binom[subset[i]][i + 1];
    return r;
  };

  std::vector<char> seen(total, 0);
  std::vector<std::vector<int>> queue;
  std::vector<int> first(t);
  for (int i = 0; i < t; ++i) first[i] = i;
  seen[rank(first)] = 1;
  queue.push_back(first);
  std::uint64_t reached = 1;
  for (size_t idx = 0; idx < queue.size(); ++idx) {
    for (const Permutation& g : generators) {
      std::vector<int> image(t);
      for (int i = 0; i < t; ++i) image[i] = index_of[g[points[queue[idx][i]]]];
      std::sort(image.begin(), image.end());
      const std::uint64_t r = rank(image);
      if (!seen[r]) {
        seen[r] = 1;
        ++reached;
        queue.push_back(std::move(image));
      }
    }
  }
  return reached == total;
}

bool IsTHomogeneous(const GeneratedGroup& group, std::span<const int> domain,
                    int t) {
  return IsTHomogeneous(group.generators(), domain, t);
}

int MaxHomogeneity(std::span<const Permutation> generators,
                   std::span<const int> domain) {
  const int m = static_cast<int>(domain.size());
  int t = 0;
  while (t < m && BoundedBinomial(m, t + 1, kSubsetCap) <= kSubsetCap &&
         IsTHomogeneous(generators, domain, t + 1)) {
    ++t;
  }
  return t;
}

}  // namespace sdt
