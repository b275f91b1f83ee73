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

#include "sdt/orbit_design.hpp"

#include <algorithm>

#include "sdt/aut_search.hpp"
#include "sdt/error.hpp"

namespace sdt {

namespace {

int CountInto(const Graph& g, int v, const std::vector<char>& member) {
  int count = 0;
  for (int w : g.neighbors(v)) count += member[w];
  return count;
}

std::vector<char> Membership(int n, std::span<const int> set) {
  std::vector<char> member(n, 0);
  for (int v : set) member[v] = 1;
  return member;
}

}  // namespace

int Kappa(const Graph& g, std::span<const Permutation> generators,
          std::span<const int> delta, std::span<const int> omega) {
  if (delta.empty()) Fail(ErrorCode::kArgument, "kappa: empty source set");
  for (int v : delta) g.RequireVertex(v);
  for (int v : omega) g.RequireVertex(v);

  const std::vector<char> in_omega = Membership(g.order(), omega);
  int first_count = CountInto(g, delta.front(), in_omega);
  std::string mismatch;
  for (int v : delta) {
    const int count = CountInto(g, v, in_omega);
    if (count != first_count) {
      mismatch = "; counts differ: vertex " + std::to_string(delta.front()) +
                 " has " + std::to_string(first_count) + ", vertex " +
                 std::to_string(v) + " has " + std::to_string(count);
      break;
    }
  }

  try {
    RequireInvariant(generators, omega);
  } catch (const Error& e) {
    Fail(ErrorCode::kPrecondition,
         std::string("kappa: target set is not fixed setwise: ") + e.what() +
             mismatch);
  }
  OrbitPartition part;
  try {
    part = Orbits(generators, delta);
  } catch (const Error& e) {
    Fail(ErrorCode::kPrecondition,
         std::string("kappa: group is not transitive on the source set: ") +
             e.what() + mismatch);
  }
  if (part.orbits.size() != 1) {
    Fail(ErrorCode::kPrecondition,
         "kappa: group has " + std::to_string(part.orbits.size()) +
             " orbits on the source set (representatives " +
             std::to_string(part.orbits[0].front()) + " and " +
             std::to_string(part.orbits[1].front()) + ")" + mismatch);
  }
  if (!mismatch.empty()) {
    // Transitivity plus automorphisms forces equal counts; reaching this
    // means a generator is not an automorphism.
    Fail(ErrorCode::kPrecondition, "kappa: count is not constant" + mismatch);
  }
  return first_count;
}

SphereOrbitProfile ComputeSphereOrbitProfile(const Graph& g,
                                             const GeneratedGroup& group,
                                             int alpha, int s) {
  g.RequireConnected();
  g.RequireVertex(alpha);
  if (group.degree() != g.order()) {
    Fail(ErrorCode::kArgument, "group degree does not match graph order");
  }
  for (size_t i = 0; i < group.generators().size(); ++i) {
    if (auto broken = BrokenEdge(g, group.generators()[i])) {
      Fail(ErrorCode::kArgument,
           "generator " + std::to_string(i) + " is not an automorphism: edge {" +
               std::to_string(broken->first) + "," +
               std::to_string(broken->second) + "} is not preserved");
    }
  }
  const DistanceData bfs = BfsLevels(g, alpha);
  if (s < 1) Fail(ErrorCode::kArgument, "radius s must be at least 1");
  if (s + 1 > bfs.eccentricity()) {
    Fail(ErrorCode::kPrecondition,
         "s + 1 = " + std::to_string(s + 1) + " exceeds eccentricity " +
             std::to_string(bfs.eccentricity()) + " of vertex " +
             std::to_string(alpha));
  }

  const GeneratedGroup stabilizer = group.PointStabilizer(alpha);
  const auto& gens = stabilizer.generators();
  for (int i = 1; i <= s; ++i) {
    const OrbitPartition part = Orbits(gens, bfs.levels[i]);
    if (part.orbits.size() != 1) {
      Fail(ErrorCode::kPrecondition,
           "stabilizer of " + std::to_string(alpha) +
               " is not transitive on level " + std::to_string(i) +
               " (orbit representatives " +
               std::to_string(part.orbits[0].front()) + " and " +
               std::to_string(part.orbits[1].front()) + ")");
    }
  }

  SphereOrbitProfile p;
  p.alpha = alpha;
  p.s = s;
  p.valency = g.degree(alpha);
  p.neighbors = bfs.levels[1];
  p.sphere = bfs.levels[s];
  p.stabilizer_generators = gens;
  p.stabilizer_order = stabilizer.order().str();
  {
    const std::vector<char> next = Membership(g.order(), bfs.levels[s + 1]);
    p.sphere_b = CountInto(g, p.sphere.front(), next);
  }
  p.orbits = Orbits(gens, bfs.levels[s + 1]).orbits;
  const size_t count = p.orbits.size();
  p.cross.assign(count, std::vector<int>(count, 0));
  for (size_t i = 0; i < count; ++i) {
    p.orbit_sizes.push_back(static_cast<int>(p.orbits[i].size()));
    p.b_prime.push_back(Kappa(g, gens, p.sphere, p.orbits[i]));
    p.c_prime.push_back(Kappa(g, gens, p.orbits[i], p.sphere));
    for (size_t j = 0; j < count; ++j) {
      p.cross[i][j] = Kappa(g, gens, p.orbits[i], p.orbits[j]);
    }
  }

  int sum_b = 0;
  for (int b : p.b_prime) sum_b += b;
  if (sum_b != p.sphere_b) {
    Fail(ErrorCode::kTheoremViolation,
         "sum of b' over orbits is " + std::to_string(sum_b) + ", b_s is " +
             std::to_string(p.sphere_b));
  }
  const long long sphere_size = static_cast<long long>(p.sphere.size());
  for (size_t i = 0; i < count; ++i) {
    if (static_cast<long long>(p.orbit_sizes[i]) * p.c_prime[i] !=
        sphere_size * p.b_prime[i]) {
      Fail(ErrorCode::kTheoremViolation,
           "edge count between sphere and orbit " + std::to_string(i) +
               " does not balance");
    }
    for (size_t j = 0; j < count; ++j) {
      if (static_cast<long long>(p.orbit_sizes[i]) * p.cross[i][j] !=
          static_cast<long long>(p.orbit_sizes[j]) * p.cross[j][i]) {
        Fail(ErrorCode::kTheoremViolation,
             "edge count between orbits " + std::to_string(i) + " and " +
                 std::to_string(j) + " does not balance");
      }
    }
  }
  return p;
}

LocalIncidence BuildLocalIncidence(const Graph& g,
                                   const SphereOrbitProfile& profile,
                                   size_t orbit_index) {
  if (orbit_index >= profile.orbits.size()) {
    Fail(ErrorCode::kArgument,
         "orbit index " + std::to_string(orbit_index) + " out of range (" +
             std::to_string(profile.orbits.size()) + " orbits)");
  }
  const int k = static_cast<int>(profile.neighbors.size());
  const int s = profile.s;
  LocalIncidence inc;
  inc.k = k;
  inc.s = s;
  inc.delta = profile.orbits[orbit_index];
  inc.branches.resize(k);
  inc.labels.resize(inc.delta.size());

  const std::vector<char> in_sphere = Membership(g.order(), profile.sphere);
  for (int j = 0; j < k; ++j) {
    const DistanceData from_beta = BfsLevels(g, profile.neighbors[j]);
    for (int gamma : profile.sphere) {
      if (from_beta.distance[gamma] == s - 1) inc.branches[j].push_back(gamma);
    }
    for (size_t i = 0; i < inc.delta.size(); ++i) {
      if (from_beta.distance[inc.delta[i]] == s) inc.labels[i].push_back(j + 1);
    }
  }
  for (int x : inc.delta) {
    for (int gamma : g.neighbors(x)) {
      if (in_sphere[gamma]) inc.cross_edges.emplace_back(gamma, x);
    }
  }
  std::sort(inc.cross_edges.begin(), inc.cross_edges.end());
  return inc;
}

std::vector<std::vector<Permutation>> NeighborStabilizerActions(
    const Graph& g, const SphereOrbitProfile& profile) {
  const GeneratedGroup stabilizer =
      GeneratedGroup::SchreierSims(g.order(), profile.stabilizer_generators);
  const int k = static_cast<int>(profile.neighbors.size());
  std::vector<int> label_of(g.order(), -1);
  for (int j = 0; j < k; ++j) label_of[profile.neighbors[j]] = j;

  std::vector<std::vector<Permutation>> out(k);
  for (int j = 0; j < k; ++j) {
    const GeneratedGroup fixer = stabilizer.PointStabilizer(profile.neighbors[j]);
    for (const Permutation& gen : fixer.generators()) {
      std::vector<int> images(k);
      for (int h = 0; h < k; ++h) {
        images[h] = label_of[gen[profile.neighbors[h]]];
      }
      out[j].emplace_back(std::move(images));
    }
  }
  return out;
}

}  // namespace sdt
