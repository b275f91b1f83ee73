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


#include "sdt/design.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "sdt/combinatorics.hpp"
#include "sdt/error.hpp"

namespace sdt {

namespace {

bool Includes(const Block& outer, const std::vector<int>& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::string Join(const std::vector<int>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

long long IntPow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Checks that the count of blocks through each j-subset is constant.
std::optional<int> ConstantCount(int k, int j, const std::vector<Block>& family) {
  std::optional<int> common;
  bool constant = true;
  ForEachCombination(k, j, 1, [&](const std::vector<int>& subset) {
    int count = 0;
    for (const Block& b : family) count += Includes(b, subset);
    if (!common) common = count;
    constant = *common == count;
    return constant;
  });
  if (!constant) return std::nullopt;
  return common;
}

}  // namespace

long long DeltaTFormula(int b_prime, int c_prime, int k, int s, int t) {
  if (t < 1 || c_prime < t || k < c_prime || b_prime < 1 || s < 1) {
    Fail(ErrorCode::kArgument,
         "delta formula needs 1 <= t <= c' <= k, b' >= 1, s >= 1; got t=" +
             std::to_string(t) + " c'=" + std::to_string(c_prime) +
             " k=" + std::to_string(k) + " b'=" + std::to_string(b_prime) +
             " s=" + std::to_string(s));
  }
  const long long numerator = b_prime * IntPow(k - 1, s - 1) *
                              Binomial(c_prime - 1, t - 1);
  const long long denominator = Binomial(k - 1, t - 1);
  if (numerator % denominator != 0) {
    Fail(ErrorCode::kApplicability,
         std::to_string(numerator) + "/" + std::to_string(denominator) +
             " is not an integer");
  }
  return numerator / denominator;
}

std::map<Block, std::vector<int>> BlockClasses(const LocalIncidence& incidence,
                                               int size) {
  std::map<Block, std::vector<int>> classes;
  ForEachCombination(incidence.k, size, 1, [&](const std::vector<int>& subset) {
    std::vector<int> members;
    for (size_t i = 0; i < incidence.labels.size(); ++i) {
      if (Includes(incidence.labels[i], subset)) {
        members.push_back(static_cast<int>(i));
      }
    }
    if (!members.empty()) classes.emplace(subset, std::move(members));
    return true;
  });
  return classes;
}

BlockDesign AnalyzeDesign(const LocalIncidence& incidence, int b_prime,
                          int c_prime, int t) {
  const int k = incidence.k;
  if (c_prime < 1 || c_prime > k || t < 1 || t > c_prime) {
    Fail(ErrorCode::kArgument, "design needs 1 <= t <= c' <= k");
  }
  BlockDesign d;
  d.points = k;
  d.block_size = c_prime;
  d.strength = t;
  d.b_prime = b_prime;
  d.s = incidence.s;
  d.orbit_size = static_cast<int>(incidence.delta.size());
  auto report = [&](std::string clause, std::string detail) {
    d.violations.push_back({std::move(clause), std::move(detail)});
  };

  const auto classes = BlockClasses(incidence, c_prime);
  for (const auto& [block, members] : classes) d.blocks.push_back(block);

  // Each x must lie in exactly one Δ(S).
  std::vector<int> hits(incidence.delta.size(), 0);
  for (const auto& [block, members] : classes) {
    for (int i : members) ++hits[i];
  }
  for (size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] > 1) {
      report("disjoint", "vertex " + std::to_string(incidence.delta[i]) +
                             " lies in " + std::to_string(hits[i]) +
                             " block classes");
    } else if (hits[i] == 0) {
      report("cover", "vertex " + std::to_string(incidence.delta[i]) +
                          " lies in no block class; S(x) = " +
                          Join(incidence.labels[i]));
    }
  }

  std::set<size_t> class_sizes;
  for (const auto& [block, members] : classes) class_sizes.insert(members.size());
  if (class_sizes.size() == 1) {
    d.block_class_size = static_cast<int>(*class_sizes.begin());
  } else {
    report("e-constant", std::to_string(class_sizes.size()) +
                             " distinct block class sizes");
  }
  const long long e = d.block_class_size;
  const long long delta_size = d.orbit_size;
  if (e != 0 && static_cast<long long>(d.blocks.size()) * e != delta_size) {
    report("partition-count", "|B| e = " + std::to_string(d.blocks.size() * e) +
                                  " but |Δ| = " + std::to_string(delta_size));
  }
  const long long expected_orbit =
      static_cast<long long>(b_prime) * k * IntPow(k - 1, incidence.s - 1);
  if (delta_size * c_prime != expected_orbit) {
    report("orbit-size", "|Δ| c' = " + std::to_string(delta_size * c_prime) +
                             " but b' k (k-1)^(s-1) = " +
                             std::to_string(expected_orbit));
  }

  for (int j = 1; j <= t; ++j) {
    std::optional<int> lambda;
    std::optional<int> delta_j;
    bool lambda_constant = true;
    bool delta_constant = true;
    ForEachCombination(k, j, 1, [&](const std::vector<int>& subset) {
      int through = 0;
      for (const Block& b : d.blocks) through += Includes(b, subset);
      int covered = 0;
      for (const auto& label : incidence.labels) covered += Includes(label, subset);
      if (!lambda) lambda = through;
      if (!delta_j) delta_j = covered;
      if (*lambda != through && lambda_constant) {
        lambda_constant = false;
        report("lambda-constant",
               "j=" + std::to_string(j) + ": subset " + Join(subset) +
                   " lies in " + std::to_string(through) + " blocks, expected " +
                   std::to_string(*lambda));
      }
      if (*delta_j != covered && delta_constant) {
        delta_constant = false;
        report("delta-constant", "j=" + std::to_string(j) + ": subset " +
                                     Join(subset) + " covers " +
                                     std::to_string(covered) + " vertices");
      }
      return true;
    });
    d.lambda.push_back(lambda_constant ? *lambda : 0);
    d.delta.push_back(delta_constant ? *delta_j : 0);
    if (!lambda_constant || !delta_constant) continue;
    if (e != 0 && *lambda * e != *delta_j) {
      report("lambda-e", "j=" + std::to_string(j) + ": λ e = " +
                             std::to_string(*lambda * e) + ", δ = " +
                             std::to_string(*delta_j));
    }
    try {
      const long long formula = DeltaTFormula(b_prime, c_prime, k, incidence.s, j);
      if (formula != *delta_j) {
        report("delta-formula", "j=" + std::to_string(j) + ": measured " +
                                    std::to_string(*delta_j) + ", formula " +
                                    std::to_string(formula));
      }
    } catch (const Error& err) {
      report("delta-formula", "j=" + std::to_string(j) + ": " + err.what());
    }
  }

  if (t == c_prime) {
    if (d.lambda.back() != 1) {
      report("full-strength-lambda",
             "t = c' but λ_t = " + std::to_string(d.lambda.back()));
    }
    if (static_cast<long long>(d.blocks.size()) != Binomial(k, c_prime)) {
      report("full-strength-blocks",
             "t = c' but only " + std::to_string(d.blocks.size()) + " of " +
                 std::to_string(Binomial(k, c_prime)) + " subsets are blocks");
    }
  }

  // S(x) must agree with the branches x actually touches, once each.
  std::unordered_map<int, int> branch_of;
  for (int j = 0; j < k; ++j) {
    for (int gamma : incidence.branches[j]) branch_of[gamma] = j + 1;
  }
  std::unordered_map<int, std::vector<int>> touched;
  for (const auto& [gamma, x] : incidence.cross_edges) {
    auto it = branch_of.find(gamma);
    if (it != branch_of.end()) touched[x].push_back(it->second);
  }
  for (size_t i = 0; i < incidence.delta.size(); ++i) {
    std::vector<int> seen = touched[incidence.delta[i]];
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      report("branch-multiplicity", "vertex " + std::to_string(incidence.delta[i]) +
                                        " has two neighbours in one branch");
    }
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (seen != incidence.labels[i]) {
      report("label-consistency", "vertex " + std::to_string(incidence.delta[i]) +
                                      ": S(x) = " + Join(incidence.labels[i]) +
                                      ", branches touched " + Join(seen));
    }
  }
  return d;
}

void RequireDesignHypothesis(const Graph& g, const SphereOrbitProfile& profile) {
  const std::optional<int> k = g.valency();
  if (!k || *k < 3) {
    Fail(ErrorCode::kHypothesis, "valency: graph must be regular of valency >= 3");
  }
  int local = AlphaGirth(g, profile.alpha);
  for (int beta : profile.neighbors) {
    const int through = AlphaGirth(g, beta);
    if (through != kNoCycle) local = std::min(local, through + 1);
  }
  if (local != kNoCycle && local < 2 * profile.s + 2) {
    Fail(ErrorCode::kHypothesis,
         "local-girth: local girth " + std::to_string(local) + " at vertex " +
             std::to_string(profile.alpha) + " is below 2s+2 = " +
             std::to_string(2 * profile.s + 2));
  }
}

BlockDesign ExtractDesign(const Graph& g, const SphereOrbitProfile& profile,
                          size_t orbit_index, std::optional<int> t) {
  if (orbit_index >= profile.orbits.size()) {
    Fail(ErrorCode::kArgument, "orbit index " + std::to_string(orbit_index) +
                                   " out of range");
  }
  RequireDesignHypothesis(g, profile);
  const int c_prime = profile.c_prime[orbit_index];
  const auto& gens = profile.stabilizer_generators;
  int strength = 0;
  if (t) {
    if (*t < 1) Fail(ErrorCode::kArgument, "t must be at least 1");
    strength = std::min(*t, c_prime);
    if (!IsTHomogeneous(gens, profile.neighbors, strength)) {
      Fail(ErrorCode::kHypothesis,
           "homogeneity: local action is not " + std::to_string(strength) +
               "-homogeneous");
    }
  } else {
    for (int j = c_prime; j >= 1; --j) {
      if (IsTHomogeneous(gens, profile.neighbors, j)) {
        strength = j;
        break;
      }
    }
    if (strength == 0) {
      Fail(ErrorCode::kHypothesis, "homogeneity: local action is not transitive");
    }
  }
  const LocalIncidence incidence = BuildLocalIncidence(g, profile, orbit_index);
  BlockDesign d = AnalyzeDesign(incidence, profile.b_prime[orbit_index], c_prime,
                                strength);
  d.point_labels = profile.neighbors;
  return d;
}

std::vector<SmallDesignClass> EnumerateSmallOneDesigns(int k, int block_size) {
  if (k != 3 && k != 4) {
    Fail(ErrorCode::kScope, "small design catalogue covers 3 or 4 points, got " +
                                std::to_string(k));
  }
  if (block_size < 1 || block_size > k) {
    Fail(ErrorCode::kArgument, "block size must lie in 1.." + std::to_string(k));
  }
  std::vector<Block> subsets;
  ForEachCombination(k, block_size, 1, [&](const std::vector<int>& s) {
    subsets.push_back(s);
    return true;
  });
  std::vector<int> relabel(k);
  std::iota(relabel.begin(), relabel.end(), 1);
  std::vector<std::vector<int>> relabelings;
  do relabelings.push_back(relabel);
  while (std::next_permutation(relabel.begin(), relabel.end()));

  std::map<std::vector<Block>, SmallDesignClass> classes;
  const int count = static_cast<int>(subsets.size());
  for (int mask = 1; mask < (1 << count); ++mask) {
    std::vector<Block> family;
    for (int i = 0; i < count; ++i) {
      if (mask >> i & 1) family.push_back(subsets[i]);
    }
    const std::optional<int> lambda1 = ConstantCount(k, 1, family);
    if (!lambda1) continue;
    std::set<std::vector<Block>> images;
    for (const auto& perm : relabelings) {
      std::vector<Block> image;
      for (const Block& b : family) {
        Block mapped;
        for (int p : b) mapped.push_back(perm[p - 1]);
        std::sort(mapped.begin(), mapped.end());
        image.push_back(mapped);
      }
      std::sort(image.begin(), image.end());
      images.insert(image);
    }
    const std::vector<Block> canonical = *images.begin();
    if (classes.count(canonical)) continue;
    SmallDesignClass c;
    c.points = k;
    c.block_size = block_size;
    c.lambda1 = *lambda1;
    c.block_count = static_cast<int>(family.size());
    c.labelings.assign(images.begin(), images.end());
    for (int j = 1; j <= block_size; ++j) {
      const std::optional<int> lambda = ConstantCount(k, j, family);
      if (!lambda) break;
      c.strength = j;
      c.strength_lambda = *lambda;
    }
    classes.emplace(canonical, std::move(c));
  }
  std::vector<SmallDesignClass> out;
  for (auto& [key, c] : classes) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(),
                   [](const SmallDesignClass& a, const SmallDesignClass& b) {
                     return a.lambda1 < b.lambda1;
                   });
  return out;
}

std::string DesignParameters(int t, int k, int block_size, int lambda) {
  return std::to_string(t) + "-(" + std::to_string(k) + "," +
         std::to_string(block_size) + "," + std::to_string(lambda) + ")";
}

std::optional<size_t> MatchSmallDesign(const std::vector<SmallDesignClass>& classes,
                                       const std::vector<Block>& blocks) {
  for (size_t i = 0; i < classes.size(); ++i) {
    const auto& labelings = classes[i].labelings;
    if (std::binary_search(labelings.begin(), labelings.end(), blocks)) return i;
  }
  return std::nullopt;
}

}  // namespace sdt
