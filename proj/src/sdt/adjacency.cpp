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


#include "sdt/adjacency.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "sdt/combinatorics.hpp"
#include "sdt/error.hpp"

namespace sdt {

const char* StructureTagName(StructureTag tag) {
  switch (tag) {
    case StructureTag::kMatching: return "matching";
    case StructureTag::kStarUnion: return "star-union";
    case StructureTag::kUniform: return "uniform";
    case StructureTag::kIrregular: return "irregular";
  }
  return "unknown";
}

namespace {

std::string Join(const std::vector<int>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

std::vector<int> Sorted(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Empty when `parts` are pairwise disjoint and cover exactly `whole`.
std::string PartitionProblem(const std::vector<std::vector<int>>& parts,
                             const std::vector<int>& whole) {
  std::vector<int> all;
  for (const auto& p : parts) {
    if (p.empty()) return "empty part";
    all.insert(all.end(), p.begin(), p.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    return "parts overlap";
  }
  if (all != Sorted(whole)) return "parts do not cover the whole";
  return {};
}

class Classifier {
 public:
  Classifier(const LocalIncidence& inc, int b_prime, int c_prime,
             const std::vector<std::vector<Permutation>>* actions)
      : inc_(inc), b_prime_(b_prime), c_prime_(c_prime), actions_(actions) {}

  AdjacencyRelationClass Run() {
    Index();
    Partitions();
    if (out_.partition.empty()) return std::move(out_);
    const auto& p = out_.partition;
    const bool uniform = std::all_of(p.begin(), p.end(),
                                     [&](int x) { return x == p.front(); });
    if (b_prime_ == 1) {
      out_.tag = StructureTag::kMatching;
    } else if (p.size() == 1) {
      out_.tag = StructureTag::kStarUnion;
    } else if (uniform) {
      out_.tag = StructureTag::kUniform;
    }
    if (p.size() == 1) StarUnionClauses();
    if (uniform) {
      out_.m = static_cast<int>(p.size());
      out_.b = p.front();
      for (int j = 0; j < inc_.k; ++j) UniformClauses(j);
    }
    return std::move(out_);
  }

 private:
  void Report(const std::string& clause, const std::string& detail) {
    out_.violations.push_back({clause, detail});
  }
  void Checked(const std::string& clause) {
    if (std::find(out_.checks.begin(), out_.checks.end(), clause) ==
        out_.checks.end()) {
      out_.checks.push_back(clause);
    }
  }

  void Index() {
    const auto classes = BlockClasses(inc_, c_prime_);
    for (const auto& [block, members] : classes) {
      blocks_.push_back(block);
      block_members_.push_back(members);
    }
    class_of_.assign(inc_.delta.size(), -1);
    for (size_t c = 0; c < block_members_.size(); ++c) {
      for (int x : block_members_[c]) {
        if (class_of_[x] < 0) class_of_[x] = static_cast<int>(c);
      }
    }
    std::unordered_map<int, int> position;
    for (size_t i = 0; i < inc_.delta.size(); ++i) {
      position[inc_.delta[i]] = static_cast<int>(i);
    }
    for (const auto& [gamma, x] : inc_.cross_edges) {
      auto it = position.find(x);
      if (it == position.end()) continue;
      into_delta_[gamma].push_back(it->second);
      touching_[it->second].push_back(gamma);
    }
    for (auto& [gamma, xs] : into_delta_) xs = Sorted(xs);
    for (auto& [x, gammas] : touching_) gammas = Sorted(gammas);
  }

  std::vector<int> BlocksThrough(int j) const {
    std::vector<int> out;
    for (size_t c = 0; c < blocks_.size(); ++c) {
      if (std::binary_search(blocks_[c].begin(), blocks_[c].end(), j + 1)) {
        out.push_back(static_cast<int>(c));
      }
    }
    return out;
  }

  std::vector<int> DeltaJ(int j) const {
    std::vector<int> out;
    for (size_t i = 0; i < inc_.labels.size(); ++i) {
      const auto& l = inc_.labels[i];
      if (std::binary_search(l.begin(), l.end(), j + 1)) {
        out.push_back(static_cast<int>(i));
      }
    }
    return out;
  }

  const std::vector<int>& Into(int gamma) const {
    static const std::vector<int> kEmpty;
    auto it = into_delta_.find(gamma);
    return it == into_delta_.end() ? kEmpty : it->second;
  }

  // Γ_1(γ) ∩ Δ grouped by block class.
  std::map<int, std::vector<int>> Parts(int gamma) const {
    std::map<int, std::vector<int>> parts;
    for (int x : Into(gamma)) parts[class_of_[x]].push_back(x);
    return parts;
  }

  // B_j(S) for block index c.
  std::vector<int> BranchOfBlock(int j, int c) const {
    std::vector<int> out;
    for (int gamma : inc_.branches[j]) {
      for (int x : Into(gamma)) {
        if (class_of_[x] == c) {
          out.push_back(gamma);
          break;
        }
      }
    }
    return Sorted(out);
  }

  void Partitions() {
    Checked("partition-invariance");
    Checked("partition-sum");
    Checked("f-constant");
    std::optional<std::vector<int>> reference;
    int reference_gamma = -1;
    std::optional<int> f_common;
    for (int j = 0; j < inc_.k; ++j) {
      for (int gamma : inc_.branches[j]) {
        std::vector<int> sizes;
        for (const auto& [c, xs] : Parts(gamma)) {
          sizes.push_back(static_cast<int>(xs.size()));
        }
        std::sort(sizes.rbegin(), sizes.rend());
        if (!reference) {
          reference = sizes;
          reference_gamma = gamma;
        } else if (sizes != *reference) {
          Report("partition-invariance",
                 "vertex " + std::to_string(reference_gamma) + " gives " +
                     Join(*reference) + ", vertex " + std::to_string(gamma) +
                     " gives " + Join(sizes));
        }
        int sum = 0;
        for (int x : sizes) sum += x;
        if (sum != b_prime_) {
          Report("partition-sum", "vertex " + std::to_string(gamma) +
                                      " has parts summing to " +
                                      std::to_string(sum));
        }
      }
      for (int c : BlocksThrough(j)) {
        const int f = static_cast<int>(BranchOfBlock(j, c).size());
        if (!f_common) f_common = f;
        if (f != *f_common) {
          Report("f-constant", "branch " + std::to_string(j + 1) + " block " +
                                   Join(blocks_[c]) + " has f = " +
                                   std::to_string(f));
        }
      }
    }
    if (!reference) return;
    out_.partition = *reference;
    out_.f_j = f_common.value_or(0);
    if (!inc_.branches.empty() && !inc_.branches[0].empty()) {
      out_.canonical_gamma =
          *std::min_element(inc_.branches[0].begin(), inc_.branches[0].end());
      for (const auto& [c, xs] : Parts(out_.canonical_gamma)) {
        out_.canonical_blocks.push_back(blocks_[c]);
        std::vector<int> vertices;
        for (int x : xs) vertices.push_back(inc_.delta[x]);
        out_.canonical_parts.push_back(vertices);
      }
    }
  }

  // Every center has `degree` neighbours among the leaves and every leaf
  // exactly one among the centers.
  void Stars(const std::string& clause, const std::vector<int>& centers,
             const std::vector<int>& leaves, int degree, const std::string& where) {
    Checked(clause);
    const std::set<int> leaf_set(leaves.begin(), leaves.end());
    const std::set<int> center_set(centers.begin(), centers.end());
    for (int gamma : centers) {
      int count = 0;
      for (int x : Into(gamma)) count += leaf_set.count(x);
      if (count != degree) {
        Report(clause, where + ": vertex " + std::to_string(gamma) + " has " +
                           std::to_string(count) + " leaves, expected " +
                           std::to_string(degree));
        return;
      }
    }
    for (int x : leaves) {
      int count = 0;
      for (int gamma : touching_[x]) count += center_set.count(gamma);
      if (count != 1) {
        Report(clause, where + ": vertex " + std::to_string(inc_.delta[x]) +
                           " has " + std::to_string(count) + " centers");
        return;
      }
    }
  }

  void Partition(const std::string& clause,
                 const std::vector<std::vector<int>>& parts,
                 const std::vector<int>& whole, const std::string& where) {
    Checked(clause);
    const std::string problem = PartitionProblem(parts, whole);
    if (!problem.empty()) Report(clause, where + ": " + problem);
  }

  void StarUnionClauses() {
    for (int j = 0; j < inc_.k; ++j) {
      const std::string where = "branch " + std::to_string(j + 1);
      const std::vector<int> delta_j = DeltaJ(j);
      Stars("branch-stars", inc_.branches[j], delta_j, b_prime_, where);
      std::vector<std::vector<int>> branch_parts;
      std::vector<std::vector<int>> delta_parts;
      for (int c : BlocksThrough(j)) {
        const std::vector<int> bjs = BranchOfBlock(j, c);
        Stars("block-stars", bjs, block_members_[c], b_prime_,
              where + " block " + Join(blocks_[c]));
        branch_parts.push_back(bjs);
        delta_parts.push_back(block_members_[c]);
      }
      Partition("branch-partition", branch_parts, inc_.branches[j], where);
      Partition("delta-partition", delta_parts, delta_j, where);
    }
  }

  void UniformClauses(int j) {
    const std::string where = "branch " + std::to_string(j + 1);
    const int m = out_.m;
    const int b = out_.b;
    const std::vector<int> through = BlocksThrough(j);
    const std::vector<int> delta_j = DeltaJ(j);
    std::map<int, std::vector<int>> branch_of_block;
    for (int c : through) branch_of_block[c] = BranchOfBlock(j, c);

    // B_m(c', j) = {B_j^γ}, with B_j(S_1..S_m) the γ realising each m-set.
    std::map<std::vector<int>, std::vector<int>> family;
    for (int gamma : inc_.branches[j]) {
      std::vector<int> key;
      for (const auto& [c, xs] : Parts(gamma)) key.push_back(c);
      family[key].push_back(gamma);
    }

    Checked("m-family");
    ForEachCombination(static_cast<int>(through.size()), m, 0,
                       [&](const std::vector<int>& pick) {
      std::vector<int> key;
      for (int i : pick) key.push_back(through[i]);
      std::vector<int> common = branch_of_block[key[0]];
      for (size_t r = 1; r < key.size(); ++r) {
        std::vector<int> next;
        const auto& other = branch_of_block[key[r]];
        std::set_intersection(common.begin(), common.end(), other.begin(),
                              other.end(), std::back_inserter(next));
        common = std::move(next);
      }
      auto it = family.find(key);
      const std::vector<int> expected =
          it == family.end() ? std::vector<int>{} : it->second;
      if (common != expected) {
        Report("m-family", where + ": intersection for m-set " + Join(key) +
                               " disagrees with the γ that realise it");
        return false;
      }
      return true;
    });

    Checked("fm-constant");
    std::optional<int> f_m;
    std::vector<std::vector<int>> branch_parts;
    std::vector<std::vector<int>> delta_parts;
    std::map<int, std::vector<std::vector<int>>> block_branch_parts;
    std::map<int, std::vector<std::vector<int>>> block_delta_parts;
    for (const auto& [key, gammas] : family) {
      if (!f_m) f_m = static_cast<int>(gammas.size());
      if (static_cast<int>(gammas.size()) != *f_m) {
        Report("fm-constant", where + ": m-set " + Join(key) + " has " +
                                  std::to_string(gammas.size()) + " vertices");
      }
      std::vector<int> dj;
      for (int gamma : gammas) {
        for (int x : Into(gamma)) dj.push_back(x);
      }
      dj = Sorted(dj);
      Stars("m-stars", gammas, dj, b_prime_, where + " m-set " + Join(key));
      branch_parts.push_back(gammas);
      delta_parts.push_back(dj);
      for (int c : key) {
        std::vector<int> ds;
        for (int x : dj) {
          if (class_of_[x] == c) ds.push_back(x);
        }
        Stars("m-block-stars", gammas, ds, b,
              where + " m-set " + Join(key) + " block " + Join(blocks_[c]));
        block_branch_parts[c].push_back(gammas);
        block_delta_parts[c].push_back(ds);
      }
    }
    Partition("m-branch-partition", branch_parts, inc_.branches[j], where);
    Partition("m-delta-partition", delta_parts, delta_j, where);

    Checked("m-lambda-constant");
    Checked("m-replication");
    std::optional<int> lambda;
    for (int c : through) {
      const std::string at = where + " block " + Join(blocks_[c]);
      Partition("m-block-partition", block_branch_parts[c], branch_of_block[c], at);
      Partition("m-delta-block-partition", block_delta_parts[c],
                block_members_[c], at);
      const int count = static_cast<int>(block_branch_parts[c].size());
      if (!lambda) lambda = count;
      if (count != *lambda) {
        Report("m-lambda-constant", at + " lies in " + std::to_string(count) +
                                        " m-sets");
      }
      if (f_m && static_cast<int>(branch_of_block[c].size()) != count * *f_m) {
        Report("m-replication", at + ": f_j != λ f_j(m)");
      }
    }

    UniformDesign u;
    u.mu = static_cast<int>(through.size());
    u.m = m;
    u.b = b;
    u.lambda = lambda.value_or(0);
    u.f_j = out_.f_j;
    u.f_j_m = f_m.value_or(0);
    for (int c : through) u.point_blocks.push_back(blocks_[c]);
    for (const auto& [key, gammas] : family) {
      std::vector<int> local;
      for (int c : key) {
        local.push_back(static_cast<int>(
            std::find(through.begin(), through.end(), c) - through.begin()));
      }
      u.blocks_m.push_back(local);
    }
    if (actions_ && j < static_cast<int>(actions_->size())) {
      TauClauses(j, through, family, branch_of_block, u, where);
    }
    if (j == 0) out_.uniform = std::move(u);
  }

  void TauClauses(int j, const std::vector<int>& through,
                  const std::map<std::vector<int>, std::vector<int>>& family,
                  std::map<int, std::vector<int>>& branch_of_block,
                  UniformDesign& u, const std::string& where) {
    Checked("action-invariance");
    const int mu = static_cast<int>(through.size());
    std::vector<Permutation> induced;
    for (const Permutation& p : (*actions_)[j]) {
      std::vector<int> images(mu);
      for (int i = 0; i < mu; ++i) {
        Block image;
        for (int l : blocks_[through[i]]) image.push_back(p[l - 1] + 1);
        std::sort(image.begin(), image.end());
        int found = -1;
        for (int r = 0; r < mu; ++r) {
          if (blocks_[through[r]] == image) found = r;
        }
        if (found < 0) {
          Report("action-invariance", where + ": block " +
                                          Join(blocks_[through[i]]) +
                                          " maps outside the family");
          return;
        }
        images[i] = found;
      }
      induced.emplace_back(std::move(images));
    }
    std::vector<int> domain(mu);
    for (int i = 0; i < mu; ++i) domain[i] = i;
    u.tau = mu == 0 ? 0 : MaxHomogeneity(induced, domain);
    const int m = u.m;
    Checked("action-transitivity");
    if (*u.tau == 0) {
      Report("action-transitivity",
             where + ": stabilizer is not transitive on the blocks through " +
                 std::to_string(j + 1));
      return;
    }
    if (*u.tau >= m) {
      Checked("tau-full");
      if (static_cast<long long>(family.size()) != Binomial(mu, m)) {
        Report("tau-full", where + ": τ >= m but only " +
                               std::to_string(family.size()) + " of " +
                               std::to_string(Binomial(mu, m)) +
                               " m-sets occur");
      }
      return;
    }
    Checked("tau-lambda-constant");
    Checked("tau-replication");
    std::optional<int> lambda_tau;
    std::optional<int> f_tau;
    ForEachCombination(mu, *u.tau, 0, [&](const std::vector<int>& pick) {
      std::vector<int> key;
      for (int i : pick) key.push_back(through[i]);
      int containing = 0;
      std::vector<int> covered;
      for (const auto& [mset, gammas] : family) {
        if (std::includes(mset.begin(), mset.end(), key.begin(), key.end())) {
          ++containing;
          covered.insert(covered.end(), gammas.begin(), gammas.end());
        }
      }
      covered = Sorted(covered);
      std::vector<int> common = branch_of_block[key[0]];
      for (size_t r = 1; r < key.size(); ++r) {
        std::vector<int> next;
        const auto& other = branch_of_block[key[r]];
        std::set_intersection(common.begin(), common.end(), other.begin(),
                              other.end(), std::back_inserter(next));
        common = std::move(next);
      }
      if (!lambda_tau) lambda_tau = containing;
      if (containing != *lambda_tau) {
        Report("tau-lambda-constant", where + ": τ-set " + Join(key) +
                                          " lies in " +
                                          std::to_string(containing) + " m-sets");
        return false;
      }
      if (common != covered ||
          static_cast<int>(common.size()) != containing * u.f_j_m) {
        Report("tau-replication", where + ": τ-set " + Join(key) +
                                      ": f_j(τ) != λ_τ f_j(m)");
        return false;
      }
      f_tau = static_cast<int>(common.size());
      return true;
    });
    u.lambda_tau = lambda_tau;
    u.f_j_tau = f_tau;
  }

  const LocalIncidence& inc_;
  int b_prime_;
  int c_prime_;
  const std::vector<std::vector<Permutation>>* actions_;
  std::vector<Block> blocks_;
  std::vector<std::vector<int>> block_members_;
  std::vector<int> class_of_;
  std::unordered_map<int, std::vector<int>> into_delta_;
  std::unordered_map<int, std::vector<int>> touching_;
  AdjacencyRelationClass out_;
};

}  // namespace

AdjacencyRelationClass ClassifyAdjacency(
    const LocalIncidence& incidence, int b_prime, int c_prime,
    const std::vector<std::vector<Permutation>>* label_actions) {
  if (c_prime < 1 || c_prime > incidence.k || b_prime < 1) {
    Fail(ErrorCode::kArgument, "adjacency classification needs b' >= 1 and "
                               "1 <= c' <= k");
  }
  if (static_cast<int>(incidence.branches.size()) != incidence.k ||
      incidence.labels.size() != incidence.delta.size()) {
    Fail(ErrorCode::kArgument, "incidence has inconsistent dimensions");
  }
  return Classifier(incidence, b_prime, c_prime, label_actions).Run();
}

AdjacencyRelationClass AdjacencyRelationClassOf(const Graph& g,
                                                const SphereOrbitProfile& profile,
                                                size_t orbit_index) {
  RequireDesignHypothesis(g, profile);
  const LocalIncidence incidence = BuildLocalIncidence(g, profile, orbit_index);
  const auto actions = NeighborStabilizerActions(g, profile);
  return ClassifyAdjacency(incidence, profile.b_prime[orbit_index],
                           profile.c_prime[orbit_index], &actions);
}

}  // namespace sdt
