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

// Permutations on 0..n-1 and groups given by generators, backed by a
// deterministic Schreier-Sims stabilizer chain.

#ifndef SDT_GROUP_HPP_
#define SDT_GROUP_HPP_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdt {

using BigInt = boost::multiprecision::cpp_int;

class Permutation {
 public:
  Permutation() = default;
  // Throws kInvariant unless `images` is a bijection on 0..n-1.
  explicit Permutation(std::vector<int> images);

  static Permutation Identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  std::span<const int> images() const { return images_; }

  bool IsIdentity() const;
  int FirstMovedPoint() const;  // -1 for the identity
  Permutation Inverse() const;

  // "(0 1 2)(3 4)"; "()" for the identity.
  std::string ToCycleString() const;

  // Product applying `lhs` first: (lhs * rhs)[p] == rhs[lhs[p]].
  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

class GeneratedGroup {
 public:
  // Deterministic Schreier-Sims. Base points start with `base_prefix`, then
  // each generator or sifted residue that fixes the current base contributes
  // its smallest moved point. An empty generator list means the trivial
  // group of the given degree.
  static GeneratedGroup SchreierSims(int degree,
                                     std::vector<Permutation> generators,
                                     std::span<const int> base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  std::vector<int> FundamentalOrbitLengths() const;
  const BigInt& order() const { return order_; }

  // Strong generators fixing base[0..level-1] pointwise.
  std::vector<Permutation> StrongGenerators(int level = 0) const;

  bool Contains(const Permutation& p) const;

  // {g in G : point^g == point}, exactly.
  GeneratedGroup PointStabilizer(int point) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<int> generator_ids;  // into strong_
    std::vector<int> orbit;
    std::vector<int> slot;           // point -> index into transversal, or -1
    std::vector<Permutation> transversal;
  };

  void RebuildOrbit(Level& level) const;
  // Returns the residue and the level at which sifting stopped.
  std::pair<Permutation, int> Sift(Permutation h, int first_level) const;
  void Run();

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

struct OrbitPartition {
  std::vector<int> domain;               // ascending
  std::vector<std::vector<int>> orbits;  // each ascending; ordered by min
  bool operator==(const OrbitPartition&) const = default;
};

// Throws kInvariance (naming the generator and point) unless every
// generator maps `domain` into itself.
void RequireInvariant(std::span<const Permutation> generators,
                      std::span<const int> domain);

OrbitPartition Orbits(std::span<const Permutation> generators,
                      std::span<const int> domain);
OrbitPartition Orbits(const GeneratedGroup& group, std::span<const int> domain);

// True iff the group is transitive on unordered t-subsets of `domain`.
// At most 2^20 subsets are enumerated (kScale beyond that).
bool IsTHomogeneous(std::span<const Permutation> generators,
                    std::span<const int> domain, int t);
bool IsTHomogeneous(const GeneratedGroup& group, std::span<const int> domain,
                    int t);

// Largest t with j-homogeneity for every 1 <= j <= t (0 if intransitive).
int MaxHomogeneity(std::span<const Permutation> generators,
                   std::span<const int> domain);

}  // namespace sdt

#endif  // SDT_GROUP_HPP_
