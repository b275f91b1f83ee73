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


#ifndef SDT_COMBINATORICS_HPP_
#define SDT_COMBINATORICS_HPP_

#include <algorithm>
#include <vector>

namespace sdt {

// C(n, r) in 64-bit; 0 outside 0 <= r <= n.
inline long long Binomial(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long out = 1;
  for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Calls fn(subset) for every r-subset of {first, ..., first + n - 1} in
// lexicographic order. Stops early when fn returns false.
template <typename Fn>
void ForEachCombination(int n, int r, int first, Fn&& fn) {
  if (r < 0 || r > n) return;
  std::vector<int> subset(r);
  for (int i = 0; i < r; ++i) subset[i] = first + i;
  while (true) {
    if (!fn(static_cast<const std::vector<int>&>(subset))) return;
    int i = r - 1;
    while (i >= 0 && subset[i] == first + n - r + i) --i;
    if (i < 0) return;
    ++subset[i];
    for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace sdt

#endif  // SDT_COMBINATORICS_HPP_
