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


#ifndef SDT_PERM_TEXT_HPP_
#define SDT_PERM_TEXT_HPP_

#include <string_view>
#include <vector>

#include "sdt/group.hpp"

namespace sdt {

// One permutation per non-blank line, '#' starts a comment. A line is either
// cycle notation "(0 1 2)(3 4)" with implicit fixed points, or an image list
// "[1 2 0 3]" of exactly `degree` entries. Commas may replace spaces. Errors
// are kParse naming the line.
std::vector<Permutation> ParseGenerators(std::string_view text, int degree);

// Cycle notation for a single permutation.
Permutation ParseCycles(std::string_view text, int degree);

}  // namespace sdt

#endif  // SDT_PERM_TEXT_HPP_
