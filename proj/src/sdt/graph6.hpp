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


#ifndef SDT_GRAPH6_HPP_
#define SDT_GRAPH6_HPP_

#include <string>
#include <string_view>

#include "sdt/graph.hpp"

namespace sdt {

// One graph6 line, with or without the ">>graph6<<" header and trailing
// newline. Orders up to 258047 (short and 4-byte forms). Errors are kParse
// and name the byte offset within `line`.
Graph ParseGraph6(std::string_view line);

// Header-free encoding.
std::string EncodeGraph6(const Graph& g);

}  // namespace sdt

#endif  // SDT_GRAPH6_HPP_
