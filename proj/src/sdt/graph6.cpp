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


#include "sdt/graph6.hpp"

#include <vector>

#include "sdt/error.hpp"

namespace sdt {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kLargeMarker = 126;

[[noreturn]] void ParseError(size_t offset, const std::string& what) {
  Fail(ErrorCode::kParse, "graph6 byte " + std::to_string(offset) + ": " + what);
}

int Sextet(std::string_view line, size_t offset) {
  const int c = static_cast<unsigned char>(line[offset]);
  if (c < kBias || c > kLargeMarker) {
    ParseError(offset, "byte value " + std::to_string(c) + " outside 63..126");
  }
  return c - kBias;
}

}  // namespace

Graph ParseGraph6(std::string_view line) {
  size_t pos = 0;
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (pos >= line.size()) ParseError(pos, "empty graph6 line");

  long long n = 0;
  if (static_cast<unsigned char>(line[pos]) == kLargeMarker) {
    if (pos + 1 < line.size() &&
        static_cast<unsigned char>(line[pos + 1]) == kLargeMarker) {
      ParseError(pos + 1, "8-byte order form is not supported");
    }
    if (pos + 4 > line.size()) ParseError(line.size(), "truncated order field");
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | Sextet(line, pos + i);
    if (n < kBias) ParseError(pos, "extended order form used for n < 63");
    pos += 4;
  } else {
    const int s = Sextet(line, pos);
    if (s == kLargeMarker - kBias) ParseError(pos, "unexpected order marker");
    n = s;
    pos += 1;
  }

  const long long bits = n * (n - 1) / 2;
  const size_t bytes = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos != bytes) {
    ParseError(std::min(line.size(), pos + bytes),
               "expected " + std::to_string(bytes) + " adjacency bytes, found " +
                   std::to_string(line.size() - pos));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = Sextet(line, pos + k / 6);
      if (byte >> (5 - k % 6) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const size_t last = pos + bytes - 1;
    const int unused = static_cast<int>(6 - bits % 6);
    if (Sextet(line, last) & ((1 << unused) - 1)) {
      ParseError(last, "padding bits are not zero");
    }
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string EncodeGraph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < kBias) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < (1 << 18)) {
    out.push_back(static_cast<char>(kLargeMarker));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    Fail(ErrorCode::kScale, "graph6 encoder supports fewer than 262144 vertices");
  }
  int current = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + kBias));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + kBias));
  return out;
}

}  // namespace sdt
