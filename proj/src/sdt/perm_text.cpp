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


#include "sdt/perm_text.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "sdt/error.hpp"

namespace sdt {

namespace {

class Reader {
 public:
  Reader(std::string_view text, int degree) : text_(text), degree_(degree) {}

  void SkipSpace() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == ',')) {
      ++pos_;
    }
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  char Peek() { return AtEnd() ? '\0' : text_[pos_]; }
  void Expect(char c) {
    if (Peek() != c) Error(std::string("expected '") + c + "'");
    ++pos_;
  }
  int Point() {
    SkipSpace();
    const size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      // Clamp so long digit runs cannot overflow.
      value = std::min<long long>(value * 10 + (text_[pos_] - '0'),
                                  static_cast<long long>(degree_) + 1);
      ++pos_;
    }
    if (pos_ == start) Error("expected a point");
    if (value >= degree_) {
      Error("point " + std::string(text_.substr(start, pos_ - start)) +
            " is not below degree " + std::to_string(degree_));
    }
    return static_cast<int>(value);
  }
  [[noreturn]] void Error(const std::string& what) const {
    Fail(ErrorCode::kParse, "column " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  int degree_;
  size_t pos_ = 0;
};

Permutation ParseImages(Reader& r, int degree) {
  r.Expect('[');
  std::vector<int> images;
  std::vector<char> seen(degree, 0);
  while (r.Peek() != ']') {
    if (r.AtEnd()) r.Error("unterminated image list");
    const int p = r.Point();
    if (seen[p]) r.Error("repeated image " + std::to_string(p));
    seen[p] = 1;
    images.push_back(p);
  }
  r.Expect(']');
  if (static_cast<int>(images.size()) != degree) {
    r.Error("image list has " + std::to_string(images.size()) +
            " entries, degree is " + std::to_string(degree));
  }
  if (!r.AtEnd()) r.Error("trailing text after image list");
  return Permutation(std::move(images));
}

Permutation ParseCycleText(Reader& r, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> seen(degree, 0);
  if (r.AtEnd()) r.Error("empty permutation");
  while (!r.AtEnd()) {
    r.Expect('(');
    std::vector<int> cycle;
    while (r.Peek() != ')') {
      if (r.AtEnd()) r.Error("unterminated cycle");
      const int p = r.Point();
      if (seen[p]) r.Error("repeated point " + std::to_string(p));
      seen[p] = 1;
      cycle.push_back(p);
    }
    r.Expect(')');
    for (size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation ParseCycles(std::string_view text, int degree) {
  if (degree < 0) Fail(ErrorCode::kArgument, "negative degree");
  Reader r(text, degree);
  if (r.Peek() == '[') return ParseImages(r, degree);
  return ParseCycleText(r, degree);
}

std::vector<Permutation> ParseGenerators(std::string_view text, int degree) {
  std::vector<Permutation> out;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r,") == std::string_view::npos) continue;
    try {
      out.push_back(ParseCycles(line, degree));
    } catch (const Error& e) {
      Fail(ErrorCode::kParse, "generator line " + std::to_string(line_no) + ", " +
                                  e.what());
    }
  }
  return out;
}

}  // namespace sdt
