// Copyright 2026 The prefent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Internal helpers for the line-oriented model/table text formats.

#ifndef PREFENT_SRC_MODEL_TEXT_HPP_
#define PREFENT_SRC_MODEL_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "prefent/errors.hpp"
#include "prefent/logic.hpp"

namespace prefent::detail {

struct Line {
  std::size_t number = 0;  // 1-based
  std::string text;        // comment-stripped, trimmed
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

/// Non-empty content lines, '#' comments stripped (outside quotes).
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++line_no;
    bool in_quotes = false;
    std::string stripped;
    for (char c : raw) {
      if (c == '"') in_quotes = !in_quotes;
      if (c == '#' && !in_quotes) break;
      stripped += c;
    }
    std::string_view t = trim(stripped);
    if (!t.empty()) out.push_back({line_no, std::string(t)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

/// Parses a comma-separated list of quoted strings: "a", "b". Both the
/// empty list and omitted trailing commas are rejected.
inline std::vector<std::string> quoted_list(std::string_view s,
                                            std::size_t line_no) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(line_no) + ": " + what, i);
  };
  for (;;) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size() || s[i] != '"') fail("expected a quoted formula");
    std::size_t close = s.find('"', i + 1);
    if (close == std::string_view::npos) fail("unterminated quote");
    out.emplace_back(s.substr(i + 1, close - i - 1));
    i = close + 1;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) return out;
    if (s[i] != ',') fail("expected ',' between formulas");
    ++i;
  }
}

inline bool is_state_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-' ||
              c == '+';
    if (!ok) return false;
  }
  return true;
}

}  // namespace prefent::detail

#endif  // PREFENT_SRC_MODEL_TEXT_HPP_
