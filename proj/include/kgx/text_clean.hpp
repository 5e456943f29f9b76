// Copyright 2026 The kgx Authors.
//
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

#ifndef KGX_TEXT_CLEAN_HPP_
#define KGX_TEXT_CLEAN_HPP_

#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace kgx {

namespace detail {

// UTF-8 sequences rewritten to ASCII before annotation.
inline constexpr std::array<std::pair<std::string_view, char>, 15>
    kCharReplacements{{
        {"‘", '\''},  // left single quote
        {"’", '\''},  // right single quote
        {"‚", '\''},  // single low-9 quote
        {"‛", '\''},  // single high-reversed-9 quote
        {"′", '\''},  // prime
        {"“", '"'},
        {"”", '"'},
        {"„", '"'},
        {"‟", '"'},
        {"″", '"'},  // double prime
        {"‐", '-'},  // hyphen
        {"‑", '-'},  // non-breaking hyphen
        {"‒", '-'},  // figure dash
        {"–", '-'},  // en dash
        {"—", '-'},  // em dash
    }};

inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

}  // namespace detail

// Normalizes raw text before annotation:
//  - typographic quotes become ASCII ' and ";
//  - en/em dashes and Unicode hyphens become ASCII -;
//  - "them.The" becomes "them. The" (lowercase, period, uppercase);
//  - runs of spaces/tabs become one space. Newlines are kept.
// Idempotent.
inline std::string clean_text(std::string_view raw) {
  std::string mapped;
  mapped.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    bool replaced = false;
    if (static_cast<unsigned char>(raw[i]) >= 0x80) {
      for (const auto& [from, to] : detail::kCharReplacements) {
        if (raw.substr(i, from.size()) == from) {
          mapped.push_back(to);
          i += from.size();
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) mapped.push_back(raw[i++]);
  }

  std::string out;
  out.reserve(mapped.size() + 8);
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    const char c = mapped[i];
    if (c == ' ' || c == '\t') {
      if (out.empty() || out.back() != ' ') out.push_back(' ');
      continue;
    }
    out.push_back(c);
    if (c == '.' && i > 0 && i + 1 < mapped.size() &&
        detail::is_lower(mapped[i - 1]) && detail::is_upper(mapped[i + 1])) {
      out.push_back(' ');
    }
  }
  return out;
}

}  // namespace kgx

#endif  // KGX_TEXT_CLEAN_HPP_
