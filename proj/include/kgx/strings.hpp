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

#ifndef KGX_STRINGS_HPP_
#define KGX_STRINGS_HPP_

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "kgx/error.hpp"

namespace kgx {

inline constexpr std::string_view kWhitespace = " \t\r\n\f\v";

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kWhitespace);
  return s.substr(first, last - first + 1);
}

// ASCII-only case folding; non-ASCII bytes pass through untouched.
inline std::string casefold(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Splits on runs of whitespace, dropping empty pieces.
inline std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    i = s.find_first_not_of(kWhitespace, i);
    if (i == std::string_view::npos) break;
    auto j = s.find_first_of(kWhitespace, i);
    if (j == std::string_view::npos) j = s.size();
    words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

// Splits on a single-character delimiter, keeping empty fields.
inline std::vector<std::string_view> split_fields(std::string_view s,
                                                  char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      fields.push_back(s.substr(start));
      return fields;
    }
    fields.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Decodes UTF-8 into code points. Invalid sequences decode byte-wise as
// U+FFFD so the function is total.
inline std::u32string utf8_decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    int len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    }
    bool ok = len > 0 && i + len <= s.size();
    for (int k = 1; ok && k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) ok = false;
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

// Maps code-point offsets of a UTF-8 string to byte offsets so that
// annotation spans can be sliced in O(1).
class TextIndex {
 public:
  explicit TextIndex(std::string_view text) : text_(text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        byte_of_.push_back(i);
      }
    }
    byte_of_.push_back(text.size());
  }

  // Number of code points.
  std::size_t length() const { return byte_of_.size() - 1; }

  // Text of code points [first, last], both inclusive.
  std::string_view slice(std::size_t first, std::size_t last) const {
    if (first > last || last >= length()) {
      throw SpanError("character span [" + std::to_string(first) + ", " +
                      std::to_string(last) + "] outside text of length " +
                      std::to_string(length()));
    }
    const auto begin = byte_of_[first];
    return text_.substr(begin, byte_of_[last + 1] - begin);
  }

 private:
  std::string_view text_;
  std::vector<std::size_t> byte_of_;
};

// Fixed-point rendering with at least two and at most six decimals:
// 11 -> "11.00", 1.75 -> "1.75", 1/3 -> "0.333333".
inline std::string format_real(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::fixed, 6);
  std::string s(buf, res.ptr);
  const auto dot = s.find('.');
  while (s.size() > dot + 3 && s.back() == '0') s.pop_back();
  if (s == "-0.00") s = "0.00";
  return s;
}

inline double parse_real(std::string_view s) {
  double value = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("not a number: '" + std::string(s) + "'");
  }
  return value;
}

inline long long parse_integer(std::string_view s) {
  long long value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace kgx

#endif  // KGX_STRINGS_HPP_
