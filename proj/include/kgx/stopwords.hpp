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

#ifndef KGX_STOPWORDS_HPP_
#define KGX_STOPWORDS_HPP_

#include <array>
#include <fstream>
#include <set>
#include <string>
#include <string_view>

#include "kgx/error.hpp"
#include "kgx/strings.hpp"

namespace kgx {

// English stop words (the 179-entry NLTK list). Mirrors
// data/stopwords_en.txt.
inline constexpr std::array<std::string_view, 179> kEnglishStopWords = {
    "i",        "me",         "my",       "myself",     "we",
    "our",      "ours",       "ourselves", "you",       "you're",
    "you've",   "you'll",     "you'd",    "your",       "yours",
    "yourself", "yourselves", "he",       "him",        "his",
    "himself",  "she",        "she's",    "her",        "hers",
    "herself",  "it",         "it's",     "its",        "itself",
    "they",     "them",       "their",    "theirs",     "themselves",
    "what",     "which",      "who",      "whom",       "this",
    "that",     "that'll",    "these",    "those",      "am",
    "is",       "are",        "was",      "were",       "be",
    "been",     "being",      "have",     "has",        "had",
    "having",   "do",         "does",     "did",        "doing",
    "a",        "an",         "the",      "and",        "but",
    "if",       "or",         "because",  "as",         "until",
    "while",    "of",         "at",       "by",         "for",
    "with",     "about",      "against",  "between",    "into",
    "through",  "during",     "before",   "after",      "above",
    "below",    "to",         "from",     "up",         "down",
    "in",       "out",        "on",       "off",        "over",
    "under",    "again",      "further",  "then",       "once",
    "here",     "there",      "when",     "where",      "why",
    "how",      "all",        "any",      "both",       "each",
    "few",      "more",       "most",     "other",      "some",
    "such",     "no",         "nor",      "not",        "only",
    "own",      "same",       "so",       "than",       "too",
    "very",     "s",          "t",        "can",        "will",
    "just",     "don",        "don't",    "should",     "should've",
    "now",      "d",          "ll",       "m",          "o",
    "re",       "ve",         "y",        "ain",        "aren",
    "aren't",   "couldn",     "couldn't", "didn",       "didn't",
    "doesn",    "doesn't",    "hadn",     "hadn't",     "hasn",
    "hasn't",   "haven",      "haven't",  "isn",        "isn't",
    "ma",       "mightn",     "mightn't", "mustn",      "mustn't",
    "needn",    "needn't",    "shan",     "shan't",     "shouldn",
    "shouldn't", "wasn",      "wasn't",   "weren",      "weren't",
    "won",      "won't",      "wouldn",   "wouldn't"};

inline constexpr std::array<std::string_view, 7> kDayNames = {
    "monday", "tuesday", "wednesday", "thursday",
    "friday", "saturday", "sunday"};

inline constexpr std::array<std::string_view, 12> kMonthNames = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

// Phrases that may not head a triple: stop words plus day and month
// names, matched case-insensitively on the whole trimmed phrase.
class StopList {
 public:
  // Built-in English stop words.
  StopList() : StopList(kEnglishStopWords) {}

  template <typename Range>
  explicit StopList(const Range& words) {
    for (const auto& w : words) words_.insert(casefold(trim(w)));
    for (auto d : kDayNames) words_.insert(std::string(d));
    for (auto m : kMonthNames) words_.insert(std::string(m));
  }

  // One lowercase entry per line; blank lines are skipped.
  static StopList from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read stop list " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
      const auto w = trim(line);
      if (!w.empty()) words.insert(std::string(w));
    }
    return StopList(words);
  }

  bool contains(std::string_view phrase) const {
    return words_.contains(casefold(trim(phrase)));
  }

  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

}  // namespace kgx

#endif  // KGX_STOPWORDS_HPP_
