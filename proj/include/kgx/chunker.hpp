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

// Flat phrase chunking. Each sentence is partitioned into ENTITY chunks
// (noun phrases), VERB chunks (verb phrases) and single-token pass-through
// chunks labeled with their coarse POS.
//
// Per sentence, in order:
//   1. NER mentions with a nominal label become indivisible noun units.
//   2. Base noun phrases:  DET? (ADJ|NUM|NOUN|PROPN|unit)* (NOUN|PROPN|PRON|unit)
//   3. To fixpoint, leftmost first:  "(" NP ")",  NP "of" NP,  NP NP.
//   4. To fixpoint, leftmost first:  VERB PART, VERB ADP, ADP VERB,
//      PART VERB, VERB VERB  (plus VERB ADV, ADV VERB when enabled).
//   5. Everything left over is a singleton.

#ifndef KGX_CHUNKER_HPP_
#define KGX_CHUNKER_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kgx/document.hpp"
#include "kgx/strings.hpp"

namespace kgx {

enum class ChunkKind { kEntity, kVerb, kPassThrough };

struct Chunk {
  std::size_t sentence = 0;
  std::size_t order = 0;  // document-wide phrase number
  std::string text;
  ChunkKind kind = ChunkKind::kPassThrough;
  std::string label;  // "ENTITY", "VERB", or the token's coarse POS
  TokenSpan span;

  bool is_entity() const { return kind == ChunkKind::kEntity; }
  bool is_verb() const { return kind == ChunkKind::kVerb; }
  bool operator==(const Chunk&) const = default;
};

struct ChunkedDocument {
  AnnotatedDocument doc;
  std::vector<Chunk> chunks;

  bool operator==(const ChunkedDocument&) const = default;
};

struct ChunkerOptions {
  // Let adverbs join verb phrases ("quickly acquired").
  bool adv_in_verb_chunks = false;
};

inline bool is_nominal_entity_label(std::string_view label) {
  static const std::set<std::string_view> kNominal = {
      "PERSON", "ORG",     "GPE",     "LOC",         "FAC", "DATE",
      "TIME",   "MONEY",   "EVENT",   "PRODUCT",     "WORK_OF_ART",
      "LAW"};
  return kNominal.contains(label);
}

// Token ranges of this sentence's nominal NER mentions, sorted and
// non-overlapping (a mention overlapping an earlier one is dropped).
inline std::vector<TokenSpan> promote_entity_spans(
    const Sentence& sentence, std::span<const EntityMention> entities) {
  std::vector<TokenSpan> spans;
  for (const auto& e : entities) {
    if (e.sentence != sentence.index || !is_nominal_entity_label(e.label)) {
      continue;
    }
    if (e.span.empty() || e.span.end > sentence.tokens.size()) continue;
    spans.push_back(e.span);
  }
  std::stable_sort(spans.begin(), spans.end(),
                   [](TokenSpan a, TokenSpan b) { return a.start < b.start; });
  std::vector<TokenSpan> kept;
  for (auto s : spans) {
    if (kept.empty() || kept.back().end <= s.start) kept.push_back(s);
  }
  return kept;
}

namespace detail {

enum class UnitKind { kNoun, kVerb, kToken };

struct Unit {
  TokenSpan span;
  UnitKind kind = UnitKind::kToken;
  bool parenthesized = false;
};

class SentenceChunker {
 public:
  SentenceChunker(const Sentence& sentence, std::vector<TokenSpan> promoted,
                  const ChunkerOptions& options)
      : sentence_(sentence),
        promoted_at_(sentence.tokens.size()),
        options_(options) {
    for (auto s : promoted) promoted_at_[s.start] = s;
  }

  std::vector<Unit> run() {
    base_phrases();
    while (merge_nominal()) {
    }
    while (merge_verbal()) {
    }
    return std::move(units_);
  }

 private:
  const std::string& pos(std::size_t i) const {
    return sentence_.tokens[i].pos;
  }

  bool is_determiner(std::size_t i) const {
    const auto& tok = sentence_.tokens[i];
    return tok.pos == "DET" || tok.tag == "PRP$";
  }

  // End of the longest base noun phrase starting at `start`, if any.
  std::optional<std::size_t> match_noun_phrase(std::size_t start) const {
    const auto n = sentence_.tokens.size();
    std::size_t i = start;
    if (!promoted_at_[i] && is_determiner(i)) ++i;
    std::optional<std::size_t> end;
    while (i < n) {
      if (const auto& unit = promoted_at_[i]) {
        i = unit->end;
        end = i;
      } else if (pos(i) == "NOUN" || pos(i) == "PROPN") {
        end = ++i;
      } else if (pos(i) == "ADJ" || pos(i) == "NUM") {
        ++i;
      } else if (pos(i) == "PRON") {
        end = i + 1;
        break;
      } else {
        break;
      }
    }
    return end;
  }

  void base_phrases() {
    const auto n = sentence_.tokens.size();
    for (std::size_t i = 0; i < n;) {
      if (auto end = match_noun_phrase(i)) {
        units_.push_back({{i, *end}, UnitKind::kNoun});
        i = *end;
      } else {
        const auto kind =
            pos(i) == "VERB" ? UnitKind::kVerb : UnitKind::kToken;
        units_.push_back({{i, i + 1}, kind});
        ++i;
      }
    }
  }

  bool is_noun(std::size_t u) const {
    return u < units_.size() && units_[u].kind == UnitKind::kNoun;
  }
  bool is_verb(std::size_t u) const {
    return u < units_.size() && units_[u].kind == UnitKind::kVerb;
  }
  bool is_token_text(std::size_t u, std::string_view text) const {
    return u < units_.size() && units_[u].kind == UnitKind::kToken &&
           casefold(sentence_.tokens[units_[u].span.start].text) == text;
  }
  bool is_token_pos(std::size_t u, std::string_view p) const {
    return u < units_.size() && units_[u].kind == UnitKind::kToken &&
           pos(units_[u].span.start) == p;
  }

  // Replaces units [first, first + count) with one unit of `kind`.
  void merge(std::size_t first, std::size_t count, UnitKind kind,
             bool parenthesized = false) {
    Unit merged{{units_[first].span.start, units_[first + count - 1].span.end},
                kind, parenthesized};
    units_.erase(units_.begin() + first + 1, units_.begin() + first + count);
    units_[first] = merged;
  }

  bool merge_nominal() {
    for (std::size_t u = 0; u < units_.size(); ++u) {
      if (is_token_text(u, "(") && is_noun(u + 1) &&
          is_token_text(u + 2, ")")) {
        merge(u, 3, UnitKind::kNoun, true);
        return true;
      }
      if (is_noun(u) && is_token_text(u + 1, "of") && is_noun(u + 2)) {
        merge(u, 3, UnitKind::kNoun);
        return true;
      }
      if (is_noun(u) && is_noun(u + 1)) {
        merge(u, 2, UnitKind::kNoun);
        return true;
      }
    }
    return false;
  }

  bool joins_verb(std::size_t u) const {
    return is_token_pos(u, "PART") || is_token_pos(u, "ADP") ||
           (options_.adv_in_verb_chunks && is_token_pos(u, "ADV"));
  }

  bool merge_verbal() {
    for (std::size_t u = 0; u + 1 < units_.size(); ++u) {
      // VERB+PART, VERB+ADP, ADP+VERB, PART+VERB, VERB+VERB, [VERB+ADV,
      // ADV+VERB]
      if ((is_verb(u) && joins_verb(u + 1)) ||
          (joins_verb(u) && is_verb(u + 1)) || (is_verb(u) && is_verb(u + 1))) {
        merge(u, 2, UnitKind::kVerb);
        return true;
      }
    }
    return false;
  }

  const Sentence& sentence_;
  std::vector<std::optional<TokenSpan>> promoted_at_;
  const ChunkerOptions& options_;
  std::vector<Unit> units_;
};

}  // namespace detail

inline ChunkedDocument chunk_document(AnnotatedDocument doc,
                                      const ChunkerOptions& options = {}) {
  ChunkedDocument out;
  const TextIndex index(doc.text);
  std::size_t order = 0;
  for (const auto& sentence : doc.sentences) {
    auto units = detail::SentenceChunker(
                     sentence, promote_entity_spans(sentence, doc.entities),
                     options)
                     .run();
    for (const auto& unit : units) {
      Chunk chunk;
      chunk.sentence = sentence.index;
      chunk.order = order++;
      chunk.span = unit.span;
      switch (unit.kind) {
        case detail::UnitKind::kNoun:
          chunk.kind = ChunkKind::kEntity;
          chunk.label = "ENTITY";
          break;
        case detail::UnitKind::kVerb:
          chunk.kind = ChunkKind::kVerb;
          chunk.label = "VERB";
          break;
        case detail::UnitKind::kToken:
          chunk.kind = ChunkKind::kPassThrough;
          chunk.label = sentence.tokens[unit.span.start].pos;
          break;
      }
      const auto inner = unit.parenthesized
                             ? TokenSpan{unit.span.start + 1, unit.span.end - 1}
                             : unit.span;
      chunk.text = std::string(span_text(index, sentence, inner));
      out.chunks.push_back(std::move(chunk));
    }
  }
  out.doc = std::move(doc);
  return out;
}

// Debug dump: sentence, phrase number, phrase, type.
inline std::string chunks_to_tsv(const ChunkedDocument& cd) {
  std::ostringstream os;
  os << "sent\tphrase_id\tphrase\ttype\n";
  for (const auto& c : cd.chunks) {
    os << c.sentence << '\t' << c.order << '\t' << c.text << '\t' << c.label
       << '\n';
  }
  return os.str();
}

}  // namespace kgx

#endif  // KGX_CHUNKER_HPP_
