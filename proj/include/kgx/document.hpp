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

// Annotated document model: the token-level annotation schema (token text,
// entity type, IOB, coarse/fine POS, inclusive character offsets,
// dependency) plus entity mentions and coreference clusters.

#ifndef KGX_DOCUMENT_HPP_
#define KGX_DOCUMENT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kgx/error.hpp"
#include "kgx/strings.hpp"

namespace kgx {

enum class Iob { kBegin, kInside, kOutside };

inline std::string_view to_string(Iob iob) {
  switch (iob) {
    case Iob::kBegin:
      return "B";
    case Iob::kInside:
      return "I";
    case Iob::kOutside:
      break;
  }
  return "O";
}

struct Token {
  std::size_t index = 0;
  std::string text;
  std::string ent_type;
  Iob iob = Iob::kOutside;
  std::string pos;  // coarse, universal tagset
  std::string tag;  // fine, treebank tagset
  std::size_t start = 0;
  std::size_t end = 0;  // inclusive
  std::string dep;
  std::size_t head = 0;  // sentence-local; self for the root

  bool operator==(const Token&) const = default;
};

// Half-open token range within one sentence.
struct TokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool empty() const { return end <= start; }
  bool contains(std::size_t i) const { return i >= start && i < end; }
  bool operator==(const TokenSpan&) const = default;
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct EntityMention {
  std::string text;
  std::string label;
  std::size_t sentence = 0;
  TokenSpan span;

  bool operator==(const EntityMention&) const = default;
};

struct CorefMention {
  std::size_t sentence = 0;
  TokenSpan span;

  bool operator==(const CorefMention&) const = default;
};

struct CorefCluster {
  std::vector<CorefMention> mentions;
  std::size_t main = 0;

  bool operator==(const CorefCluster&) const = default;
};

struct AnnotatedDocument {
  std::string doc_id;
  std::string text;
  std::vector<Sentence> sentences;
  std::vector<EntityMention> entities;
  std::vector<CorefCluster> coref;

  bool operator==(const AnnotatedDocument&) const = default;
};

// Original-spacing text covered by a token span of one sentence.
inline std::string_view span_text(const TextIndex& index,
                                  const Sentence& sentence, TokenSpan span) {
  return index.slice(sentence.tokens[span.start].start,
                     sentence.tokens[span.end - 1].end);
}

namespace detail {

inline std::string where(std::size_t sentence, std::size_t token) {
  return "sentence " + std::to_string(sentence) + " token " +
         std::to_string(token);
}

inline void check_span(const AnnotatedDocument& doc, std::size_t sentence,
                       TokenSpan span, const std::string& what) {
  if (sentence >= doc.sentences.size()) {
    throw SpanError(what + ": sentence " + std::to_string(sentence) +
                    " out of range");
  }
  if (span.empty() || span.end > doc.sentences[sentence].tokens.size()) {
    throw SpanError(what + ": token span [" + std::to_string(span.start) +
                    ", " + std::to_string(span.end) + ") invalid for sentence " +
                    std::to_string(sentence));
  }
}

}  // namespace detail

// Checks every document invariant; throws SpanError or IobError on the
// first violation found.
inline void validate(const AnnotatedDocument& doc) {
  const TextIndex index(doc.text);
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sentence = doc.sentences[s];
    if (sentence.index != s) {
      throw SpanError("sentence " + std::to_string(s) + " has index " +
                      std::to_string(sentence.index));
    }
    if (sentence.tokens.empty()) {
      throw SpanError("sentence " + std::to_string(s) + " has no tokens");
    }
    const auto n = sentence.tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& tok = sentence.tokens[i];
      if (tok.index != i) {
        throw SpanError(detail::where(s, i) + ": index " +
                        std::to_string(tok.index) + " is not consecutive");
      }
      if (tok.start > tok.end || tok.end >= index.length()) {
        throw SpanError(detail::where(s, i) + ": offsets [" +
                        std::to_string(tok.start) + ", " +
                        std::to_string(tok.end) + "] outside text");
      }
      if (i > 0 && sentence.tokens[i - 1].end >= tok.start) {
        throw SpanError(detail::where(s, i) +
                        ": overlaps or precedes previous token");
      }
      if (index.slice(tok.start, tok.end) != tok.text) {
        throw SpanError(detail::where(s, i) + ": text '" + tok.text +
                        "' does not match characters [" +
                        std::to_string(tok.start) + ", " +
                        std::to_string(tok.end) + "]");
      }
      if (tok.head >= n) {
        throw SpanError(detail::where(s, i) + ": head " +
                        std::to_string(tok.head) + " out of range");
      }
      if (tok.iob == Iob::kOutside && !tok.ent_type.empty()) {
        throw IobError(detail::where(s, i) + ": O tag with entity type '" +
                       tok.ent_type + "'");
      }
      if (tok.iob != Iob::kOutside && tok.ent_type.empty()) {
        throw IobError(detail::where(s, i) + ": " +
                       std::string(to_string(tok.iob)) +
                       " tag without entity type");
      }
      if (tok.iob == Iob::kInside) {
        if (i == 0 || sentence.tokens[i - 1].iob == Iob::kOutside ||
            sentence.tokens[i - 1].ent_type != tok.ent_type) {
          throw IobError(detail::where(s, i) + ": dangling I-" + tok.ent_type);
        }
      }
    }
  }
  for (std::size_t e = 0; e < doc.entities.size(); ++e) {
    const auto& ent = doc.entities[e];
    const auto what = "entity " + std::to_string(e);
    detail::check_span(doc, ent.sentence, ent.span, what);
    if (span_text(index, doc.sentences[ent.sentence], ent.span) != ent.text) {
      throw SpanError(what + ": text '" + ent.text +
                      "' does not match its token span");
    }
  }
  for (std::size_t c = 0; c < doc.coref.size(); ++c) {
    const auto& cluster = doc.coref[c];
    const auto what = "coref cluster " + std::to_string(c);
    if (cluster.mentions.size() < 2) {
      throw SpanError(what + ": fewer than two mentions");
    }
    if (cluster.main >= cluster.mentions.size()) {
      throw SpanError(what + ": main " + std::to_string(cluster.main) +
                      " out of range");
    }
    for (const auto& m : cluster.mentions) {
      detail::check_span(doc, m.sentence, m.span, what);
    }
  }
}

// Relabels AUX as VERB so auxiliaries chunk like the main verbs they attach
// to ("was founded by").
inline AnnotatedDocument normalize_pos(AnnotatedDocument doc) {
  for (auto& sentence : doc.sentences) {
    for (auto& tok : sentence.tokens) {
      if (tok.pos == "AUX") tok.pos = "VERB";
    }
  }
  return doc;
}

}  // namespace kgx

#endif  // KGX_DOCUMENT_HPP_
