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

#ifndef KGX_COREF_HPP_
#define KGX_COREF_HPP_

#include <set>
#include <string>
#include <string_view>

#include "kgx/chunker.hpp"
#include "kgx/document.hpp"
#include "kgx/strings.hpp"

namespace kgx {

inline bool is_possessive_pronoun(std::string_view text) {
  static const std::set<std::string, std::less<>> kPossessive = {
      "its", "his", "her", "their", "my", "our", "your"};
  return kPossessive.contains(casefold(trim(text)));
}

// Substitutes each cluster's main mention text into the ENTITY chunks that
// its other mentions start. Possessive mentions ("its main headquarters")
// are left alone, as are mentions that start mid-chunk or land on VERB or
// pass-through chunks. Only chunk texts change.
inline ChunkedDocument resolve_coreferences(ChunkedDocument cd) {
  const auto& doc = cd.doc;
  const TextIndex index(doc.text);
  for (const auto& cluster : doc.coref) {
    const auto& main = cluster.mentions[cluster.main];
    const std::string representative(
        span_text(index, doc.sentences[main.sentence], main.span));
    for (std::size_t m = 0; m < cluster.mentions.size(); ++m) {
      if (m == cluster.main) continue;
      const auto& mention = cluster.mentions[m];
      const auto text =
          span_text(index, doc.sentences[mention.sentence], mention.span);
      if (is_possessive_pronoun(text)) continue;
      for (auto& chunk : cd.chunks) {
        if (chunk.sentence != mention.sentence ||
            !chunk.span.contains(mention.span.start)) {
          continue;
        }
        if (chunk.is_entity() && chunk.span.start == mention.span.start) {
          chunk.text = representative;
        }
        break;
      }
    }
  }
  return cd;
}

}  // namespace kgx

#endif  // KGX_COREF_HPP_
