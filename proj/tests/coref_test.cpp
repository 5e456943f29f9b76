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

#include <random>

#include <gtest/gtest.h>

#include "kgx/chunker.hpp"
#include "kgx/coref.hpp"
#include "test_support.hpp"

namespace kgx {
namespace {

ChunkedDocument chunked(const std::string& fixture) {
  return chunk_document(normalize_pos(testing::load_fixture(fixture)));
}

TEST(ResolveCoreferences, PronounSubjectTakesMainMention) {
  const auto resolved = resolve_coreferences(chunked("ford_eval.ann.json"));
  EXPECT_EQ(resolved.chunks[13].text, "Ford Motor Company");
  EXPECT_EQ(resolved.chunks[13].sentence, 1u);
}

TEST(ResolveCoreferences, DefiniteDescriptionTakesMainMention) {
  const auto resolved = resolve_coreferences(chunked("ford.ann.json"));
  EXPECT_EQ(resolved.chunks[13].text, "Ford Motor Company");
}

TEST(ResolveCoreferences, PossessivesAreIgnored) {
  const auto resolved = resolve_coreferences(chunked("ford.ann.json"));
  EXPECT_EQ(resolved.chunks[5].text, "its main headquarters");
}

TEST(ResolveCoreferences, NoClustersIsIdentity) {
  auto cd = chunked("ford.ann.json");
  cd.doc.coref.clear();
  EXPECT_EQ(resolve_coreferences(cd), cd);
}

TEST(ResolveCoreferences, MidChunkAndVerbMentionsAreSkipped) {
  auto doc = testing::make_document({{{"Ford", "PROPN", "ORG", Iob::kBegin},
                                      {"sold", "VERB"},
                                      {"big", "ADJ"},
                                      {"cars", "NOUN"}}});
  // "cars" starts mid-chunk in "big cars"; "sold" lands on a VERB chunk.
  doc.coref.push_back({{{0, {0, 1}}, {0, {3, 4}}, {0, {1, 2}}}, 0});
  const auto cd = chunk_document(doc);
  EXPECT_EQ(resolve_coreferences(cd), cd);
}

TEST(ResolveCoreferences, OnlyEntityTextsChangeAndIsIdempotent) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cd = chunk_document(normalize_pos(testing::random_document(rng)));
    const auto once = resolve_coreferences(cd);
    ASSERT_EQ(once.chunks.size(), cd.chunks.size());
    for (std::size_t i = 0; i < cd.chunks.size(); ++i) {
      const auto& a = cd.chunks[i];
      const auto& b = once.chunks[i];
      ASSERT_EQ(a.span, b.span);
      ASSERT_EQ(a.kind, b.kind);
      ASSERT_EQ(a.order, b.order);
      ASSERT_EQ(a.label, b.label);
      if (!a.is_entity()) {
        ASSERT_EQ(a.text, b.text);
      }
    }
    ASSERT_EQ(resolve_coreferences(once), once);
  }
}

}  // namespace
}  // namespace kgx
