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

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "kgx/enricher.hpp"
#include "kgx/graph.hpp"
#include "test_support.hpp"

namespace kgx {
namespace {

// Full (m+1)x(n+1) Wagner-Fischer table over lowercase ASCII; kept apart
// from the library's two-row version.
std::size_t reference_distance(std::string a, std::string b) {
  std::transform(a.begin(), a.end(), a.begin(), ::tolower);
  std::transform(b.begin(), b.end(), b.begin(), ::tolower);
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

TEST(MapEntityLabel, FiveTypeScheme) {
  EXPECT_EQ(map_entity_label("GPE"), "LOC");
  EXPECT_EQ(map_entity_label("LOC"), "LOC");
  EXPECT_EQ(map_entity_label("FAC"), "LOC");
  EXPECT_EQ(map_entity_label("PERSON"), "PER");
  EXPECT_EQ(map_entity_label("ORG"), "ORG");
  EXPECT_EQ(map_entity_label("DATE"), "O");
  EXPECT_EQ(map_entity_label(""), "O");
  EXPECT_EQ(map_entity_label("CARDINAL"), "O");
  for (const auto* misc :
       {"NORP", "PRODUCT", "EVENT", "WORK_OF_ART", "LANGUAGE", "LAW"}) {
    EXPECT_EQ(map_entity_label(misc), "MISC") << misc;
  }
}

TEST(Levenshtein, MatchesReferenceTable) {
  EXPECT_EQ(reference_distance("suburb of Detroit", "Detroit"), 10u);
  EXPECT_EQ(levenshtein("suburb of detroit", "detroit"), 10u);
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(levenshtein("", "abc"), 3u);
  EXPECT_EQ(levenshtein("Émile", "Emile"), 1u);  // code points, not bytes

  std::mt19937 rng(21);
  std::uniform_int_distribution<int> len(0, 12), ch('a', 'e');
  for (int trial = 0; trial < 500; ++trial) {
    std::string a, b;
    for (int i = len(rng); i > 0; --i) a.push_back(static_cast<char>(ch(rng)));
    for (int i = len(rng); i > 0; --i) b.push_back(static_cast<char>(ch(rng)));
    ASSERT_EQ(levenshtein(a, b), reference_distance(a, b)) << a << " / " << b;
  }
}

TEST(PhraseSimilarity, Examples) {
  EXPECT_DOUBLE_EQ(phrase_similarity("Ford Motor Company", "Ford Motor Company"),
                   1.0);
  // reference_distance("suburb of Detroit", "Detroit") == 10, longer = 17.
  EXPECT_NEAR(phrase_similarity("suburb of Detroit", "Detroit"), 1.0 - 10.0 / 17.0,
              1e-12);
  EXPECT_NEAR(phrase_similarity("suburb of Detroit", "Detroit"), 0.4118, 5e-5);
  EXPECT_DOUBLE_EQ(phrase_similarity("a", "b"), 0.0);
  EXPECT_DOUBLE_EQ(phrase_similarity("FORD", "ford"), 1.0);
}

TEST(PhraseSimilarity, Properties) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> len(1, 10), ch('a', 'd');
  for (int trial = 0; trial < 300; ++trial) {
    std::string a, b;
    for (int i = len(rng); i > 0; --i) a.push_back(static_cast<char>(ch(rng)));
    for (int i = len(rng); i > 0; --i) b.push_back(static_cast<char>(ch(rng)));
    const double s = phrase_similarity(a, b);
    ASSERT_GE(s, 0.0);
    ASSERT_LE(s, 1.0);
    ASSERT_DOUBLE_EQ(s, phrase_similarity(b, a));
    ASSERT_DOUBLE_EQ(phrase_similarity(a, a), 1.0);
  }
  // Same lengths: one more edit, lower score.
  EXPECT_GT(phrase_similarity("abcd", "abce"), phrase_similarity("abcd", "abfe"));
}

TEST(AssignEntityTypes, PublishedTypes) {
  const auto doc = testing::load_fixture("ford.ann.json");
  EXPECT_EQ(type_phrase("Ford Motor Company", doc.entities), "ORG");
  EXPECT_EQ(type_phrase("suburb of Detroit", doc.entities), "O");
  EXPECT_EQ(type_phrase("American multinational automaker", doc.entities), "O");
  EXPECT_NEAR(phrase_similarity("American multinational automaker", "American"),
              0.25, 1e-12);
  EXPECT_EQ(type_phrase("Henry Ford", doc.entities), "PER");
  EXPECT_EQ(type_phrase("Dearborn", doc.entities), "LOC");
  EXPECT_EQ(type_phrase("June 16, 1903", doc.entities), "O");
  EXPECT_EQ(type_phrase("anything", {}), "O");
}

TEST(AssignEntityTypes, ThresholdAndTies) {
  const std::vector<EntityMention> entities = {
      {"Fordd", "ORG", 0, {0, 1}}, {"Fordx", "PERSON", 0, {1, 2}},
      {"Detroit", "GPE", 0, {2, 3}}};
  // "Ford" is 0.8 from both; the earlier mention wins.
  EXPECT_EQ(type_phrase("Ford", entities, 0.8), "ORG");
  EXPECT_EQ(type_phrase("Ford", entities, 0.81), "O");
  EXPECT_EQ(type_phrase("detroit", entities, 1.0), "LOC");
  EXPECT_EQ(type_phrase("Detroi", entities, 1.0), "O");

  TripleSet triples{{"Ford", "in", "Detroit", Provenance::graph()}};
  const auto types = assign_entity_types(triples, entities);
  EXPECT_EQ(types.at("Ford"), "ORG");
  EXPECT_EQ(types.at("Detroit"), "LOC");
}

TEST(RelationTyper, LookupSidecarAndFallback) {
  RelationTyper empty;
  EXPECT_EQ(type_relation("flibbered", empty), "Other");

  RelationTyper typer;
  std::istringstream table("was founded by\tProduct-Producer\nin\tContent-Container\n");
  typer.load_table(table);
  EXPECT_EQ(type_relation("was founded by", typer), "Product-Producer");
  EXPECT_EQ(typer.label("Ford Motor Company", "in", "Dearborn"),
            "Content-Container");

  std::istringstream sidecar(
      "Ford Motor Company\tin\tJune 16, 1903\tComponent-Whole\n");
  typer.load_sidecar(sidecar);
  EXPECT_EQ(typer.label("Ford Motor Company", "in", "June 16, 1903"),
            "Component-Whole");
  EXPECT_EQ(typer.label("Ford Motor Company", "in", "Dearborn"),
            "Content-Container");
}

TEST(RelationTyper, MalformedRows) {
  RelationTyper typer;
  std::istringstream short_row("a\tin\tb\n");
  EXPECT_THROW(typer.load_sidecar(short_row), SidecarFormatError);
  std::istringstream empty_label("a\tin\tb\t \n");
  EXPECT_THROW(typer.load_sidecar(empty_label), SidecarFormatError);
  std::istringstream table_row("only-one-field\n");
  EXPECT_THROW(typer.load_table(table_row), SidecarFormatError);
}

TEST(EnrichTriples, PublishedRows) {
  const auto doc = testing::load_fixture("ford.ann.json");
  const auto triples = extract_triples(doc);
  const auto report = centrality_report(build_graph(triples));
  const auto rows = enrich_triples(triples, doc, report, RelationTyper{});
  ASSERT_EQ(rows.size(), triples.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].triple, triples[i]);
    EXPECT_EQ(rows[i].relation_label, "Other");
  }
  for (const auto& g : testing::golden_rows()) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) {
      return r.triple.head == g.head && r.triple.relation == g.relation &&
             r.triple.tail == g.tail;
    });
    ASSERT_NE(it, rows.end()) << g.head << " " << g.relation << " " << g.tail;
    EXPECT_EQ(it->head_type, g.type_h);
    EXPECT_EQ(it->tail_type, g.type_t);
    EXPECT_EQ(it->head_degree, g.deg_h);
    EXPECT_EQ(it->tail_degree, g.deg_t);
    EXPECT_NEAR(it->head_betweenness, g.betw_h, 1e-9);
    EXPECT_NEAR(it->tail_betweenness, g.betw_t, 1e-9);
  }
  EXPECT_TRUE(enrich_triples({}, doc, CentralityReport{}, RelationTyper{}).empty());
}

}  // namespace
}  // namespace kgx
