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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Uses only committed fixtures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "kgx/kgx.hpp"
#include "kgx/graph_oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace kgx;

// Thrown by CHECK to abandon the current criterion with a reason.
struct Failure {
  std::string why;
};

#define CHECK(cond, msg)                                        \
  do {                                                          \
    if (!(cond)) {                                              \
      std::ostringstream os_;                                   \
      os_ << msg;                                               \
      throw Failure{os_.str()};                                 \
    }                                                           \
  } while (0)

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

void chunking_golden() {
  const auto doc = testing::load_fixture("ford.ann.json");
  const auto cd = chunk_document(normalize_pos(doc));
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"Ford Motor Company", "ENTITY"},
      {"is", "VERB"},
      {"an American multinational automaker", "ENTITY"},
      {"that", "DET"},
      {"has", "VERB"},
      {"its main headquarters", "ENTITY"},
      {"in", "ADP"},
      {"Dearborn", "ENTITY"},
      {",", "PUNCT"},
      {"Michigan", "ENTITY"},
      {",", "PUNCT"},
      {"a suburb of Detroit", "ENTITY"},
      {".", "PUNCT"},
      {"The company", "ENTITY"},
      {"was founded by", "VERB"},
      {"Henry Ford", "ENTITY"},
      {"and", "CCONJ"},
      {"incorporated on", "VERB"},
      {"June 16, 1903", "ENTITY"},
      {".", "PUNCT"}};
  CHECK(cd.chunks.size() == expected.size(),
        "expected 20 phrases, got " << cd.chunks.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& c = cd.chunks[i];
    CHECK(c.text == expected[i].first && c.label == expected[i].second,
          "phrase " << i << ": got '" << c.text << "'/" << c.label);
    CHECK(c.order == i, "phrase " << i << " numbered " << c.order);
    CHECK(c.sentence == (i < 13 ? 0u : 1u), "phrase " << i << " in wrong sentence");
  }
}

void triple_golden() {
  const auto doc = testing::load_fixture("ford.ann.json");
  const auto got = testing::sorted_keys(extract_triples(doc));
  const auto want = testing::golden_keys();
  CHECK(got.size() == want.size(), "expected 14 triples, got " << got.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(got[i] == want[i], "mismatch: got (" << std::get<0>(got[i]) << ", "
                                                << std::get<1>(got[i]) << ", "
                                                << std::get<2>(got[i]) << ")");
  }
  const testing::TripleKey dated{"Ford Motor Company", "in", "June 16, 1903"};
  CHECK(std::find(got.begin(), got.end(), dated) != got.end(),
        "missing the date link");
}

void centrality_golden() {
  const auto doc = testing::load_fixture("ford.ann.json");
  const auto report = centrality_report(build_graph(extract_triples(doc)));
  const std::map<std::string, std::pair<std::size_t, double>> want = {
      {"Ford Motor Company", {6, 11.0}},
      {"American multinational automaker", {5, 1.75}},
      {"main headquarters", {4, 1.0}},
      {"Dearborn", {3, 0.75}},
      {"Michigan", {3, 0.75}},
      {"suburb of Detroit", {3, 0.75}},
      {"Henry Ford", {2, 0.0}},
      {"June 16, 1903", {2, 0.0}}};
  CHECK(report.nodes.size() == want.size(), "expected 8 nodes, got " << report.nodes.size());
  for (const auto& [node, values] : want) {
    const auto v = report.find(node);
    CHECK(v.has_value(), "missing node " << node);
    CHECK(report.degree[*v] == values.first,
          node << " degree " << report.degree[*v]);
    CHECK(near(report.betweenness[*v], values.second, 1e-9),
          node << " betweenness " << report.betweenness[*v]);
  }
}

void entity_type_golden() {
  const auto doc = testing::load_fixture("ford.ann.json");
  const auto triples = extract_triples(doc);
  const auto rows = enrich_triples(
      triples, doc, centrality_report(build_graph(triples)), RelationTyper{});
  std::size_t matched = 0;
  for (const auto& g : testing::golden_rows()) {
    for (const auto& r : rows) {
      if (r.triple.head != g.head || r.triple.relation != g.relation ||
          r.triple.tail != g.tail) {
        continue;
      }
      ++matched;
      CHECK(r.head_type == g.type_h && r.tail_type == g.type_t,
            g.head << " / " << g.tail << ": got " << r.head_type << "/"
                   << r.tail_type);
    }
  }
  CHECK(matched == 14, "matched " << matched << " of 14 rows");
}

void oracle_equivalence() {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(rng, size(rng), density(rng));
    const auto fast = betweenness_centrality(g);
    const auto slow = brute_force_betweenness(g);
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      CHECK(near(fast[v], slow[v], 1e-9),
            "graph " << trial << " node " << g.nodes()[v] << ": " << fast[v]
                     << " vs " << slow[v]);
    }
  }
}

void chunk_partition() {
  std::mt19937 rng(500);
  std::size_t checked = 0;
  while (checked < 500) {
    const auto doc = normalize_pos(testing::random_document(rng, 1, 16));
    const auto cd = chunk_document(doc);
    for (const auto& sentence : doc.sentences) {
      ++checked;
      std::size_t next = 0;
      for (const auto& c : cd.chunks) {
        if (c.sentence != sentence.index) continue;
        CHECK(!c.span.empty(), "empty chunk");
        CHECK(c.span.start == next, "gap or overlap at token " << next);
        next = c.span.end;
      }
      CHECK(next == sentence.tokens.size(), "tokens left uncovered");
    }
  }
}

void cleanup_postconditions() {
  std::mt19937 rng(501);
  const StopList stop_list;
  for (int trial = 0; trial < 300; ++trial) {
    const auto doc = testing::random_document(rng);
    const auto triples = extract_triples(doc);
    for (const auto& t : triples) {
      CHECK(!stop_list.contains(t.head), "stop-word head '" << t.head << "'");
      for (const auto* phrase : {&t.head, &t.tail}) {
        const auto words = split_words(*phrase);
        CHECK(!words.empty() && !is_strippable_determiner(words.front()),
              "leading article in '" << *phrase << "'");
      }
    }
    CHECK(strip_articles(triples).triples == triples, "strip not idempotent");
    CHECK(filter_triples(triples, stop_list) == triples, "filter not idempotent");
  }
}

void expansion_properties() {
  std::mt19937 rng(502);
  const std::vector<std::string> names = {"a", "b", "c", "d", "e"};
  const std::vector<std::string> rels = {"in", "at", "on", "owns", "sat on",
                                         "was founded by"};
  std::uniform_int_distribution<std::size_t> pick_n(0, names.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_r(0, rels.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    TripleSet input;
    for (int i = 0; i < 8; ++i) {
      const auto h = names[pick_n(rng)], t = names[pick_n(rng)];
      if (h != t) input.insert({h, rels[pick_r(rng)], t, Provenance::sentence(0)});
    }
    std::set<std::pair<std::string, std::string>> direct;
    for (const auto& t : input) direct.emplace(t.head, t.tail);
    const auto out = expand_graph(input);
    CHECK(out.size() >= input.size(), "not a superset");
    for (const auto& t : input) CHECK(out.contains(t.head, t.relation, t.tail), "input triple dropped");
    for (std::size_t i = input.size(); i < out.size(); ++i) {
      CHECK(out[i].relation == "in", "added relation '" << out[i].relation << "'");
      CHECK(!direct.contains({out[i].head, out[i].tail}),
            "added link where a direct edge exists");
    }
  }
}

void whole_word_locative() {
  const auto preps = default_expansion_prepositions();
  CHECK(!is_locative("was founded by", preps), "'was founded by' is locative");
  CHECK(!is_locative("joined", preps), "'joined' is locative");
  CHECK(!is_locative("atop", preps), "'atop' is locative");
  CHECK(is_locative("incorporated on", preps), "'incorporated on' not locative");
  TripleSet founded{{"x", "was founded by", "y", Provenance::sentence(0)},
                    {"y", "was founded by", "z", Provenance::sentence(0)}};
  CHECK(expand_graph(founded) == founded, "expansion used a non-locative edge");
}

void end_to_end_determinism() {
  auto render = [] {
    std::string all;
    for (const auto* f : {"ford.ann.json", "ford_eval.ann.json",
                          "ford_listing.ann.json"}) {
      const auto doc = testing::load_fixture(f);
      const auto r = process_document(doc, ExtractOptions{}, RelationTyper{},
                                      kDefaultSimilarityThreshold);
      all += chunks_to_tsv(r.extraction.chunks) +
             triples_to_tsv(r.extraction.triples()) +
             enriched_to_tsv(r.enriched) + metrics_to_tsv(r.centrality) +
             export_dot(r.enriched) + export_graphml(r.enriched) +
             export_json(r.enriched);
    }
    return all;
  };
  const auto first = render();
  for (int i = 0; i < 5; ++i) CHECK(render() == first, "run " << i << " differs");
}

void standalone_fixtures() {
  // The committed interchange files are all the primary side needs.
  for (const auto* f : {"ford.ann.json", "ford_eval.ann.json",
                        "ford_listing.ann.json"}) {
    const auto doc = testing::load_fixture(f);
    CHECK(!doc.sentences.empty(), f << " has no sentences");
    CHECK(!extract_triples(doc).empty(), f << " yields no triples");
  }
}

struct Criterion {
  std::string name;
  std::function<void()> run;
  double budget_ms;  // 0 = no time limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"chunking golden: 20 phrases with text and type", chunking_golden, 1000},
      {"triple golden: 14 triples incl. date link", triple_golden, 1000},
      {"centrality golden: degree and betweenness of 8 nodes", centrality_golden, 0},
      {"entity-type golden: head/tail types of 14 rows", entity_type_golden, 0},
      {"oracle equivalence: 100 random graphs of 2-8 nodes", oracle_equivalence,
       10000},
      {"invariant: chunk partition over 500 random sentences", chunk_partition, 0},
      {"invariant: filter/strip postconditions and idempotence",
       cleanup_postconditions, 0},
      {"invariant: expansion superset, no direct edge, 'in' label",
       expansion_properties, 0},
      {"invariant: whole-word locative test", whole_word_locative, 0},
      {"invariant: byte-identical repeated runs", end_to_end_determinism, 0},
      {"runs from committed fixtures alone", standalone_fixtures, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.run();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (why.empty() && c.budget_ms > 0 && ms > c.budget_ms) {
      why = "took " + std::to_string(ms) + " ms";
    }
    std::printf("%s  %s (%.1f ms)%s%s\n", why.empty() ? "PASS" : "FAIL",
                c.name.c_str(), ms, why.empty() ? "" : ": ", why.c_str());
    if (!why.empty()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
