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

// Triple enrichment: five-way entity types for heads and tails (by edit
// distance against the document's NER mentions), a structured relation
// label, and node centralities.

#ifndef KGX_ENRICHER_HPP_
#define KGX_ENRICHER_HPP_

#include <cstddef>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "kgx/document.hpp"
#include "kgx/error.hpp"
#include "kgx/graph.hpp"
#include "kgx/similarity.hpp"
#include "kgx/strings.hpp"
#include "kgx/triples.hpp"

namespace kgx {

inline constexpr double kDefaultSimilarityThreshold = 0.8;

// PER / ORG / LOC / MISC / O.
inline std::string map_entity_label(std::string_view label) {
  if (label == "PERSON") return "PER";
  if (label == "ORG") return "ORG";
  if (label == "GPE" || label == "LOC" || label == "FAC") return "LOC";
  if (label == "NORP" || label == "PRODUCT" || label == "EVENT" ||
      label == "WORK_OF_ART" || label == "LANGUAGE" || label == "LAW") {
    return "MISC";
  }
  return "O";
}

inline bool is_five_type_label(std::string_view label) {
  return label == "PER" || label == "ORG" || label == "LOC" ||
         label == "MISC" || label == "O";
}

// Label of the most similar mention if it reaches `threshold`, else O.
// Ties go to the earliest mention.
inline std::string type_phrase(std::string_view phrase,
                               std::span<const EntityMention> entities,
                               double threshold = kDefaultSimilarityThreshold) {
  const EntityMention* best = nullptr;
  double best_score = -1.0;
  for (const auto& e : entities) {
    const double score = phrase_similarity(phrase, e.text);
    if (score > best_score) {
      best_score = score;
      best = &e;
    }
  }
  if (best == nullptr || best_score < threshold) return "O";
  return map_entity_label(best->label);
}

inline std::map<std::string, std::string> assign_entity_types(
    const TripleSet& triples, std::span<const EntityMention> entities,
    double threshold = kDefaultSimilarityThreshold) {
  std::map<std::string, std::string> types;
  for (const auto& t : triples) {
    for (const auto* phrase : {&t.head, &t.tail}) {
      if (!types.contains(*phrase)) {
        types.emplace(*phrase, type_phrase(*phrase, entities, threshold));
      }
    }
  }
  return types;
}

// Maps relation phrases to structured relation labels. Exact-match lookup
// table with an "Other" fallback; rows from an external classifier's
// sidecar (keyed on the whole triple) take precedence.
class RelationTyper {
 public:
  static constexpr std::string_view kFallback = "Other";

  void add_phrase(std::string phrase, std::string label) {
    table_[std::move(phrase)] = std::move(label);
  }

  void add_triple(std::string head, std::string relation, std::string tail,
                  std::string label) {
    sidecar_[{std::move(head), std::move(relation), std::move(tail)}] =
        std::move(label);
  }

  std::string label(std::string_view head, std::string_view relation,
                    std::string_view tail) const {
    if (!sidecar_.empty()) {
      auto it = sidecar_.find(std::make_tuple(
          std::string(head), std::string(relation), std::string(tail)));
      if (it != sidecar_.end()) return it->second;
    }
    auto it = table_.find(relation);
    return it == table_.end() ? std::string(kFallback) : it->second;
  }

  // `relation_phrase<TAB>label` per line.
  void load_table(std::istream& in, const std::string& source = "table") {
    read_rows(in, source, 2, [this](const auto& f) {
      add_phrase(std::string(f[0]), std::string(f[1]));
    });
  }

  // `head<TAB>relation<TAB>tail<TAB>label` per line.
  void load_sidecar(std::istream& in, const std::string& source = "sidecar") {
    read_rows(in, source, 4, [this](const auto& f) {
      add_triple(std::string(f[0]), std::string(f[1]), std::string(f[2]),
                 std::string(f[3]));
    });
  }

  static RelationTyper from_files(const std::string& table_path,
                                  const std::string& sidecar_path) {
    RelationTyper typer;
    if (!table_path.empty()) {
      std::ifstream in(table_path);
      if (!in) throw IoError("cannot read relation table " + table_path);
      typer.load_table(in, table_path);
    }
    if (!sidecar_path.empty()) {
      std::ifstream in(sidecar_path);
      if (!in) throw IoError("cannot read sidecar " + sidecar_path);
      typer.load_sidecar(in, sidecar_path);
    }
    return typer;
  }

 private:
  template <typename F>
  static void read_rows(std::istream& in, const std::string& source,
                        std::size_t columns, F&& row) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto fields = split_fields(line, '\t');
      bool ok = fields.size() == columns;
      for (std::size_t i = 0; ok && i < fields.size(); ++i) {
        ok = !trim(fields[i]).empty();
      }
      if (!ok) {
        throw SidecarFormatError(source + ":" + std::to_string(lineno) +
                                 ": expected " + std::to_string(columns) +
                                 " non-empty tab-separated fields");
      }
      row(fields);
    }
  }

  std::map<std::string, std::string, std::less<>> table_;
  std::map<std::tuple<std::string, std::string, std::string>, std::string>
      sidecar_;
};

inline std::string type_relation(std::string_view relation,
                                 const RelationTyper& typer) {
  return typer.label({}, relation, {});
}

struct EnrichedTriple {
  Triple triple;
  std::string relation_label = std::string(RelationTyper::kFallback);
  std::string head_type = "O";
  std::string tail_type = "O";
  std::size_t head_degree = 0;
  std::size_t tail_degree = 0;
  double head_betweenness = 0.0;
  double tail_betweenness = 0.0;

  bool operator==(const EnrichedTriple&) const = default;
};

inline std::vector<EnrichedTriple> enrich_triples(
    const TripleSet& triples, const AnnotatedDocument& doc,
    const CentralityReport& report, const RelationTyper& typer,
    double threshold = kDefaultSimilarityThreshold) {
  const auto types = assign_entity_types(triples, doc.entities, threshold);
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < report.nodes.size(); ++i) {
    index.emplace(report.nodes[i], i);
  }
  auto node = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error("no centrality for node '" + name + "'");
    return it->second;
  };
  std::vector<EnrichedTriple> out;
  out.reserve(triples.size());
  for (const auto& t : triples) {
    const auto h = node(t.head);
    const auto v = node(t.tail);
    out.push_back({t, typer.label(t.head, t.relation, t.tail),
                   types.at(t.head), types.at(t.tail), report.degree[h],
                   report.degree[v], report.betweenness[h],
                   report.betweenness[v]});
  }
  return out;
}

}  // namespace kgx

#endif  // KGX_ENRICHER_HPP_
