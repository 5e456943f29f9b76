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

// Triple mapping and cleanup.
//
// Sentence level: relations are VERB chunks and ADP singletons. For each
// relation, heads are the ENTITY chunks between the previous relation (or
// sentence start) and it, tails the ENTITY chunks up to the next relation
// (or sentence end); every head/tail pair yields a triple.
//
// Document level: over the directed graph of those triples, a node pair
// (h, t) with no direct edge gains (h, "in", t) when some shortest path
// h ~> t ends in an edge whose relation contains in/at/on as a word.

#ifndef KGX_TRIPLES_HPP_
#define KGX_TRIPLES_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "kgx/chunker.hpp"
#include "kgx/coref.hpp"
#include "kgx/document.hpp"
#include "kgx/error.hpp"
#include "kgx/stopwords.hpp"
#include "kgx/strings.hpp"

namespace kgx {

// Where a triple came from: a sentence, or graph expansion.
class Provenance {
 public:
  static Provenance sentence(std::size_t index) { return Provenance(index); }
  static Provenance graph() { return Provenance(std::nullopt); }

  bool is_graph() const { return !sentence_; }
  std::size_t sentence_index() const { return sentence_.value(); }

  // "sentence:<n>" or "graph".
  std::string str() const {
    return sentence_ ? "sentence:" + std::to_string(*sentence_) : "graph";
  }

  static Provenance parse(std::string_view s) {
    if (s == "graph") return graph();
    constexpr std::string_view kPrefix = "sentence:";
    if (s.starts_with(kPrefix)) {
      const auto n = parse_integer(s.substr(kPrefix.size()));
      if (n >= 0) return sentence(static_cast<std::size_t>(n));
    }
    throw FormatError("bad provenance '" + std::string(s) + "'");
  }

  bool operator==(const Provenance&) const = default;

 private:
  explicit Provenance(std::optional<std::size_t> s) : sentence_(s) {}
  std::optional<std::size_t> sentence_;
};

struct Triple {
  std::string head;
  std::string relation;
  std::string tail;
  Provenance provenance = Provenance::graph();

  bool operator==(const Triple&) const = default;
};

// Insertion-ordered triples, unique on (head, relation, tail).
class TripleSet {
 public:
  using const_iterator = std::vector<Triple>::const_iterator;

  TripleSet() = default;
  TripleSet(std::initializer_list<Triple> triples) {
    for (const auto& t : triples) insert(t);
  }

  // Returns false (and keeps the earlier triple) on a duplicate key.
  bool insert(Triple t) {
    if (!keys_.emplace(t.head, t.relation, t.tail).second) return false;
    triples_.push_back(std::move(t));
    return true;
  }

  bool contains(std::string_view head, std::string_view relation,
                std::string_view tail) const {
    return keys_.contains(std::make_tuple(std::string(head),
                                          std::string(relation),
                                          std::string(tail)));
  }

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const Triple& operator[](std::size_t i) const { return triples_[i]; }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }
  const std::vector<Triple>& triples() const { return triples_; }

  bool operator==(const TripleSet& other) const {
    return triples_ == other.triples_;
  }

 private:
  std::vector<Triple> triples_;
  std::set<std::tuple<std::string, std::string, std::string>> keys_;
};

struct MapperOptions {
  // Take every ENTITY chunk left/right of a relation instead of only those
  // in the neighbouring segments.
  bool literal_leftright_mapping = false;
};

namespace detail {

inline bool is_relation(const Chunk& c) {
  return c.is_verb() || (c.kind == ChunkKind::kPassThrough && c.label == "ADP");
}

// Adds (h, r, t) if all parts are non-empty after trimming and h != t.
inline void add_triple(TripleSet& out, std::string_view head,
                       std::string_view relation, std::string_view tail,
                       Provenance provenance) {
  head = trim(head);
  relation = trim(relation);
  tail = trim(tail);
  if (head.empty() || relation.empty() || tail.empty() || head == tail) return;
  out.insert({std::string(head), std::string(relation), std::string(tail),
              provenance});
}

}  // namespace detail

inline TripleSet get_triples(const ChunkedDocument& cd,
                             const MapperOptions& options = {}) {
  TripleSet out;
  const auto& chunks = cd.chunks;
  for (std::size_t first = 0; first < chunks.size();) {
    std::size_t last = first;
    while (last < chunks.size() &&
           chunks[last].sentence == chunks[first].sentence) {
      ++last;
    }
    std::vector<std::size_t> relations;
    for (auto c = first; c < last; ++c) {
      if (detail::is_relation(chunks[c])) relations.push_back(c);
    }
    for (std::size_t r = 0; r < relations.size(); ++r) {
      std::size_t left = first, right = last;
      if (!options.literal_leftright_mapping) {
        if (r > 0) left = relations[r - 1] + 1;
        if (r + 1 < relations.size()) right = relations[r + 1];
      }
      const auto& rel = chunks[relations[r]];
      for (auto h = left; h < relations[r]; ++h) {
        if (!chunks[h].is_entity()) continue;
        for (auto t = relations[r] + 1; t < right; ++t) {
          if (!chunks[t].is_entity()) continue;
          detail::add_triple(out, chunks[h].text, rel.text, chunks[t].text,
                             Provenance::sentence(rel.sentence));
        }
      }
    }
    first = last;
  }
  return out;
}

// True when a word of `relation` (split at non-alphanumerics,
// case-folded) is one of `prepositions`. "founded" never matches "on".
inline bool is_locative(std::string_view relation,
                        const std::vector<std::string>& prepositions) {
  std::string word;
  auto flush = [&] {
    const bool hit = !word.empty() && std::find(prepositions.begin(),
                                                prepositions.end(),
                                                casefold(word)) !=
                                          prepositions.end();
    word.clear();
    return hit;
  };
  for (char c : relation) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      word.push_back(c);
    } else if (flush()) {
      return true;
    }
  }
  return flush();
}

inline const std::vector<std::string>& default_expansion_prepositions() {
  static const std::vector<std::string> kDefault = {"in", "at", "on"};
  return kDefault;
}

inline TripleSet expand_graph(
    const TripleSet& triples,
    const std::vector<std::string>& prepositions =
        default_expansion_prepositions()) {
  std::map<std::string, std::size_t> id;
  std::vector<const std::string*> name;
  auto node = [&](const std::string& s) {
    auto [it, inserted] = id.emplace(s, name.size());
    if (inserted) name.push_back(&it->first);
    return it->second;
  };
  struct Edge {
    std::size_t to;
    bool locative;
  };
  std::vector<std::vector<Edge>> out_edges;
  std::vector<std::vector<Edge>> in_edges;  // `to` holds the source
  for (const auto& t : triples) {
    const auto h = node(t.head);
    const auto v = node(t.tail);
    out_edges.resize(name.size());
    in_edges.resize(name.size());
    const bool loc = is_locative(t.relation, prepositions);
    out_edges[h].push_back({v, loc});
    in_edges[v].push_back({h, loc});
  }

  const auto n = name.size();
  std::vector<std::pair<std::string_view, std::string_view>> additions;
  std::vector<std::size_t> dist(n);
  constexpr auto kUnreached = static_cast<std::size_t>(-1);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[s] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const auto u = frontier.front();
      frontier.pop();
      for (const auto& e : out_edges[u]) {
        if (dist[e.to] == kUnreached) {
          dist[e.to] = dist[u] + 1;
          frontier.push(e.to);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      // Distance >= 2: reachable, distinct, and no direct edge.
      if (dist[t] == kUnreached || dist[t] < 2) continue;
      const bool qualifies = std::any_of(
          in_edges[t].begin(), in_edges[t].end(), [&](const Edge& e) {
            return e.locative && dist[e.to] + 1 == dist[t];
          });
      if (qualifies) additions.emplace_back(*name[s], *name[t]);
    }
  }
  std::sort(additions.begin(), additions.end());

  TripleSet out = triples;
  for (const auto& [h, t] : additions) {
    out.insert({std::string(h), "in", std::string(t), Provenance::graph()});
  }
  return out;
}

// Drops triples whose head is a stop word, day or month name. Tails are
// not checked.
inline TripleSet filter_triples(const TripleSet& triples,
                                const StopList& stop_list = StopList()) {
  TripleSet out;
  for (const auto& t : triples) {
    if (!stop_list.contains(t.head)) out.insert(t);
  }
  return out;
}

inline bool is_strippable_determiner(std::string_view word) {
  static const std::set<std::string, std::less<>> kLeading = {
      "a",   "an",   "the",  "its",  "their", "his",   "her",
      "my",  "our",  "your", "this", "that",  "these", "those"};
  return kLeading.contains(casefold(word));
}

// Removes leading articles, possessives and demonstratives, repeatedly.
// Returns an empty view when nothing is left.
inline std::string_view strip_leading_determiners(std::string_view phrase) {
  phrase = trim(phrase);
  for (;;) {
    const auto space = phrase.find_first_of(kWhitespace);
    const auto word = phrase.substr(0, space);
    if (word.empty() || !is_strippable_determiner(word)) return phrase;
    phrase = space == std::string_view::npos
                 ? std::string_view()
                 : trim(phrase.substr(space));
  }
}

struct StripResult {
  TripleSet triples;
  // Triples dropped because stripping emptied the head or tail, or made
  // them equal.
  std::size_t degenerate = 0;
};

inline StripResult strip_articles(const TripleSet& triples) {
  StripResult result;
  for (const auto& t : triples) {
    const auto head = strip_leading_determiners(t.head);
    const auto tail = strip_leading_determiners(t.tail);
    if (head.empty() || tail.empty() || head == tail) {
      ++result.degenerate;
      continue;
    }
    result.triples.insert(
        {std::string(head), t.relation, std::string(tail), t.provenance});
  }
  return result;
}

struct ExtractOptions {
  ChunkerOptions chunker;
  MapperOptions mapper;
  std::vector<std::string> expansion_prepositions =
      default_expansion_prepositions();
  StopList stop_list;
};

// Every intermediate of one extraction run.
struct Extraction {
  ChunkedDocument chunks;  // after coreference substitution
  TripleSet sentence_triples;
  TripleSet expanded;
  TripleSet filtered;
  StripResult stripped;
  TripleSet final;

  const TripleSet& triples() const { return final; }
};

// chunk -> coref -> map -> expand -> filter -> strip. Stripping can expose
// a stop word ("that it" -> "it"), so the head filter runs once more on
// the stripped triples.
inline Extraction run_extraction(const AnnotatedDocument& doc,
                                 const ExtractOptions& options = {}) {
  Extraction x;
  x.chunks =
      resolve_coreferences(chunk_document(normalize_pos(doc), options.chunker));
  x.sentence_triples = get_triples(x.chunks, options.mapper);
  x.expanded = expand_graph(x.sentence_triples, options.expansion_prepositions);
  x.filtered = filter_triples(x.expanded, options.stop_list);
  x.stripped = strip_articles(x.filtered);
  x.final = filter_triples(x.stripped.triples, options.stop_list);
  return x;
}

inline TripleSet extract_triples(const AnnotatedDocument& doc,
                                 const ExtractOptions& options = {}) {
  return run_extraction(doc, options).final;
}

}  // namespace kgx

#endif  // KGX_TRIPLES_HPP_
