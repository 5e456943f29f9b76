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

// Interchange JSON reader/writer. One document per file:
//
//   {"doc_id": str, "text": str,
//    "sentences": [{"tokens": [{"i", "text", "ent_type", "iob", "pos",
//                               "tag", "start", "end", "dep", "head"}]}],
//    "entities": [{"text", "label", "sent", "start", "end"}],
//    "coref": [{"main", "mentions": [{"sent", "start", "end"}]}]}
//
// Character offsets are code-point indices with `end` inclusive; token
// spans in `entities` and `coref` are half-open. Unknown keys are errors.

#ifndef KGX_INTERCHANGE_HPP_
#define KGX_INTERCHANGE_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kgx/document.hpp"
#include "kgx/error.hpp"

namespace kgx {

namespace detail {

using nlohmann::json;

inline void expect_keys(const json& j, const std::string& path,
                        std::initializer_list<std::string_view> keys) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) throw SchemaError(path + "." + key, "unknown key");
  }
  for (auto k : keys) {
    if (!j.contains(k)) {
      throw SchemaError(path + "." + std::string(k), "missing field");
    }
  }
}

inline std::string get_string(const json& j, const char* key,
                              const std::string& path) {
  const auto& v = j.at(key);
  if (!v.is_string()) {
    throw SchemaError(path + "." + key, "expected a string");
  }
  return v.get<std::string>();
}

inline std::size_t get_index(const json& j, const char* key,
                             const std::string& path) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw SchemaError(path + "." + key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline const json& get_array(const json& j, const char* key,
                             const std::string& path) {
  const auto& v = j.at(key);
  if (!v.is_array()) throw SchemaError(path + "." + key, "expected an array");
  return v;
}

inline Iob parse_iob(const std::string& s, const std::string& path) {
  if (s == "B") return Iob::kBegin;
  if (s == "I") return Iob::kInside;
  if (s == "O") return Iob::kOutside;
  throw SchemaError(path, "iob must be one of B, I, O (got '" + s + "')");
}

inline std::string at(const std::string& path, const char* key,
                      std::size_t i) {
  return path + "." + key + "[" + std::to_string(i) + "]";
}

}  // namespace detail

// Parses and validates one interchange document.
inline AnnotatedDocument parse_annotation(std::string_view content) {
  using detail::json;
  json root;
  try {
    root = json::parse(content.begin(), content.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  const std::string p = "$";
  detail::expect_keys(root, p,
                      {"doc_id", "text", "sentences", "entities", "coref"});

  AnnotatedDocument doc;
  doc.doc_id = detail::get_string(root, "doc_id", p);
  doc.text = detail::get_string(root, "text", p);

  const auto& sentences = detail::get_array(root, "sentences", p);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const auto sp = detail::at(p, "sentences", s);
    detail::expect_keys(sentences[s], sp, {"tokens"});
    Sentence sentence;
    sentence.index = s;
    const auto& tokens = detail::get_array(sentences[s], "tokens", sp);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      const auto tp = detail::at(sp, "tokens", t);
      const auto& jt = tokens[t];
      detail::expect_keys(jt, tp,
                          {"i", "text", "ent_type", "iob", "pos", "tag",
                           "start", "end", "dep", "head"});
      Token tok;
      tok.index = detail::get_index(jt, "i", tp);
      tok.text = detail::get_string(jt, "text", tp);
      tok.ent_type = detail::get_string(jt, "ent_type", tp);
      tok.iob = detail::parse_iob(detail::get_string(jt, "iob", tp), tp + ".iob");
      tok.pos = detail::get_string(jt, "pos", tp);
      tok.tag = detail::get_string(jt, "tag", tp);
      tok.start = detail::get_index(jt, "start", tp);
      tok.end = detail::get_index(jt, "end", tp);
      tok.dep = detail::get_string(jt, "dep", tp);
      tok.head = detail::get_index(jt, "head", tp);
      sentence.tokens.push_back(std::move(tok));
    }
    doc.sentences.push_back(std::move(sentence));
  }

  const auto& entities = detail::get_array(root, "entities", p);
  for (std::size_t e = 0; e < entities.size(); ++e) {
    const auto ep = detail::at(p, "entities", e);
    detail::expect_keys(entities[e], ep,
                        {"text", "label", "sent", "start", "end"});
    EntityMention ent;
    ent.text = detail::get_string(entities[e], "text", ep);
    ent.label = detail::get_string(entities[e], "label", ep);
    ent.sentence = detail::get_index(entities[e], "sent", ep);
    ent.span.start = detail::get_index(entities[e], "start", ep);
    ent.span.end = detail::get_index(entities[e], "end", ep);
    doc.entities.push_back(std::move(ent));
  }

  const auto& coref = detail::get_array(root, "coref", p);
  for (std::size_t c = 0; c < coref.size(); ++c) {
    const auto cp = detail::at(p, "coref", c);
    detail::expect_keys(coref[c], cp, {"main", "mentions"});
    CorefCluster cluster;
    cluster.main = detail::get_index(coref[c], "main", cp);
    const auto& mentions = detail::get_array(coref[c], "mentions", cp);
    for (std::size_t m = 0; m < mentions.size(); ++m) {
      const auto mp = detail::at(cp, "mentions", m);
      detail::expect_keys(mentions[m], mp, {"sent", "start", "end"});
      CorefMention mention;
      mention.sentence = detail::get_index(mentions[m], "sent", mp);
      mention.span.start = detail::get_index(mentions[m], "start", mp);
      mention.span.end = detail::get_index(mentions[m], "end", mp);
      cluster.mentions.push_back(mention);
    }
    doc.coref.push_back(std::move(cluster));
  }

  validate(doc);
  return doc;
}

// Canonical serialization (fixed key order, compact). parse_annotation
// inverts it for every valid document.
inline std::string serialize_annotation(const AnnotatedDocument& doc,
                                        int indent = -1) {
  using ojson = nlohmann::ordered_json;
  ojson root;
  root["doc_id"] = doc.doc_id;
  root["text"] = doc.text;
  root["sentences"] = ojson::array();
  for (const auto& sentence : doc.sentences) {
    ojson tokens = ojson::array();
    for (const auto& t : sentence.tokens) {
      tokens.push_back({{"i", t.index},
                        {"text", t.text},
                        {"ent_type", t.ent_type},
                        {"iob", std::string(to_string(t.iob))},
                        {"pos", t.pos},
                        {"tag", t.tag},
                        {"start", t.start},
                        {"end", t.end},
                        {"dep", t.dep},
                        {"head", t.head}});
    }
    root["sentences"].push_back({{"tokens", std::move(tokens)}});
  }
  root["entities"] = ojson::array();
  for (const auto& e : doc.entities) {
    root["entities"].push_back({{"text", e.text},
                                {"label", e.label},
                                {"sent", e.sentence},
                                {"start", e.span.start},
                                {"end", e.span.end}});
  }
  root["coref"] = ojson::array();
  for (const auto& c : doc.coref) {
    ojson mentions = ojson::array();
    for (const auto& m : c.mentions) {
      mentions.push_back(
          {{"sent", m.sentence}, {"start", m.span.start}, {"end", m.span.end}});
    }
    root["coref"].push_back({{"main", c.main}, {"mentions", mentions}});
  }
  return root.dump(indent);
}

}  // namespace kgx

#endif  // KGX_INTERCHANGE_HPP_
