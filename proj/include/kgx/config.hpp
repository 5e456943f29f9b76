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

// Pipeline configuration: a flat `key=value` file. Blank lines and lines
// starting with '#' are ignored; unknown keys are rejected.
//
//   stopwords_path=           one lowercase entry per line; empty = built-in
//   similarity_threshold=0.8  in (0, 1]
//   relation_table_path=      TSV relation_phrase<TAB>label; empty = none
//   expansion_prepositions=in,at,on
//   literal_leftright_mapping=false
//   adv_in_verb_chunks=false

#ifndef KGX_CONFIG_HPP_
#define KGX_CONFIG_HPP_

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kgx/enricher.hpp"
#include "kgx/error.hpp"
#include "kgx/stopwords.hpp"
#include "kgx/strings.hpp"
#include "kgx/triples.hpp"

namespace kgx {

struct PipelineConfig {
  std::optional<std::string> stopwords_path;
  double similarity_threshold = kDefaultSimilarityThreshold;
  std::optional<std::string> relation_table_path;
  std::vector<std::string> expansion_prepositions =
      default_expansion_prepositions();
  bool literal_leftright_mapping = false;
  bool adv_in_verb_chunks = false;

  bool operator==(const PipelineConfig&) const = default;
};

inline void validate(const PipelineConfig& c) {
  if (!(c.similarity_threshold > 0.0 && c.similarity_threshold <= 1.0)) {
    throw ConfigError("similarity_threshold must be in (0, 1], got " +
                      format_real(c.similarity_threshold));
  }
  if (c.expansion_prepositions.empty()) {
    throw ConfigError("expansion_prepositions must not be empty");
  }
  for (const auto& p : c.expansion_prepositions) {
    const bool word = !p.empty() && std::all_of(p.begin(), p.end(), [](char ch) {
      return ch >= 'a' && ch <= 'z';
    });
    if (!word) {
      throw ConfigError("expansion_prepositions: '" + p +
                        "' is not a lowercase word");
    }
  }
}

namespace detail {

inline bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" +
                    std::string(v) + "'");
}

inline std::string shortest_real(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

inline PipelineConfig parse_config(std::string_view content) {
  PipelineConfig c;
  std::size_t lineno = 0;
  for (auto line : split_fields(content, '\n')) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    auto optional_path = [&] {
      return value.empty() ? std::nullopt
                           : std::optional<std::string>(std::string(value));
    };
    if (key == "stopwords_path") {
      c.stopwords_path = optional_path();
    } else if (key == "relation_table_path") {
      c.relation_table_path = optional_path();
    } else if (key == "similarity_threshold") {
      try {
        c.similarity_threshold = parse_real(value);
      } catch (const FormatError&) {
        throw ConfigError("similarity_threshold: not a number: '" +
                          std::string(value) + "'");
      }
    } else if (key == "expansion_prepositions") {
      c.expansion_prepositions.clear();
      for (auto p : split_fields(value, ',')) {
        c.expansion_prepositions.emplace_back(trim(p));
      }
    } else if (key == "literal_leftright_mapping") {
      c.literal_leftright_mapping = detail::parse_bool(key, value);
    } else if (key == "adv_in_verb_chunks") {
      c.adv_in_verb_chunks = detail::parse_bool(key, value);
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" +
                        std::string(key) + "'");
    }
  }
  validate(c);
  return c;
}

// Every key, in declaration order.
inline std::string serialize_config(const PipelineConfig& c) {
  std::ostringstream os;
  os << "stopwords_path=" << c.stopwords_path.value_or("") << '\n'
     << "similarity_threshold=" << detail::shortest_real(c.similarity_threshold)
     << '\n'
     << "relation_table_path=" << c.relation_table_path.value_or("") << '\n'
     << "expansion_prepositions=";
  for (std::size_t i = 0; i < c.expansion_prepositions.size(); ++i) {
    os << (i ? "," : "") << c.expansion_prepositions[i];
  }
  os << '\n'
     << "literal_leftright_mapping="
     << (c.literal_leftright_mapping ? "true" : "false") << '\n'
     << "adv_in_verb_chunks=" << (c.adv_in_verb_chunks ? "true" : "false")
     << '\n';
  return os.str();
}

inline PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

// Explicit path, else $KGX_CONFIG, else defaults.
inline PipelineConfig resolve_config(const std::string& explicit_path) {
  if (!explicit_path.empty()) return load_config_file(explicit_path);
  if (const char* env = std::getenv("KGX_CONFIG"); env && *env) {
    return load_config_file(env);
  }
  return PipelineConfig{};
}

inline ExtractOptions extract_options(const PipelineConfig& c) {
  ExtractOptions o;
  o.chunker.adv_in_verb_chunks = c.adv_in_verb_chunks;
  o.mapper.literal_leftright_mapping = c.literal_leftright_mapping;
  o.expansion_prepositions = c.expansion_prepositions;
  if (c.stopwords_path) o.stop_list = StopList::from_file(*c.stopwords_path);
  return o;
}

}  // namespace kgx

#endif  // KGX_CONFIG_HPP_
