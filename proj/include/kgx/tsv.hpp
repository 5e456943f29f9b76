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

// Tab-separated and JSON-lines forms of triples, enriched triples and node
// metrics. Every table starts with a header row. Tabs and line breaks
// inside phrases are written as spaces.

#ifndef KGX_TSV_HPP_
#define KGX_TSV_HPP_

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgx/enricher.hpp"
#include "kgx/error.hpp"
#include "kgx/graph.hpp"
#include "kgx/strings.hpp"
#include "kgx/triples.hpp"

namespace kgx {

inline constexpr std::string_view kTripleHeader =
    "head\trelation\ttail\tprovenance";
inline constexpr std::string_view kEnrichedHeader =
    "head\trelation\ttail\trelation_label\ttype_h\ttype_t\tdeg_h\tdeg_t\t"
    "betw_h\tbetw_t";
inline constexpr std::string_view kMetricsHeader = "node\tdegree\tbetweenness";

namespace detail {

inline std::string field(std::string_view s) {
  std::string out(s);
  std::replace_if(
      out.begin(), out.end(),
      [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return out;
}

// Data rows of a table, after checking its header and column count.
inline std::vector<std::vector<std::string_view>> read_table(
    std::string_view content, std::string_view header, std::size_t columns) {
  std::vector<std::vector<std::string_view>> rows;
  std::size_t lineno = 0;
  for (auto line : split_fields(content, '\n')) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (lineno == 1) {
      if (line != header) {
        throw FormatError("line 1: expected header '" + std::string(header) +
                          "'");
      }
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_fields(line, '\t');
    if (fields.size() != columns) {
      throw FormatError("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(columns) + " fields, got " +
                        std::to_string(fields.size()));
    }
    rows.push_back(std::move(fields));
  }
  if (lineno == 0) throw FormatError("empty table, header missing");
  return rows;
}

}  // namespace detail

inline std::string triples_to_tsv(const TripleSet& triples) {
  std::ostringstream os;
  os << kTripleHeader << '\n';
  for (const auto& t : triples) {
    os << detail::field(t.head) << '\t' << detail::field(t.relation) << '\t'
       << detail::field(t.tail) << '\t' << t.provenance.str() << '\n';
  }
  return os.str();
}

inline std::string triples_to_jsonl(const TripleSet& triples) {
  std::string out;
  for (const auto& t : triples) {
    nlohmann::ordered_json j = {{"head", t.head},
                                {"relation", t.relation},
                                {"tail", t.tail},
                                {"provenance", t.provenance.str()}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

inline TripleSet parse_triples_tsv(std::string_view content) {
  TripleSet out;
  for (const auto& f : detail::read_table(content, kTripleHeader, 4)) {
    out.insert({std::string(f[0]), std::string(f[1]), std::string(f[2]),
                Provenance::parse(f[3])});
  }
  return out;
}

inline std::string enriched_to_tsv(const std::vector<EnrichedTriple>& rows) {
  std::ostringstream os;
  os << kEnrichedHeader << '\n';
  for (const auto& r : rows) {
    os << detail::field(r.triple.head) << '\t'
       << detail::field(r.triple.relation) << '\t'
       << detail::field(r.triple.tail) << '\t'
       << detail::field(r.relation_label) << '\t' << r.head_type << '\t'
       << r.tail_type << '\t' << r.head_degree << '\t' << r.tail_degree
       << '\t' << format_real(r.head_betweenness) << '\t'
       << format_real(r.tail_betweenness) << '\n';
  }
  return os.str();
}

inline std::vector<EnrichedTriple> parse_enriched_tsv(
    std::string_view content) {
  std::vector<EnrichedTriple> out;
  for (const auto& f : detail::read_table(content, kEnrichedHeader, 10)) {
    EnrichedTriple r;
    r.triple = {std::string(f[0]), std::string(f[1]), std::string(f[2]),
                Provenance::graph()};
    r.relation_label = std::string(f[3]);
    r.head_type = std::string(f[4]);
    r.tail_type = std::string(f[5]);
    if (!is_five_type_label(r.head_type) || !is_five_type_label(r.tail_type)) {
      throw FormatError("entity type outside PER/ORG/LOC/MISC/O in row for '" +
                        r.triple.head + "'");
    }
    const auto deg_h = parse_integer(f[6]);
    const auto deg_t = parse_integer(f[7]);
    if (deg_h < 0 || deg_t < 0) throw FormatError("negative degree");
    r.head_degree = static_cast<std::size_t>(deg_h);
    r.tail_degree = static_cast<std::size_t>(deg_t);
    r.head_betweenness = parse_real(f[8]);
    r.tail_betweenness = parse_real(f[9]);
    out.push_back(std::move(r));
  }
  return out;
}

// Rows sorted by node name.
inline std::string metrics_to_tsv(const CentralityReport& report) {
  std::vector<std::size_t> order(report.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.nodes[a] < report.nodes[b];
  });
  std::ostringstream os;
  os << kMetricsHeader << '\n';
  for (auto i : order) {
    os << detail::field(report.nodes[i]) << '\t' << report.degree[i] << '\t'
       << format_real(report.betweenness[i]) << '\n';
  }
  return os.str();
}

}  // namespace kgx

#endif  // KGX_TSV_HPP_
