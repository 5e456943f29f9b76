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

// Whole-document processing and the batch driver behind `kgx pipeline`.

#ifndef KGX_PIPELINE_HPP_
#define KGX_PIPELINE_HPP_

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgx/chunker.hpp"
#include "kgx/config.hpp"
#include "kgx/enricher.hpp"
#include "kgx/error.hpp"
#include "kgx/export.hpp"
#include "kgx/graph.hpp"
#include "kgx/interchange.hpp"
#include "kgx/triples.hpp"
#include "kgx/tsv.hpp"

namespace kgx {

enum class GraphFormat { kDot, kGraphml, kJson };

inline GraphFormat parse_graph_format(std::string_view s) {
  if (s == "dot") return GraphFormat::kDot;
  if (s == "graphml") return GraphFormat::kGraphml;
  if (s == "json") return GraphFormat::kJson;
  throw ConfigError("unknown graph format '" + std::string(s) +
                    "' (expected dot, graphml or json)");
}

inline std::string_view extension(GraphFormat f) {
  switch (f) {
    case GraphFormat::kDot:
      return "dot";
    case GraphFormat::kGraphml:
      return "graphml";
    case GraphFormat::kJson:
      break;
  }
  return "json";
}

inline std::string export_graph(const std::vector<EnrichedTriple>& rows,
                                GraphFormat format) {
  switch (format) {
    case GraphFormat::kDot:
      return export_dot(rows);
    case GraphFormat::kGraphml:
      return export_graphml(rows);
    case GraphFormat::kJson:
      break;
  }
  return export_json(rows);
}

struct DocumentResult {
  Extraction extraction;
  CentralityReport centrality;
  std::vector<EnrichedTriple> enriched;
};

inline DocumentResult process_document(const AnnotatedDocument& doc,
                                       const ExtractOptions& options,
                                       const RelationTyper& typer,
                                       double similarity_threshold) {
  DocumentResult r;
  r.extraction = run_extraction(doc, options);
  r.centrality = centrality_report(build_graph(r.extraction.triples()));
  r.enriched = enrich_triples(r.extraction.triples(), doc, r.centrality, typer,
                              similarity_threshold);
  return r;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

// Writes via a sibling temporary and a rename so readers never observe a
// partial file.
inline void write_file_atomic(const std::filesystem::path& path,
                              std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("error writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

// File-name-safe form of a document id.
inline std::string output_stem(std::string_view doc_id) {
  std::string stem;
  for (char c : doc_id) {
    const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '_' ||
                      c == '.';
    stem.push_back(safe ? c : '_');
  }
  if (stem.empty() || stem.front() == '.') stem.insert(0, "doc");
  return stem;
}

struct PipelineRequest {
  PipelineConfig config;
  std::vector<std::string> annotation_files;
  std::filesystem::path out_dir;
  std::vector<GraphFormat> exports = {GraphFormat::kDot};
  std::string sidecar_path;
  bool write_chunks = false;
  std::size_t jobs = 1;
};

// Processes every file, writing <stem>.triples.tsv, .enriched.tsv,
// .metrics.tsv and the requested graph files, plus manifest.tsv. Returns
// 0 when every document succeeded, 1 otherwise; per-file errors go to
// `errors` and do not stop the batch. Configuration problems throw before
// any document is read.
inline int run_pipeline(const PipelineRequest& request, std::ostream& errors) {
  validate(request.config);
  const auto options = extract_options(request.config);
  const auto typer = RelationTyper::from_files(
      request.config.relation_table_path.value_or(""), request.sidecar_path);
  std::filesystem::create_directories(request.out_dir);

  // Documents are parsed and computed concurrently; files are written
  // afterwards in input order so that colliding doc ids get stable stems.
  struct Outcome {
    std::string doc_id;
    std::vector<std::pair<std::string, std::string>> files;  // suffix, body
    std::size_t triples = 0;
    std::string error;
  };
  auto process = [&](const std::string& file) -> Outcome {
    Outcome o;
    try {
      const auto doc = parse_annotation(read_file(file));
      const auto result = process_document(
          doc, options, typer, request.config.similarity_threshold);
      o.doc_id = doc.doc_id;
      o.triples = result.extraction.triples().size();
      o.files.emplace_back(".triples.tsv",
                           triples_to_tsv(result.extraction.triples()));
      o.files.emplace_back(".enriched.tsv", enriched_to_tsv(result.enriched));
      o.files.emplace_back(".metrics.tsv", metrics_to_tsv(result.centrality));
      if (request.write_chunks) {
        o.files.emplace_back(".chunks.tsv",
                             chunks_to_tsv(result.extraction.chunks));
      }
      for (auto f : request.exports) {
        o.files.emplace_back("." + std::string(extension(f)),
                             export_graph(result.enriched, f));
      }
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    return o;
  };

  std::vector<Outcome> outcomes(request.annotation_files.size());
  const auto jobs = std::max<std::size_t>(1, request.jobs);
  for (std::size_t first = 0; first < outcomes.size(); first += jobs) {
    const auto last = std::min(outcomes.size(), first + jobs);
    std::vector<std::future<Outcome>> running;
    for (auto i = first; i < last; ++i) {
      running.push_back(std::async(std::launch::async, process,
                                   std::cref(request.annotation_files[i])));
    }
    for (auto i = first; i < last; ++i) outcomes[i] = running[i - first].get();
  }

  std::string manifest = "doc_id\tsource\tstem\ttriples\n";
  std::set<std::string> used_stems;
  int status = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    const auto& file = request.annotation_files[i];
    if (o.error.empty()) {
      const auto base = output_stem(o.doc_id);
      auto stem = base;
      for (std::size_t n = 2; used_stems.count(stem) != 0; ++n) {
        stem = base + "-" + std::to_string(n);
      }
      used_stems.insert(stem);
      try {
        for (const auto& [suffix, body] : o.files) {
          write_file_atomic(request.out_dir / (stem + suffix), body);
        }
        manifest += o.doc_id + '\t' + file + '\t' + stem + '\t' +
                    std::to_string(o.triples) + '\n';
        continue;
      } catch (const std::exception& e) {
        errors << "error: " << file << ": " << e.what() << '\n';
      }
    } else {
      errors << "error: " << file << ": " << o.error << '\n';
    }
    status = 1;
  }
  write_file_atomic(request.out_dir / "manifest.tsv", manifest);
  return status;
}

}  // namespace kgx

#endif  // KGX_PIPELINE_HPP_
