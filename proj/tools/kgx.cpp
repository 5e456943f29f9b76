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

// kgx: knowledge-graph triple extraction from annotated documents.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kgx/kgx.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    kgx::write_file_atomic(path, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-graph triple extraction"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path,
                 "key=value config file (falls back to $KGX_CONFIG)");

  // clean
  std::string clean_in, clean_out;
  auto* clean = app.add_subcommand("clean", "Normalize raw text");
  clean->add_option("--in", clean_in, "raw text file")->required();
  clean->add_option("--out", clean_out, "output text file ('-' = stdout)")
      ->required();

  // extract
  std::string extract_ann, extract_out, extract_format = "tsv", chunks_out;
  auto* extract = app.add_subcommand("extract", "Extract triples");
  extract->add_option("--ann", extract_ann, "interchange JSON")->required();
  extract->add_option("--out", extract_out, "triples file ('-' = stdout)")
      ->required();
  extract->add_option("--format", extract_format, "tsv or jsonl")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  extract->add_option("--chunks", chunks_out, "also write the phrase chunks TSV");

  // metrics
  std::string metrics_triples, metrics_out;
  auto* metrics = app.add_subcommand("metrics", "Degree and betweenness");
  metrics->add_option("--triples", metrics_triples, "triples TSV")->required();
  metrics->add_option("--out", metrics_out, "metrics TSV ('-' = stdout)")
      ->required();

  // enrich
  std::string enrich_ann, enrich_triples, enrich_out, enrich_sidecar;
  auto* enrich = app.add_subcommand("enrich", "Append types and centralities");
  enrich->add_option("--ann", enrich_ann, "interchange JSON")->required();
  enrich->add_option("--triples", enrich_triples, "triples TSV")->required();
  enrich->add_option("--out", enrich_out, "enriched TSV ('-' = stdout)")
      ->required();
  enrich->add_option("--sidecar", enrich_sidecar,
                     "head/relation/tail/label TSV from a relation classifier");

  // export
  std::string export_in, export_format, export_out;
  auto* exporter = app.add_subcommand("export", "Write a graph file");
  exporter->add_option("--enriched", export_in, "enriched TSV")->required();
  exporter->add_option("--format", export_format, "dot, graphml or json")
      ->required()
      ->check(CLI::IsMember({"dot", "graphml", "json"}));
  exporter->add_option("--out", export_out, "graph file ('-' = stdout)")
      ->required();

  // pipeline
  kgx::PipelineRequest request;
  std::vector<std::string> pipeline_exports;
  std::string out_dir;
  auto* pipeline = app.add_subcommand("pipeline", "Run every stage");
  pipeline->add_option("--ann", request.annotation_files, "interchange JSON files");
  pipeline->add_option("--out-dir", out_dir, "output directory")->required();
  pipeline->add_option("--export", pipeline_exports,
                       "graph formats to write (default: dot)")
      ->check(CLI::IsMember({"dot", "graphml", "json"}));
  pipeline->add_option("--sidecar", request.sidecar_path,
                       "head/relation/tail/label TSV from a relation classifier");
  pipeline->add_flag("--chunks", request.write_chunks,
                     "also write the phrase chunks TSV");
  pipeline->add_option("--jobs", request.jobs, "documents processed at once")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto config = kgx::resolve_config(config_path);

    if (*clean) {
      write_output(clean_out, kgx::clean_text(kgx::read_file(clean_in)));
    } else if (*extract) {
      const auto doc = kgx::parse_annotation(kgx::read_file(extract_ann));
      const auto x = kgx::run_extraction(doc, kgx::extract_options(config));
      write_output(extract_out, extract_format == "jsonl"
                                    ? kgx::triples_to_jsonl(x.triples())
                                    : kgx::triples_to_tsv(x.triples()));
      if (!chunks_out.empty()) {
        write_output(chunks_out, kgx::chunks_to_tsv(x.chunks));
      }
    } else if (*metrics) {
      const auto triples =
          kgx::parse_triples_tsv(kgx::read_file(metrics_triples));
      write_output(metrics_out, kgx::metrics_to_tsv(kgx::centrality_report(
                                    kgx::build_graph(triples))));
    } else if (*enrich) {
      const auto doc = kgx::parse_annotation(kgx::read_file(enrich_ann));
      const auto triples =
          kgx::parse_triples_tsv(kgx::read_file(enrich_triples));
      const auto typer = kgx::RelationTyper::from_files(
          config.relation_table_path.value_or(""), enrich_sidecar);
      const auto report = kgx::centrality_report(kgx::build_graph(triples));
      write_output(enrich_out,
                   kgx::enriched_to_tsv(kgx::enrich_triples(
                       triples, doc, report, typer,
                       config.similarity_threshold)));
    } else if (*exporter) {
      const auto rows = kgx::parse_enriched_tsv(kgx::read_file(export_in));
      write_output(export_out,
                   kgx::export_graph(rows,
                                     kgx::parse_graph_format(export_format)));
    } else if (*pipeline) {
      request.config = config;
      request.out_dir = out_dir;
      if (!pipeline_exports.empty()) {
        request.exports.clear();
        for (const auto& f : pipeline_exports) {
          request.exports.push_back(kgx::parse_graph_format(f));
        }
      }
      return kgx::run_pipeline(request, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
