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

// Graph file writers for enriched triples. Nodes are filled by entity type
// and sized by degree; output order is sorted so files are byte-stable.
//
//   PER  #d62728 (red)     ORG  #1f77b4 (blue)    LOC  #2ca02c (green)
//   MISC #ff7f0e (orange)  O    #7f7f7f (gray)

#ifndef KGX_EXPORT_HPP_
#define KGX_EXPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgx/enricher.hpp"
#include "kgx/strings.hpp"

namespace kgx {

inline std::string_view entity_type_color(std::string_view type) {
  if (type == "PER") return "#d62728";
  if (type == "ORG") return "#1f77b4";
  if (type == "LOC") return "#2ca02c";
  if (type == "MISC") return "#ff7f0e";
  return "#7f7f7f";
}

inline double node_width(std::size_t degree) {
  return 0.5 + 0.25 * static_cast<double>(degree);
}

namespace detail {

struct NodeInfo {
  std::string type = "O";
  std::size_t degree = 0;
  double betweenness = 0.0;
};

struct EdgeInfo {
  std::string head;
  std::string tail;
  std::string relation;
  std::string relation_label;

  auto key() const { return std::tie(head, tail, relation, relation_label); }
};

struct GraphView {
  std::map<std::string, NodeInfo> nodes;
  std::vector<EdgeInfo> edges;
};

inline GraphView view_of(const std::vector<EnrichedTriple>& rows) {
  GraphView g;
  for (const auto& r : rows) {
    g.nodes.try_emplace(r.triple.head,
                        NodeInfo{r.head_type, r.head_degree,
                                 r.head_betweenness});
    g.nodes.try_emplace(r.triple.tail,
                        NodeInfo{r.tail_type, r.tail_degree,
                                 r.tail_betweenness});
    g.edges.push_back(
        {r.triple.head, r.triple.tail, r.triple.relation, r.relation_label});
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const EdgeInfo& a, const EdgeInfo& b) {
              return a.key() < b.key();
            });
  return g;
}

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

}  // namespace detail

inline std::string export_dot(const std::vector<EnrichedTriple>& rows) {
  if (rows.empty()) return "digraph G { }\n";
  const auto g = detail::view_of(rows);
  std::ostringstream os;
  os << "digraph G {\n"
     << "  node [shape=ellipse, style=filled, fixedsize=false];\n";
  for (const auto& [name, info] : g.nodes) {
    os << "  " << detail::dot_quote(name)
       << " [width=" << format_real(node_width(info.degree))
       << ", fillcolor=" << detail::dot_quote(entity_type_color(info.type))
       << ", type=" << detail::dot_quote(info.type)
       << ", degree=" << info.degree
       << ", betweenness=" << format_real(info.betweenness) << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  " << detail::dot_quote(e.head) << " -> "
       << detail::dot_quote(e.tail)
       << " [label=" << detail::dot_quote(e.relation)
       << ", relation_label=" << detail::dot_quote(e.relation_label)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string export_graphml(const std::vector<EnrichedTriple>& rows) {
  const auto g = detail::view_of(rows);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
     << "    xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
     << "    xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
        "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
     << "  <key id=\"d0\" for=\"node\" attr.name=\"label\" "
        "attr.type=\"string\"/>\n"
     << "  <key id=\"d1\" for=\"node\" attr.name=\"type\" "
        "attr.type=\"string\"/>\n"
     << "  <key id=\"d2\" for=\"node\" attr.name=\"degree\" "
        "attr.type=\"int\"/>\n"
     << "  <key id=\"d3\" for=\"node\" attr.name=\"betweenness\" "
        "attr.type=\"double\"/>\n"
     << "  <key id=\"d4\" for=\"node\" attr.name=\"color\" "
        "attr.type=\"string\"/>\n"
     << "  <key id=\"d5\" for=\"edge\" attr.name=\"relation\" "
        "attr.type=\"string\"/>\n"
     << "  <key id=\"d6\" for=\"edge\" attr.name=\"relation_label\" "
        "attr.type=\"string\"/>\n";
  if (g.nodes.empty()) {
    os << "  <graph id=\"G\" edgedefault=\"directed\"/>\n</graphml>\n";
    return os.str();
  }
  os << "  <graph id=\"G\" edgedefault=\"directed\">\n";
  std::map<std::string_view, std::size_t> id;
  for (const auto& [name, info] : g.nodes) {
    const auto n = id.size();
    id.emplace(name, n);
    os << "    <node id=\"n" << n << "\">\n"
       << "      <data key=\"d0\">" << detail::xml_escape(name) << "</data>\n"
       << "      <data key=\"d1\">" << info.type << "</data>\n"
       << "      <data key=\"d2\">" << info.degree << "</data>\n"
       << "      <data key=\"d3\">" << format_real(info.betweenness)
       << "</data>\n"
       << "      <data key=\"d4\">" << entity_type_color(info.type)
       << "</data>\n"
       << "    </node>\n";
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    os << "    <edge id=\"e" << i << "\" source=\"n" << id.at(e.head)
       << "\" target=\"n" << id.at(e.tail) << "\">\n"
       << "      <data key=\"d5\">" << detail::xml_escape(e.relation)
       << "</data>\n"
       << "      <data key=\"d6\">" << detail::xml_escape(e.relation_label)
       << "</data>\n"
       << "    </edge>\n";
  }
  os << "  </graph>\n</graphml>\n";
  return os.str();
}

// Node-link JSON in the shape D3 force layouts consume.
inline std::string export_json(const std::vector<EnrichedTriple>& rows) {
  const auto g = detail::view_of(rows);
  nlohmann::ordered_json root;
  root["nodes"] = nlohmann::ordered_json::array();
  for (const auto& [name, info] : g.nodes) {
    root["nodes"].push_back({{"id", name},
                             {"type", info.type},
                             {"color", std::string(entity_type_color(info.type))},
                             {"degree", info.degree},
                             {"betweenness", info.betweenness}});
  }
  root["links"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    root["links"].push_back({{"source", e.head},
                             {"target", e.tail},
                             {"relation", e.relation},
                             {"relation_label", e.relation_label}});
  }
  return root.dump(2) + "\n";
}

}  // namespace kgx

#endif  // KGX_EXPORT_HPP_
