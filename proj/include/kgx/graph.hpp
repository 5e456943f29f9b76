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

#ifndef KGX_GRAPH_HPP_
#define KGX_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stack>
#include <string>
#include <string_view>
#include <vector>

#include "kgx/triples.hpp"

namespace kgx {

// Directed multigraph over phrase nodes, one relation-labeled edge per
// triple, plus the undirected simple view used for centrality.
class KnowledgeGraph {
 public:
  struct Edge {
    std::size_t head;
    std::string relation;
    std::size_t tail;
  };

  KnowledgeGraph() = default;

  explicit KnowledgeGraph(const TripleSet& triples) {
    for (const auto& t : triples) add_edge(t.head, t.relation, t.tail);
  }

  std::size_t add_node(std::string_view name) {
    auto [it, inserted] = index_.emplace(std::string(name), nodes_.size());
    if (inserted) {
      nodes_.push_back(it->first);
      neighbours_.emplace_back();
    }
    return it->second;
  }

  void add_edge(std::string_view head, std::string_view relation,
                std::string_view tail) {
    const auto h = add_node(head);
    const auto t = add_node(tail);
    edges_.push_back({h, std::string(relation), t});
    if (h != t) {
      link(h, t);
      link(t, h);
    }
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  // Node names in insertion order.
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Sorted, duplicate-free neighbours in the undirected simple view.
  const std::vector<std::size_t>& neighbours(std::size_t v) const {
    return neighbours_[v];
  }

  std::size_t undirected_edge_count() const {
    std::size_t twice = 0;
    for (const auto& n : neighbours_) twice += n.size();
    return twice / 2;
  }

 private:
  void link(std::size_t a, std::size_t b) {
    auto& list = neighbours_[a];
    auto pos = std::lower_bound(list.begin(), list.end(), b);
    if (pos == list.end() || *pos != b) list.insert(pos, b);
  }

  std::vector<std::string> nodes_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

inline KnowledgeGraph build_graph(const TripleSet& triples) {
  return KnowledgeGraph(triples);
}

// Per-node values, indexed like KnowledgeGraph::nodes().
struct CentralityReport {
  std::vector<std::string> nodes;
  std::vector<std::size_t> degree;
  std::vector<double> betweenness;

  std::optional<std::size_t> find(std::string_view node) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == node) return i;
    }
    return std::nullopt;
  }
};

// Number of incident directed edges (in + out), i.e. the number of
// triples mentioning the node.
inline std::vector<std::size_t> degree_counts(const KnowledgeGraph& g) {
  std::vector<std::size_t> degree(g.node_count(), 0);
  for (const auto& e : g.edges()) {
    ++degree[e.head];
    ++degree[e.tail];
  }
  return degree;
}

// Unnormalized betweenness on the undirected simple view, each unordered
// pair counted once. Brandes' dependency accumulation over one BFS per
// source; O(V E).
inline std::vector<double> betweenness_centrality(const KnowledgeGraph& g) {
  const auto n = g.node_count();
  std::vector<double> centrality(n, 0.0);
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long long> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::stack<std::size_t> order;
    for (std::size_t v = 0; v < n; ++v) {
      preds[v].clear();
      sigma[v] = 0.0;
      delta[v] = 0.0;
      dist[v] = -1;
    }
    sigma[s] = 1.0;
    dist[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = queue[head];
      order.push(v);
      for (auto w : g.neighbours(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    while (!order.empty()) {
      const auto w = order.top();
      order.pop();
      for (auto v : preds[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) centrality[w] += delta[w];
    }
  }
  // Every unordered pair was visited from both ends.
  for (auto& c : centrality) c /= 2.0;
  return centrality;
}

inline CentralityReport centrality_report(const KnowledgeGraph& g) {
  return {g.nodes(), degree_counts(g), betweenness_centrality(g)};
}

}  // namespace kgx

#endif  // KGX_GRAPH_HPP_
