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

// Reference betweenness by explicit enumeration of every shortest path.
// Exponential in the worst case; used to cross-check the accumulation
// algorithm on small graphs.

#ifndef KGX_GRAPH_ORACLE_HPP_
#define KGX_GRAPH_ORACLE_HPP_

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "kgx/error.hpp"
#include "kgx/graph.hpp"

namespace kgx {

inline constexpr std::size_t kOracleMaxNodes = 12;

inline std::vector<double> brute_force_betweenness(const KnowledgeGraph& g) {
  const auto n = g.node_count();
  if (n > kOracleMaxNodes) {
    throw OracleTooLarge("brute-force betweenness limited to " +
                         std::to_string(kOracleMaxNodes) + " nodes, got " +
                         std::to_string(n));
  }
  std::vector<double> centrality(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      // Breadth-first enumeration of whole paths; stop at the first layer
      // that reaches t.
      std::vector<std::vector<std::size_t>> shortest;
      std::deque<std::vector<std::size_t>> paths{{s}};
      while (!paths.empty() && shortest.empty()) {
        std::deque<std::vector<std::size_t>> next;
        for (const auto& path : paths) {
          for (auto w : g.neighbours(path.back())) {
            bool seen = false;
            for (auto p : path) seen = seen || p == w;
            if (seen) continue;
            auto longer = path;
            longer.push_back(w);
            if (w == t) {
              shortest.push_back(std::move(longer));
            } else {
              next.push_back(std::move(longer));
            }
          }
        }
        paths = std::move(next);
      }
      if (shortest.empty()) continue;
      std::vector<std::size_t> through(n, 0);
      for (const auto& path : shortest) {
        for (std::size_t k = 1; k + 1 < path.size(); ++k) ++through[path[k]];
      }
      for (std::size_t v = 0; v < n; ++v) {
        centrality[v] += static_cast<double>(through[v]) /
                         static_cast<double>(shortest.size());
      }
    }
  }
  return centrality;
}

}  // namespace kgx

#endif  // KGX_GRAPH_ORACLE_HPP_
