// Copyright 2026 The Authors.
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

#ifndef AMW_FLOW_HPP_
#define AMW_FLOW_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace amw {

/// Dinic max-flow on integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);

  /// Returns an edge id usable with flow().
  int add_edge(int from, int to, std::int64_t capacity);
  std::int64_t run(int source, int sink);
  std::int64_t flow(int edge) const;

 private:
  struct Arc {
    int to;
    std::int64_t cap;
  };
  bool bfs(int s, int t);
  std::int64_t dfs(int v, int t, std::int64_t pushed);

  std::vector<Arc> arcs_;
  std::vector<std::int64_t> original_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

/// Minimum-cost flow with per-edge lower bounds. Lower bounds are removed by
/// the standard excess transformation (super source/sink plus a return arc
/// from sink to source); the residual problem is solved by successive
/// shortest paths with Bellman-Ford, so negative arc costs are allowed as long
/// as the input has no negative cycle.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes);

  int add_edge(int from, int to, std::int64_t lower, std::int64_t upper,
               std::int64_t cost);

  /// Minimum cost of a flow of exactly `value` units from source to sink that
  /// respects all bounds, or nullopt if none exists.
  std::optional<std::int64_t> solve(int source, int sink, std::int64_t value);

  /// Flow on an edge after solve(), including its lower bound.
  std::int64_t flow(int edge) const;

 private:
  struct Edge {
    int from, to;
    std::int64_t lower, upper, cost;
  };
  std::vector<Edge> edges_;
  std::vector<std::int64_t> flows_;
  int nodes_;
};

}  // namespace amw

#endif  // AMW_FLOW_HPP_
