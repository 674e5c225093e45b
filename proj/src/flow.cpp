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

#include "amw/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>

namespace amw {

MaxFlow::MaxFlow(int nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

int MaxFlow::add_edge(int from, int to, std::int64_t capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  original_.push_back(capacity);
  original_.push_back(0);
  adj_[from].push_back(id);
  adj_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int id : adj_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int t, std::int64_t pushed) {
  if (v == t) return pushed;
  for (auto& i = next_[v]; i < adj_[v].size(); ++i) {
    const int id = adj_[v][i];
    Arc& a = arcs_[id];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    const std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      arcs_[id ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  std::int64_t total = 0;
  while (bfs(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (const std::int64_t f =
               dfs(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += f;
    }
  }
  return total;
}

std::int64_t MaxFlow::flow(int edge) const {
  return original_[edge] - arcs_[edge].cap;
}

MinCostFlow::MinCostFlow(int nodes) : nodes_(nodes) {}

int MinCostFlow::add_edge(int from, int to, std::int64_t lower,
                          std::int64_t upper, std::int64_t cost) {
  if (lower < 0 || upper < lower) throw std::invalid_argument("bad bounds");
  edges_.push_back({from, to, lower, upper, cost});
  return static_cast<int>(edges_.size()) - 1;
}

std::optional<std::int64_t> MinCostFlow::solve(int source, int sink,
                                               std::int64_t value) {
  struct Arc {
    int to;
    std::int64_t cap, cost;
  };
  const int super_source = nodes_;
  const int super_sink = nodes_ + 1;
  const int total_nodes = nodes_ + 2;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj(total_nodes);
  auto add = [&](int u, int v, std::int64_t cap, std::int64_t cost) {
    const int id = static_cast<int>(arcs.size());
    arcs.push_back({v, cap, cost});
    arcs.push_back({u, 0, -cost});
    adj[u].push_back(id);
    adj[v].push_back(id + 1);
    return id;
  };

  std::vector<std::int64_t> excess(total_nodes, 0);
  std::int64_t base_cost = 0;
  std::vector<int> arc_of_edge(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    arc_of_edge[i] = add(e.from, e.to, e.upper - e.lower, e.cost);
    excess[e.to] += e.lower;
    excess[e.from] -= e.lower;
    base_cost += e.lower * e.cost;
  }
  // The requested s-t value becomes a forced return arc t -> s.
  excess[source] += value;
  excess[sink] -= value;

  std::int64_t demand = 0;
  for (int v = 0; v < nodes_; ++v) {
    if (excess[v] > 0) {
      add(super_source, v, excess[v], 0);
      demand += excess[v];
    } else if (excess[v] < 0) {
      add(v, super_sink, -excess[v], 0);
    }
  }

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t sent = 0;
  std::int64_t cost = 0;
  std::vector<std::int64_t> dist(total_nodes);
  std::vector<int> via(total_nodes);
  std::vector<char> queued(total_nodes);
  while (sent < demand) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> q;
    dist[super_source] = 0;
    q.push_back(super_source);
    queued[super_source] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      queued[v] = 0;
      for (int id : adj[v]) {
        const Arc& a = arcs[id];
        if (a.cap > 0 && dist[v] + a.cost < dist[a.to]) {
          dist[a.to] = dist[v] + a.cost;
          via[a.to] = id;
          if (!queued[a.to]) {
            queued[a.to] = 1;
            q.push_back(a.to);
          }
        }
      }
    }
    if (dist[super_sink] >= kInf) break;
    std::int64_t push = demand - sent;
    for (int v = super_sink; v != super_source; v = arcs[via[v] ^ 1].to) {
      push = std::min(push, arcs[via[v]].cap);
    }
    for (int v = super_sink; v != super_source; v = arcs[via[v] ^ 1].to) {
      arcs[via[v]].cap -= push;
      arcs[via[v] ^ 1].cap += push;
    }
    sent += push;
    cost += push * dist[super_sink];
  }
  if (sent < demand) return std::nullopt;

  flows_.assign(edges_.size(), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    flows_[i] = edges_[i].lower + arcs[arc_of_edge[i] ^ 1].cap;
  }
  return base_cost + cost;
}

std::int64_t MinCostFlow::flow(int edge) const { return flows_.at(edge); }

}  // namespace amw
