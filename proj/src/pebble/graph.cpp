// Copyright 2026 The pebblecert Authors
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

#include "pebble/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "pebble/error.hpp"

namespace pebble {

Graph Graph::from_edges(int n, std::vector<Edge> edges,
                        std::map<Vertex, std::string> labels) {
  if (n < 1) throw invalid_argument("graph must have at least one vertex");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  g.matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw invalid_argument("edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
    }
    if (u == v) throw invalid_argument("self-loop at " + std::to_string(u));
    if (g.adjacent(u, v)) {
      throw invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
    }
    g.matrix_[static_cast<std::size_t>(u) * n + v] = 1;
    g.matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  std::sort(g.edges_.begin(), g.edges_.end());
  for (const auto& [v, text] : labels) {
    if (v < 0 || v >= n) {
      throw invalid_argument("label for unknown vertex " + std::to_string(v));
    }
  }
  g.labels_ = std::move(labels);

  const auto d = distances(g, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (d[v] < 0) {
      throw invalid_argument("graph is disconnected (vertex " +
                             std::to_string(v) + " unreachable from 0)");
    }
  }
  return g;
}

std::optional<std::string> Graph::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

void Graph::require_vertex(Vertex v, const char* what) const {
  if (!contains(v)) {
    throw invalid_argument(std::string("unknown ") + what + " " +
                           std::to_string(v) + " (n=" + std::to_string(n_) +
                           ")");
  }
}

RootedGraph::RootedGraph(Graph g, Vertex r) : graph(std::move(g)), root(r) {
  graph.require_vertex(root, "root");
}

std::vector<int> distances(const Graph& g, Vertex v) {
  g.require_vertex(v);
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(distances(g, v));
  return out;
}

int eccentricity(const Graph& g, Vertex v) {
  const auto d = distances(g, v);
  return *std::max_element(d.begin(), d.end());
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    best = std::max(best, eccentricity(g, v));
  }
  return best;
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<int> components_without(const Graph& g, Vertex removed) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (s == removed || comp[s] >= 0) continue;
    std::deque<Vertex> queue{s};
    comp[s] = next;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (w != removed && comp[w] < 0) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  // Hopcroft-Tarjan low-link, iterative to keep deep paths off the stack.
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<bool> is_cut(n, false);
  int timer = 0;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    int root_children = 0;
    std::vector<Frame> stack{{s, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (disc[w] < 0) {
          parent[w] = f.v;
          if (f.v == s) ++root_children;
          disc[w] = low[w] = timer++;
          stack.push_back({w, 0});
        } else if (w != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      stack.pop_back();
      if (!stack.empty()) {
        const Vertex p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (p != s && low[v] >= disc[p]) is_cut[p] = true;
      }
    }
    if (root_children > 1) is_cut[s] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

}  // namespace pebble
