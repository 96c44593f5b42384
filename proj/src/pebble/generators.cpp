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

#include <algorithm>
#include <numeric>
#include <string>

#include "pebble/error.hpp"
#include "pebble/graph.hpp"

namespace pebble {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw invalid_argument(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path: need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle(int n) {
  require(n >= 3, "cycle: need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

Graph complete(int n) {
  require(n >= 1, "complete: need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph hypercube(int d) {
  require(d >= 0 && d <= 16, "hypercube: need 0 <= d <= 16");
  const int n = 1 << d;
  std::vector<Edge> edges;
  std::map<Vertex, std::string> labels;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
    std::string bits;
    for (int b = d - 1; b >= 0; --b) bits += ((v >> b) & 1) ? '1' : '0';
    if (d > 0) labels[v] = bits;
  }
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph petersen_generalized(int n, int k) {
  require(n >= 3, "petersen_generalized: need n >= 3");
  require(k >= 1 && 2 * k < n, "petersen_generalized: need 1 <= k < n/2");
  std::vector<Edge> edges;
  std::map<Vertex, std::string> labels;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
    labels[i] = "u" + std::to_string(i);
    labels[n + i] = "w" + std::to_string(i);
  }
  return Graph::from_edges(2 * n, std::move(edges), std::move(labels));
}

// Adopted Lemke edge list (see README "Lemke graph"). Vertex 0 is the root r
// whose pebbling number needs non-tree weight functions. a, c and d each meet
// all of b1, b2, b3; c-d is an edge and r reaches d through e.
Graph lemke() {
  std::vector<Edge> edges = {
      {0, 1}, {0, 7}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5},
      {4, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 6}, {6, 7},
  };
  std::map<Vertex, std::string> labels = {
      {0, "r"}, {1, "a"}, {2, "b1"}, {3, "b2"},
      {4, "b3"}, {5, "c"}, {6, "d"}, {7, "e"},
  };
  return Graph::from_edges(8, std::move(edges), std::move(labels));
}

Graph bruhat(int m, int max_m) {
  require(m >= 2, "bruhat: need m >= 2");
  require(m <= max_m, "bruhat: m=" + std::to_string(m) +
                          " exceeds the configured cap " +
                          std::to_string(max_m));
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::vector<int>, Vertex> index;
  std::map<Vertex, std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<Vertex>(i);
    std::string text;
    for (int x : perms[i]) {
      if (!text.empty() && m > 9) text += ',';
      text += std::to_string(x);
    }
    labels[static_cast<Vertex>(i)] = text;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (int pos = 0; pos + 1 < m; ++pos) {
      auto q = perms[i];
      std::swap(q[pos], q[pos + 1]);
      const Vertex j = index.at(q);
      if (static_cast<Vertex>(i) < j) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<int>(perms.size()), std::move(edges),
                           std::move(labels));
}

Graph family_F(int p, int q) {
  require(p >= 1 && q >= 1, "family_F: need p, q >= 1");
  const int n = 3 + p + q;
  std::vector<Edge> edges = {{1, 2}};
  std::map<Vertex, std::string> labels = {{0, "v"}, {1, "a"}, {2, "b"}};
  Vertex next = 3;
  for (int i = 0; i < p; ++i, ++next) {
    edges.emplace_back(0, next);
    edges.emplace_back(next, 1);
    labels[next] = "a" + std::to_string(i + 1);
  }
  for (int i = 0; i < q; ++i, ++next) {
    edges.emplace_back(0, next);
    edges.emplace_back(next, 2);
    labels[next] = "b" + std::to_string(i + 1);
  }
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph family_G(int p, int q, int r) {
  require(p >= 1 && q >= 1 && r >= 1, "family_G: need p, q, r >= 1");
  const int n = 4 + p + q + r;
  std::vector<Edge> edges = {{1, 2}, {1, 3}, {2, 3}};
  std::map<Vertex, std::string> labels = {
      {0, "v"}, {1, "a"}, {2, "b"}, {3, "c"}};
  Vertex next = 4;
  const int counts[3] = {p, q, r};
  const char* names[3] = {"a", "b", "c"};
  for (int side = 0; side < 3; ++side) {
    for (int i = 0; i < counts[side]; ++i, ++next) {
      edges.emplace_back(0, next);
      edges.emplace_back(next, 1 + side);
      labels[next] = std::string(names[side]) + std::to_string(i + 1);
    }
  }
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph clone_vertex(const Graph& g, Vertex v) {
  g.require_vertex(v);
  const Vertex copy = g.order();
  std::vector<Edge> edges = g.edges();
  for (Vertex w : g.neighbors(v)) edges.emplace_back(copy, w);
  auto labels = g.labels();
  if (auto text = g.label(v)) labels[copy] = *text + "'";
  return Graph::from_edges(g.order() + 1, std::move(edges),
                           std::move(labels));
}

}  // namespace pebble
