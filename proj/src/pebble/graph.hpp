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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pebble {

/// Dense vertex id in 0..n-1.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple connected undirected graph. Immutable once built; labels are
/// metadata and never influence any algorithm.
class Graph {
 public:
  /// Validates ids, loops, duplicates and connectivity.
  static Graph from_edges(int n, std::vector<Edge> edges,
                          std::map<Vertex, std::string> labels = {});

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  /// Edges as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<Vertex, std::string>& labels() const { return labels_; }
  std::optional<std::string> label(Vertex v) const;

  /// Throws invalid_argument naming `what` if v is not a vertex.
  void require_vertex(Vertex v, const char* what = "vertex") const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::string> labels_;
};

/// Graph together with a distinguished root vertex.
struct RootedGraph {
  Graph graph;
  Vertex root;

  RootedGraph(Graph g, Vertex r);
};

// Metrics.

/// Breadth-first distances from v; every vertex is reached.
std::vector<int> distances(const Graph& g, Vertex v);
std::vector<std::vector<int>> all_distances(const Graph& g);
int eccentricity(const Graph& g, Vertex v);
int diameter(const Graph& g);
int min_degree(const Graph& g);
/// Vertices whose removal disconnects g, ascending.
std::vector<Vertex> cut_vertices(const Graph& g);
/// Connected components of g with `removed` deleted, as a component id per
/// vertex (-1 for the removed vertex).
std::vector<int> components_without(const Graph& g, Vertex removed);

// Generators. Each returns a fresh, validated graph.

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph hypercube(int d);
/// Outer cycle u_i = i, inner vertices w_i = n + i.
Graph petersen_generalized(int n, int k);
/// The 8-vertex Lemke graph; vertex 0 is the distinguished root r.
Graph lemke();
inline constexpr Vertex kLemkeRoot = 0;
inline constexpr int kDefaultBruhatCap = 6;
/// Weak Bruhat graph on permutations of {1..m}; vertex 0 is the identity.
Graph bruhat(int m, int max_m = kDefaultBruhatCap);
/// Vertices: 0 = v, 1 = a, 2 = b, then the p subdivision vertices of v-a,
/// then the q subdivision vertices of v-b.
Graph family_F(int p, int q);
/// Vertices: 0 = v, 1..3 = a, b, c (a triangle), then the p, q, r
/// subdivision vertices of v-a, v-b, v-c.
Graph family_G(int p, int q, int r);
/// Adds vertex n with the same neighborhood as v (not adjacent to v).
Graph clone_vertex(const Graph& g, Vertex v);

}  // namespace pebble
