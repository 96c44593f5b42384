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

#include <optional>
#include <string>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/pebbling_number.hpp"
#include "pebble/solver.hpp"

namespace pebble {

/// A pair (u, v) meeting the degree and distance conditions of one of the
/// two small-neighborhood obstructions. `statement` is 1 or 2:
///   1: d(u) = 2, dist(u, v) >= 3, d(v) <= 3;
///   2: d(u) = 3, dist(u, v) >= 4, d(v) <= 3, all neighbors of v 3-vertices.
struct SnlTrigger {
  Vertex u = -1;
  Vertex v = -1;
  int statement = 0;
  friend bool operator==(const SnlTrigger&, const SnlTrigger&) = default;
};

/// Every applicable (u, v) pair, ordered by (u, v), statement 1 first.
std::vector<SnlTrigger> scan_snl(const Graph& g);

/// The explicit u-unsolvable configuration for an applicable pair:
///   1: 7 on v, 0 on N[u] and N(v), 1 elsewhere;
///   2: 15 on v, 0 on N[u] and N[N[v]] - v, 1 elsewhere.
/// Its size is at least n. Throws ErrorKind::not_applicable naming the
/// failed condition.
Configuration snl_witness(const Graph& g, Vertex u, Vertex v);

struct CutWitness {
  Vertex cut = -1;
  /// Neighbor of `cut` holding 3 pebbles.
  Vertex heavy = -1;
  /// Neighbor of `cut` in another component of g - cut; the root.
  Vertex root = -1;
  /// 3 on heavy, 0 on cut and root, 1 elsewhere: n pebbles.
  Configuration config;
};

/// Throws ErrorKind::not_applicable when u is not a cut vertex.
CutWitness cut_vertex_witness(const Graph& g, Vertex u);

enum class CheckStatus { pass, fail, not_applicable, advisory };
const char* to_string(CheckStatus s);

/// One audited condition. A failing item either carries a witness
/// configuration (with its root) or names the edge bound it violates.
struct AuditItem {
  std::string condition;
  CheckStatus status = CheckStatus::not_applicable;
  std::string detail;
  std::optional<Vertex> root;
  std::optional<Configuration> witness;
  /// Witness re-checked by the exact solver: "unsolvable", "solvable",
  /// "budget_exceeded"; empty when not checked.
  std::string solver;
};

/// Edge-count conditions by diameter:
///   diameter >= 3: 3e >= 5n - 11 (fail means not Class 0);
///   diameter 2:    e >= 2n - 5 for graphs without a cut vertex;
///   any:           e >= floor(3n/2), advisory only, because small Class 0
///                  graphs such as C5 fall below it.
std::vector<AuditItem> audit_edge_bounds(const Graph& g);

enum class EqualityKind { petersen, family_F, family_G, none };
const char* to_string(EqualityKind k);

struct EqualityClass {
  EqualityKind kind = EqualityKind::none;
  /// (p, q) or (p, q, r), nondecreasing.
  std::vector<int> params;
  /// image[v] in the template graph for each v of the input.
  std::vector<Vertex> mapping;
  std::string reason;
};

/// Identifies diameter-2 graphs with no cut vertex and exactly 2n - 5 edges
/// as the Petersen graph or a member of F or G. Returns kind none with a
/// reason when the preconditions fail or nothing matches.
EqualityClass classify_equality_diam2(const Graph& g);

enum class Conclusion { class0, possibly_class0, not_class0 };
const char* to_string(Conclusion c);

struct AuditOptions {
  /// Run the exact Class 0 search after the structural checks.
  bool exact = true;
  /// Largest graph on which witnesses are re-checked by the solver.
  int solver_max_vertices = 24;
  PebblingOptions pebbling;
};

struct AuditReport {
  int n = 0;
  int e = 0;
  int diameter = 0;
  int min_degree = 0;
  std::vector<AuditItem> items;
  std::optional<EqualityClass> equality;
  Conclusion conclusion = Conclusion::possibly_class0;
  /// For not_class0: the item that settles it.
  std::string justification;
  std::optional<Vertex> root;
  std::optional<Configuration> witness;
  /// "confirmed", "refuted", "budget_exceeded" or "skipped".
  std::string exact_search = "skipped";
};

/// Cut vertices, small-neighborhood scan, edge bounds, then exact search.
/// A not_class0 conclusion carries a solver-checked unsolvable
/// configuration of size >= n, or (on graphs too large to re-check) a
/// violated edge bound marked theorem-only.
AuditReport refute_class0(const Graph& g, const SolverBudget& budget = {},
                          const AuditOptions& options = {});

}  // namespace pebble
