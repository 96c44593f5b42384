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
#include <optional>
#include <vector>

#include "pebble/certificate.hpp"
#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/rational.hpp"
#include "pebble/simplex.hpp"
#include "pebble/strategy.hpp"

namespace pebble {

struct StrategyLimits {
  int max_trees = 20000;
  int max_depth = 16;
};

/// Basic tree strategies for one root, each used as a constraint
/// w . p <= w . 1.
struct StrategySet {
  Vertex root = 0;
  std::vector<Strategy> strategies;
  /// True when enumeration stopped at max_trees.
  bool truncated = false;
};

/// Deterministic, de-duplicated basic tree strategies: first one shortest
/// path to every vertex, then every tree in which the root has a single
/// child, explored depth-first from the smallest ids, until max_trees.
/// Trees whose root has several children are omitted because their
/// constraint is the sum of the single-branch constraints. Weights double
/// toward the root with the deepest leaf at 1.
StrategySet enumerate_tree_strategies(const Graph& g, Vertex root,
                                      const StrategyLimits& limits = {});

/// The LP  max sum_{v != r} p(v)  s.t.  w_T . p <= w_T . 1  for T in S.
LpProblem pebbling_lp(const Graph& g, Vertex root, const StrategySet& s);

struct LpResult {
  /// False when some vertex carries zero weight in every strategy; the LP
  /// is then unbounded and gives no bound.
  bool bounded = false;
  Vertex uncovered = -1;
  Rational optimum;
  std::int64_t bound = 0;  // floor(optimum) + 1
  /// Optimal p, one entry per vertex (0 on the root).
  std::vector<Rational> primal;
  /// Optimal dual value per strategy; the combining coefficients.
  std::vector<Rational> duals;
  /// Primal and dual feasible with equal objective, checked independently.
  bool certified = false;
  int pivots = 0;
};

LpResult lp_relaxation_bound(const Graph& g, Vertex root, const StrategySet& s);

/// Strategies with positive dual value as a certificate. Its covering bound
/// equals floor(optimum) + 1 whenever the duals cover every vertex.
Certificate dual_certificate(const Graph& g, Vertex root, const StrategySet& s,
                             const LpResult& lp);

struct IlpBudget {
  std::uint64_t max_nodes = 200000;
};

inline constexpr int kDefaultIlpMaxVertices = 12;

struct IlpResult {
  bool exact = false;
  bool bounded = false;
  /// Best integer objective found and a configuration attaining it.
  std::int64_t z = 0;
  Configuration witness;
  /// Proven upper bound on the integer optimum (equals z when exact).
  std::int64_t upper = 0;
  std::uint64_t nodes = 0;
};

/// Integer optimum of pebbling_lp by depth-first branch and bound on the
/// exact LP relaxation. Throws invalid_argument when n > max_vertices.
IlpResult ilp_bound(const Graph& g, Vertex root, const StrategySet& s,
                    const IlpBudget& budget = {},
                    int max_vertices = kDefaultIlpMaxVertices);

}  // namespace pebble
