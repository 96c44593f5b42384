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

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/solver.hpp"

namespace pebble {

/// Outcome of a maximum-unsolvable search at one root. When `exact`, the
/// witness is an unsolvable configuration of size `lower - 1` and every
/// configuration of size `lower` was shown solvable, so pi(G, r) = lower.
/// Otherwise pi(G, r) lies in [lower, upper].
struct RootedPebblingResult {
  Vertex root = 0;
  bool exact = false;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  Configuration witness;
  std::uint64_t states = 0;

  std::int64_t value() const { return lower; }
};

/// Branch-and-bound over r-unsolvable configurations maximizing size. A
/// vertex at distance d never carries more than 2^d - 1 pebbles (2^d solve
/// alone), and a partial assignment that is already solvable is cut along
/// with all its extensions. Vertices are assigned far-to-near.
RootedPebblingResult max_unsolvable(const Graph& g, Vertex root,
                                    const SolverBudget& budget = {});

/// pi(G, r); same search as max_unsolvable.
RootedPebblingResult pebbling_number_rooted(const Graph& g, Vertex root,
                                            const SolverBudget& budget = {});

struct PebblingOptions {
  /// Caller asserts vertex-transitivity; only root 0 is searched.
  bool assume_vertex_transitive = false;
  /// Worker threads across roots. Results do not depend on this.
  int jobs = 1;
};

struct PebblingResult {
  bool exact = false;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  /// Root attaining the maximum (smallest id on ties) and its witness.
  Vertex root = 0;
  Configuration witness;
  std::vector<RootedPebblingResult> per_root;
};

/// pi(G) = max over roots of pi(G, r). Each root gets its own copy of the
/// budget; the time limit is shared.
PebblingResult pebbling_number(const Graph& g, const SolverBudget& budget = {},
                               const PebblingOptions& options = {});

enum class Class0Status { yes, no, budget_exceeded };

struct Class0Result {
  Class0Status status = Class0Status::yes;
  /// For `no`: a root and an unsolvable configuration with >= n pebbles.
  Vertex root = 0;
  Configuration witness;
};

/// Whether pi(G) = n. Stops at the first root with an unsolvable
/// configuration of n pebbles.
Class0Result is_class0(const Graph& g, const SolverBudget& budget = {},
                       const PebblingOptions& options = {});

}  // namespace pebble
