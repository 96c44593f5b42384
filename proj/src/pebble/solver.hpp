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

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"

namespace pebble {

/// Work limit for one search. Exhausting it yields a budget_exceeded result,
/// never a solvability verdict.
struct SolverBudget {
  std::uint64_t max_states = 50'000'000;
  std::chrono::duration<double> time_limit{600.0};

  void validate() const;
};

enum class Verdict { solvable, unsolvable, budget_exceeded };

const char* to_string(Verdict v);

struct SolveResult {
  Verdict verdict = Verdict::unsolvable;
  /// Moves reaching the root when solvable; replays legally from the input.
  std::vector<PebblingMove> witness;
  std::uint64_t states = 0;
};

/// Exact rooted solvability by memoized depth-first search over legal moves.
///
/// Search order: moves that decrease the distance to the root, then lateral
/// moves, then moves away from the root; sources nearer the root first. Each
/// explored configuration is stored with its verdict (the move graph is
/// acyclic because every move loses a pebble), so results are shared across
/// queries on the same instance. Two sound shortcuts run before expanding a
/// configuration:
///   - potential: sum p(v) 2^-d(v) never increases under a move, so a value
///     below `target` is unsolvable;
///   - a vertex at distance d holding target * 2^d pebbles solves alone.
/// Top-level queries also consult a store of maximal unsolvable
/// configurations; anything they dominate is unsolvable.
class Solver {
 public:
  /// `target` is the number of pebbles required on the root (1 for ordinary
  /// solvability).
  Solver(const Graph& g, Vertex root, SolverBudget budget = {},
         int target = 1);
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  /// Verdict plus a witness move sequence when solvable.
  SolveResult solve(const Configuration& p);
  /// Verdict only; cheaper because it skips witness reconstruction.
  Verdict decide(const Configuration& p);

  /// Configurations expanded so far across all queries.
  std::uint64_t states() const;
  bool exhausted() const;
  const Graph& graph() const;
  Vertex root() const;
  const std::vector<int>& root_distances() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper around Solver.
SolveResult is_solvable(const Graph& g, Vertex root, const Configuration& p,
                        const SolverBudget& budget = {});

}  // namespace pebble
