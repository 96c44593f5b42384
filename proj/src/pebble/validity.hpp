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

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/rational.hpp"
#include "pebble/solver.hpp"
#include "pebble/strategy.hpp"

namespace pebble {

inline constexpr int kDefaultBruteforceMaxVertices = 10;

enum class ValidityStatus { valid, invalid, budget_exceeded };

const char* to_string(ValidityStatus s);

struct ValidityResult {
  ValidityStatus status = ValidityStatus::valid;
  /// For `invalid`: a root-unsolvable configuration with w . p > w . 1.
  Configuration witness;
  Rational witness_value;
  /// w . 1
  Rational bound;
  std::uint64_t states = 0;
};

/// Decides whether w . p <= w . 1 for every configuration p that cannot
/// reach w.root(). Searches unsolvable configurations maximizing w . p by
/// branch and bound: zero-weight vertices stay empty (emptying them keeps p
/// unsolvable and w . p unchanged), a vertex at distance d holds at most
/// 2^d - 1 pebbles, and a branch stops once even its best completion cannot
/// exceed w . 1. Throws invalid_argument when n > max_vertices.
ValidityResult verify_validity_bruteforce(
    const Graph& g, const WeightFunction& w, const SolverBudget& budget = {},
    int max_vertices = kDefaultBruteforceMaxVertices);

}  // namespace pebble
