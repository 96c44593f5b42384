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

#include <vector>

#include "pebble/rational.hpp"

namespace pebble {

/// max c . x  subject to  A x <= b,  x >= 0, with b >= 0 so that the slack
/// basis is feasible from the start.
struct LpProblem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { optimal, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  Rational objective;
  /// Primal values, one per column.
  std::vector<Rational> x;
  /// Dual values, one per row.
  std::vector<Rational> y;
  int pivots = 0;
};

/// Dense tableau simplex in exact arithmetic. Bland's rule (lowest index
/// enters, lowest basic index leaves on ratio ties) rules out cycling.
LpSolution solve_lp(const LpProblem& lp);

/// Same optimum for constraint matrices with A >= 0, solving over a growing
/// subset of rows: it starts from one row covering each column and adds the
/// most violated rows until the subset optimum satisfies them all. Rows
/// never added get dual 0. Memory stays proportional to the active rows
/// rather than to m^2.
LpSolution solve_lp_lazy(const LpProblem& lp);

/// Independent optimality check: x primal feasible, y dual feasible
/// (y >= 0, A^T y >= c) and c . x == b . y.
bool certifies_optimality(const LpProblem& lp, const LpSolution& s);

}  // namespace pebble
