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

// Reference implementations for tests. Deliberately naive: no pruning, no
// shared code with the library beyond the Graph container.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pebble/graph.hpp"

namespace oracle {

using Counts = std::vector<int>;

/// Exhaustive search over every move sequence, memoized on configurations.
bool solvable(const pebble::Graph& g, int root, const Counts& p, int target = 1);

/// Least k such that every size-k configuration reaches `root`.
int pi_rooted(const pebble::Graph& g, int root);

/// max over roots of pi_rooted.
int pi(const pebble::Graph& g);

/// Calls fn on every configuration of exactly `size` pebbles on n vertices.
template <typename Fn>
void for_each_configuration(int n, int size, Fn&& fn) {
  Counts p(n, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == n - 1) {
      p[v] = left;
      fn(p);
      p[v] = 0;
      return;
    }
    for (int c = left; c >= 0; --c) {
      p[v] = c;
      self(self, v + 1, left - c);
    }
    p[v] = 0;
  };
  if (n > 0) rec(rec, 0, size);
}

/// Applies moves (from, to) one by one; false on an illegal move. On success
/// `p` holds the final configuration.
bool replay(const pebble::Graph& g, Counts& p,
            const std::vector<std::pair<int, int>>& moves);

/// Connected graphs on n vertices, one per isomorphism class.
std::vector<pebble::Graph> connected_graphs(int n);

/// Random connected graph: a random spanning tree plus each other pair with
/// probability `density`.
pebble::Graph random_connected(int n, double density, std::mt19937_64& rng);

/// Weighted sum over non-root vertices, exact.
mpq_class dot(const std::vector<mpq_class>& w, const Counts& p);

/// Max of w . p over all root-unsolvable p with p(v) < 2^d(v), compared with
/// w . 1. True when w . p <= w . 1 for all of them.
bool weight_valid(const pebble::Graph& g, int root,
                  const std::vector<mpq_class>& w);

}  // namespace oracle
