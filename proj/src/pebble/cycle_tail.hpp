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

#include "pebble/graph.hpp"
#include "pebble/rational.hpp"
#include "pebble/strategy.hpp"

namespace pebble {

/// alpha = (2^s + 2^(t-1) - 2) / (2^s - 1) with s = t + tail.
Rational cycle_tail_alpha(int t, int tail);
/// Total template weight M = alpha + 2^(s+1) + 2^t - 4.
Rational cycle_tail_total(int t, int tail);

/// The cycle-with-tail strategy on its own template graph.
struct CycleTailInstance {
  Graph graph;
  Vertex root = 0;
  Strategy strategy;
  Rational alpha;
  Rational total;
};

/// Template layout: 0 = root, path x_s..x_t as 1..tail+1 (x_s first), then
/// x'_i = tail+1+i, x''_i = tail+t+i for 1 <= i <= t-1, and x_0 last.
/// Requires t >= 2 and tail >= 0.
CycleTailInstance cycle_tail_weights(int t, int tail);

/// Places the template on host vertices given by `roles` (scaled by
/// roles.scale), checking the structure. Throws invalid_argument on a
/// mismatch.
Strategy embed_cycle_tail(const Graph& g, Vertex root,
                          const CycleTailSupport& roles);

/// Structural check of a cycle_tail strategy against the template: roles
/// are distinct vertices joined by the required edges, weights equal the
/// scaled template on roles and vanish elsewhere except on attachments.
std::optional<Violation> validate_cycle_tail(const Graph& g,
                                             const Strategy& s);

}  // namespace pebble
