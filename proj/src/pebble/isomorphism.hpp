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
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

/// An isomorphism a -> b as image[v] for each vertex v of a, if one exists.
/// Vertices are first split by degree and by the multiset of distances to
/// all other vertices; a backtracking search then extends partial maps that
/// preserve adjacency to every mapped vertex.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a,
                                                    const Graph& b);

inline bool isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace pebble
