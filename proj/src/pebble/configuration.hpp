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
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

/// Pebble counts on every vertex of a graph.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(int n) : counts_(n, 0) {}
  explicit Configuration(std::vector<int> counts);

  int order() const { return static_cast<int>(counts_.size()); }
  int operator[](Vertex v) const { return counts_[v]; }
  std::int64_t size() const { return size_; }
  const std::vector<int>& counts() const { return counts_; }

  void set(Vertex v, int count);
  void add(Vertex v, int delta);

  /// True when every count is at most the matching count of `other`.
  bool dominated_by(const Configuration& other) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<int> counts_;
  std::int64_t size_ = 0;
};

struct PebblingMove {
  Vertex from;
  Vertex to;

  friend bool operator==(const PebblingMove&, const PebblingMove&) = default;
};

/// Removes two pebbles from `m.from` and adds one to `m.to`. Throws
/// ErrorKind::illegal_move on a non-edge or when `from` holds fewer than two.
Configuration apply_move(const Graph& g, const Configuration& p,
                         PebblingMove m);

/// Replays `moves` from `p`; throws on the first illegal move.
Configuration replay(const Graph& g, Configuration p,
                     const std::vector<PebblingMove>& moves);

}  // namespace pebble
