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

#include "pebble/configuration.hpp"

#include <string>

#include "pebble/error.hpp"

namespace pebble {

Configuration::Configuration(std::vector<int> counts)
    : counts_(std::move(counts)) {
  for (std::size_t v = 0; v < counts_.size(); ++v) {
    if (counts_[v] < 0) {
      throw invalid_argument("negative pebble count at vertex " +
                             std::to_string(v));
    }
    size_ += counts_[v];
  }
}

void Configuration::set(Vertex v, int count) {
  if (count < 0) throw invalid_argument("negative pebble count");
  size_ += count - counts_.at(v);
  counts_[v] = count;
}

void Configuration::add(Vertex v, int delta) { set(v, counts_.at(v) + delta); }

bool Configuration::dominated_by(const Configuration& other) const {
  if (other.order() != order()) return false;
  for (int v = 0; v < order(); ++v) {
    if (counts_[v] > other.counts_[v]) return false;
  }
  return true;
}

Configuration apply_move(const Graph& g, const Configuration& p,
                         PebblingMove m) {
  if (p.order() != g.order()) {
    throw invalid_argument("configuration size does not match graph");
  }
  if (!g.contains(m.from) || !g.contains(m.to) || !g.adjacent(m.from, m.to)) {
    throw Error(ErrorKind::illegal_move,
                "illegal move " + std::to_string(m.from) + "->" +
                    std::to_string(m.to) + ": not an edge");
  }
  if (p[m.from] < 2) {
    throw Error(ErrorKind::illegal_move,
                "illegal move " + std::to_string(m.from) + "->" +
                    std::to_string(m.to) + ": only " +
                    std::to_string(p[m.from]) + " pebble(s) on source");
  }
  Configuration next = p;
  next.add(m.from, -2);
  next.add(m.to, 1);
  return next;
}

Configuration replay(const Graph& g, Configuration p,
                     const std::vector<PebblingMove>& moves) {
  for (const auto& m : moves) p = apply_move(g, p, m);
  return p;
}

}  // namespace pebble
