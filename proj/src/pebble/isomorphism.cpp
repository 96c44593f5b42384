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

#include "pebble/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace pebble {

namespace {

// Degree followed by the sorted distance profile.
std::vector<std::vector<int>> signatures(const Graph& g) {
  const auto dist = all_distances(g);
  std::vector<std::vector<int>> sig(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> profile = dist[v];
    std::sort(profile.begin(), profile.end());
    sig[v].push_back(g.degree(v));
    sig[v].insert(sig[v].end(), profile.begin(), profile.end());
  }
  return sig;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b)
      : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)) {
    image_.assign(a.order(), -1);
    used_.assign(b.order(), false);
    // Most constrained first: rarest signature, then BFS order so that
    // each new vertex has mapped neighbors.
    std::map<std::vector<int>, int> freq;
    for (const auto& s : sa_) ++freq[s];
    Vertex start = 0;
    for (Vertex v = 1; v < a.order(); ++v) {
      if (freq[sa_[v]] < freq[sa_[start]]) start = v;
    }
    std::vector<bool> seen(a.order(), false);
    order_.push_back(start);
    seen[start] = true;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex w : a.neighbors(order_[i])) {
        if (!seen[w]) {
          seen[w] = true;
          order_.push_back(w);
        }
      }
    }
  }

  bool run() { return extend(0); }
  const std::vector<Vertex>& image() const { return image_; }

 private:
  bool extend(std::size_t i) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    for (Vertex x = 0; x < b_.order(); ++x) {
      if (used_[x] || sa_[v] != sb_[x]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        const Vertex u = order_[k];
        ok = a_.adjacent(u, v) == b_.adjacent(image_[u], x);
      }
      if (!ok) continue;
      image_[v] = x;
      used_[x] = true;
      if (extend(i + 1)) return true;
      used_[x] = false;
      image_[v] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::vector<int>> sa_, sb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a,
                                                    const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  auto sa = signatures(a), sb = signatures(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  Matcher m(a, b);
  if (!m.run()) return std::nullopt;
  return m.image();
}

}  // namespace pebble
