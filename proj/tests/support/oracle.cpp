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

#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace oracle {

namespace {

// Memo over configurations for one (graph, root, target).
class Naive {
 public:
  Naive(const pebble::Graph& g, int root, int target)
      : g_(g), root_(root), target_(target) {}

  bool run(Counts& p) {
    if (p[root_] >= target_) return true;
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    bool ok = false;
    for (int v = 0; v < g_.order() && !ok; ++v) {
      if (p[v] < 2) continue;
      for (int u : g_.neighbors(v)) {
        p[v] -= 2;
        p[u] += 1;
        ok = run(p);
        p[u] -= 1;
        p[v] += 2;
        if (ok) break;
      }
    }
    memo_.emplace(p, ok);
    return ok;
  }

 private:
  const pebble::Graph& g_;
  int root_;
  int target_;
  std::map<Counts, bool> memo_;
};

std::vector<int> bfs(const pebble::Graph& g, int s) {
  std::vector<int> d(g.order(), -1);
  std::queue<int> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u : g.neighbors(v)) {
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push(u);
      }
    }
  }
  return d;
}

bool connected(int n, const std::vector<pebble::Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = n;
  for (auto [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --parts;
    }
  }
  return parts == 1;
}

// Smallest adjacency bit string over all vertex orders.
std::uint64_t canonical(int n, const std::vector<pebble::Edge>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        code = (code << 1) | (adj[perm[i]][perm[j]] ? 1 : 0);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

bool solvable(const pebble::Graph& g, int root, const Counts& p, int target) {
  Naive naive(g, root, target);
  Counts q = p;
  return naive.run(q);
}

int pi_rooted(const pebble::Graph& g, int root) {
  Naive naive(g, root, 1);
  for (int k = 1;; ++k) {
    bool all = true;
    for_each_configuration(g.order(), k, [&](const Counts& p) {
      if (!all) return;
      Counts q = p;
      if (!naive.run(q)) all = false;
    });
    if (all) return k;
  }
}

int pi(const pebble::Graph& g) {
  int best = 0;
  for (int r = 0; r < g.order(); ++r) best = std::max(best, pi_rooted(g, r));
  return best;
}

bool replay(const pebble::Graph& g, Counts& p,
            const std::vector<std::pair<int, int>>& moves) {
  for (auto [from, to] : moves) {
    if (from < 0 || from >= g.order() || to < 0 || to >= g.order()) return false;
    if (!g.adjacent(from, to) || p[from] < 2) return false;
    p[from] -= 2;
    p[to] += 1;
  }
  return true;
}

std::vector<pebble::Graph> connected_graphs(int n) {
  std::vector<pebble::Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> seen;
  std::vector<pebble::Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<pebble::Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) edges.push_back(pairs[k]);
    }
    if (n > 1 && !connected(n, edges)) continue;
    if (!seen.insert(canonical(n, edges)).second) continue;
    out.push_back(pebble::Graph::from_edges(n, std::move(edges)));
  }
  return out;
}

pebble::Graph random_connected(int n, double density, std::mt19937_64& rng) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<pebble::Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int u = pick(rng);
    adj[u][v] = adj[v][u] = true;
    edges.emplace_back(u, v);
  }
  std::bernoulli_distribution coin(density);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j] && coin(rng)) edges.emplace_back(i, j);
    }
  }
  return pebble::Graph::from_edges(n, std::move(edges));
}

mpq_class dot(const std::vector<mpq_class>& w, const Counts& p) {
  mpq_class s = 0;
  for (std::size_t v = 0; v < w.size(); ++v) s += w[v] * p[v];
  return s;
}

bool weight_valid(const pebble::Graph& g, int root,
                  const std::vector<mpq_class>& w) {
  const int n = g.order();
  const auto d = bfs(g, root);
  Counts ones(n, 1);
  ones[root] = 0;
  const mpq_class bound = dot(w, ones);
  Naive naive(g, root, 1);
  Counts p(n, 0);
  bool ok = true;
  auto rec = [&](auto&& self, int v) -> void {
    if (!ok) return;
    if (v == n) {
      Counts q = p;
      if (!naive.run(q) && dot(w, p) > bound) ok = false;
      return;
    }
    const int cap = v == root ? 0 : (1 << d[v]) - 1;
    for (int c = 0; c <= cap; ++c) {
      p[v] = c;
      self(self, v + 1);
    }
    p[v] = 0;
  };
  rec(rec, 0);
  return ok;
}

}  // namespace oracle
