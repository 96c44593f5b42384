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

#include "pebble/solver.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>

#include "pebble/error.hpp"

namespace pebble {

namespace {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;


struct BudgetHit {};

// Memo value: the first move of a solution, or from == -1 for unsolvable.
struct MemoEntry {
  std::int16_t from;
  std::int16_t to;
};

constexpr int kMaxPotentialShift = 60;
constexpr std::size_t kDominanceStoreCap = 64;

}  // namespace

void SolverBudget::validate() const {
  if (max_states == 0) throw invalid_argument("budget: max_states must be > 0");
  if (!(time_limit.count() > 0)) {
    throw invalid_argument("budget: time_limit must be > 0");
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::solvable:
      return "solvable";
    case Verdict::unsolvable:
      return "unsolvable";
    case Verdict::budget_exceeded:
      return "budget_exceeded";
  }
  return "?";
}

struct Solver::Impl {
  Graph g;
  Vertex root;
  SolverBudget budget;
  int target;
  std::vector<int> dist;
  int max_dist = 0;
  std::vector<Vertex> tree_parent;
  // Moves grouped by class: 0 = toward root, 1 = lateral, 2 = away.
  std::array<std::vector<PebblingMove>, 3> moves_by_class;

  absl::flat_hash_map<std::string, MemoEntry> memo;
  // Recent unsolvable inputs, largest first; anything componentwise below
  // one of them is unsolvable too.
  std::vector<std::pair<std::int64_t, std::vector<int>>> unsolvable_store;
  std::uint64_t states = 0;
  bool hit = false;
  std::chrono::steady_clock::time_point deadline;

  Impl(const Graph& graph, Vertex r, SolverBudget b, int t)
      : g(graph), root(r), budget(b), target(t) {
    g.require_vertex(root, "root");
    budget.validate();
    if (target < 1) throw invalid_argument("target must be >= 1");
    if (g.order() > 32767) throw invalid_argument("graph too large for search");
    dist = distances(g, root);
    max_dist = *std::max_element(dist.begin(), dist.end());
    tree_parent.assign(g.order(), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == dist[v] - 1) {
          tree_parent[v] = w;
          break;
        }
      }
    }
    std::vector<Vertex> sources(g.order());
    for (Vertex v = 0; v < g.order(); ++v) sources[v] = v;
    std::stable_sort(sources.begin(), sources.end(),
                     [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    for (Vertex v : sources) {
      if (v == root) continue;
      for (Vertex w : g.neighbors(v)) {
        const int cls = dist[w] < dist[v] ? 0 : (dist[w] == dist[v] ? 1 : 2);
        moves_by_class[cls].push_back({v, w});
      }
    }
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   budget.time_limit);
  }

  static void encode(const std::vector<int>& p, std::string& key) {
    key.clear();
    for (int c : p) {
      if (c < 255) {
        key.push_back(static_cast<char>(c));
      } else {
        key.push_back(static_cast<char>(255));
        for (int shift = 0; shift < 32; shift += 8) {
          key.push_back(static_cast<char>((c >> shift) & 0xff));
        }
      }
    }
  }

  void charge() {
    if (hit) throw BudgetHit{};
    ++states;
    if (states > budget.max_states) {
      hit = true;
      throw BudgetHit{};
    }
    if ((states & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
      hit = true;
      throw BudgetHit{};
    }
  }

  // Sum p(v) 2^-d(v) < target means no sequence of moves reaches the root.
  bool potential_too_low(const std::vector<int>& p) const {
    if (max_dist > kMaxPotentialShift) return false;
    u128 total = 0;
    const u128 need =
        static_cast<u128>(target) << max_dist;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (p[v] == 0) continue;
      total += static_cast<u128>(p[v]) << (max_dist - dist[v]);
      if (total >= need) return false;
    }
    return true;
  }

  // A vertex at distance d with target * 2^d pebbles walks them home alone.
  Vertex lone_solver(const std::vector<int>& p) const {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == root || p[v] == 0 || dist[v] > 30) continue;
      if (static_cast<std::int64_t>(p[v]) >=
          static_cast<std::int64_t>(target) << dist[v]) {
        return v;
      }
    }
    return -1;
  }

  // Breadth-first tree with weights 2^(D - d(v)): if w.p > w.1 then greedy
  // moves toward the parent keep w.p fixed until a pebble lands on the root.
  bool tree_solvable(const std::vector<int>& p) const {
    if (target != 1 || max_dist > kMaxPotentialShift) return false;
    i128 excess = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == root) continue;
      excess += static_cast<i128>(p[v] - 1) << (max_dist - dist[v]);
    }
    return excess > 0;
  }

  bool dfs(std::vector<int>& p, std::string& scratch) {
    if (p[root] >= target) return true;
    if (potential_too_low(p)) return false;
    if (lone_solver(p) >= 0) return true;
    if (tree_solvable(p)) return true;
    encode(p, scratch);
    if (auto it = memo.find(scratch); it != memo.end()) {
      return it->second.from >= 0;
    }
    std::string key = scratch;
    charge();
    for (const auto& group : moves_by_class) {
      for (const auto& m : group) {
        if (p[m.from] < 2) continue;
        p[m.from] -= 2;
        p[m.to] += 1;
        const bool ok = dfs(p, scratch);
        p[m.from] += 2;
        p[m.to] -= 1;
        if (ok) {
          memo.emplace(std::move(key),
                       MemoEntry{static_cast<std::int16_t>(m.from),
                                 static_cast<std::int16_t>(m.to)});
          return true;
        }
      }
    }
    memo.emplace(std::move(key), MemoEntry{-1, -1});
    return false;
  }

  // Rebuilds a move sequence for a configuration dfs() reported solvable,
  // following the same shortcut order dfs() used.
  std::vector<PebblingMove> witness(std::vector<int> p) const {
    std::vector<PebblingMove> out;
    std::string key;
    auto push = [&](Vertex from, Vertex to) {
      p[from] -= 2;
      p[to] += 1;
      out.push_back({from, to});
    };
    while (p[root] < target) {
      if (Vertex v = lone_solver(p); v >= 0) {
        std::int64_t moves = static_cast<std::int64_t>(target)
                             << (dist[v] - 1);
        for (Vertex cur = v; cur != root; cur = tree_parent[cur]) {
          for (std::int64_t i = 0; i < moves; ++i) push(cur, tree_parent[cur]);
          moves /= 2;
        }
        continue;
      }
      if (tree_solvable(p)) {
        while (p[root] < 1) {
          Vertex pick = -1;
          for (Vertex v = 0; v < g.order() && pick < 0; ++v) {
            if (v != root && p[v] >= 2) pick = v;
          }
          if (pick < 0) throw Error(ErrorKind::internal, "tree replay stuck");
          push(pick, tree_parent[pick]);
        }
        continue;
      }
      encode(p, key);
      auto it = memo.find(key);
      if (it == memo.end() || it->second.from < 0) {
        throw Error(ErrorKind::internal, "witness reconstruction failed");
      }
      push(it->second.from, it->second.to);
    }
    return out;
  }

  static std::int64_t total(const std::vector<int>& p) {
    std::int64_t s = 0;
    for (int c : p) s += c;
    return s;
  }

  bool dominated_by_known(const std::vector<int>& p, std::int64_t size) const {
    for (const auto& [qs, q] : unsolvable_store) {
      if (qs < size) break;
      bool below = true;
      for (std::size_t v = 0; v < p.size() && below; ++v) below = p[v] <= q[v];
      if (below) return true;
    }
    return false;
  }

  void remember_unsolvable(std::vector<int> p, std::int64_t size) {
    std::erase_if(unsolvable_store, [&](const auto& e) {
      if (e.first > size) return false;
      for (std::size_t v = 0; v < p.size(); ++v) {
        if (e.second[v] > p[v]) return false;
      }
      return true;
    });
    if (unsolvable_store.size() >= kDominanceStoreCap) {
      unsolvable_store.pop_back();
    }
    auto at = std::find_if(unsolvable_store.begin(), unsolvable_store.end(),
                           [&](const auto& e) { return e.first < size; });
    unsolvable_store.insert(at, {size, std::move(p)});
  }

  Verdict run(const Configuration& config, std::vector<PebblingMove>* moves) {
    if (config.order() != g.order()) {
      throw invalid_argument("configuration has " +
                             std::to_string(config.order()) +
                             " entries, graph has " +
                             std::to_string(g.order()) + " vertices");
    }
    std::vector<int> p = config.counts();
    const std::int64_t size = total(p);
    if (p[root] < target && dominated_by_known(p, size)) {
      return Verdict::unsolvable;
    }
    std::string scratch;
    bool ok = false;
    try {
      ok = dfs(p, scratch);
    } catch (const BudgetHit&) {
      return Verdict::budget_exceeded;
    }
    if (!ok) {
      remember_unsolvable(std::move(p), size);
      return Verdict::unsolvable;
    }
    if (moves != nullptr) *moves = witness(p);
    return Verdict::solvable;
  }
};

Solver::Solver(const Graph& g, Vertex root, SolverBudget budget, int target)
    : impl_(std::make_unique<Impl>(g, root, budget, target)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

SolveResult Solver::solve(const Configuration& p) {
  SolveResult result;
  result.verdict = impl_->run(p, &result.witness);
  result.states = impl_->states;
  return result;
}

Verdict Solver::decide(const Configuration& p) {
  return impl_->run(p, nullptr);
}

std::uint64_t Solver::states() const { return impl_->states; }
bool Solver::exhausted() const { return impl_->hit; }
const Graph& Solver::graph() const { return impl_->g; }
Vertex Solver::root() const { return impl_->root; }
const std::vector<int>& Solver::root_distances() const { return impl_->dist; }

SolveResult is_solvable(const Graph& g, Vertex root, const Configuration& p,
                        const SolverBudget& budget) {
  Solver solver(g, root, budget);
  return solver.solve(p);
}

}  // namespace pebble
