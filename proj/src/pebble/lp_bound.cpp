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

#include "pebble/lp_bound.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <functional>

#include "pebble/error.hpp"

namespace pebble {

namespace {

using DepthVector = std::vector<std::int8_t>;

std::string key_of(const DepthVector& d) {
  return std::string(d.begin(), d.end());
}

Strategy strategy_from_depths(const Graph& g, Vertex root,
                              const DepthVector& depth) {
  std::vector<Vertex> parent(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == root || depth[v] < 0) continue;
    if (depth[v] == 1) {
      parent[v] = root;
      continue;
    }
    for (Vertex u : g.neighbors(v)) {
      if (depth[u] == depth[v] - 1) {
        parent[v] = u;
        break;
      }
    }
  }
  return basic_tree_strategy(g, root, parent);
}

std::vector<Vertex> variables(const Graph& g, Vertex root) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != root) out.push_back(v);
  }
  return out;
}

Vertex first_uncovered(const Graph& g, Vertex root, const StrategySet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == root) continue;
    bool covered = false;
    for (const auto& st : s.strategies) {
      if (!st.weight[v].is_zero()) {
        covered = true;
        break;
      }
    }
    if (!covered) return v;
  }
  return -1;
}

void check_set(const Graph& g, Vertex root, const StrategySet& s) {
  g.require_vertex(root, "root");
  if (s.root != root) throw invalid_argument("strategy set root mismatch");
  if (s.strategies.empty()) throw invalid_argument("strategy set is empty");
  for (const auto& st : s.strategies) {
    if (st.weight.order() != g.order() || st.weight.root() != root) {
      throw invalid_argument("strategy does not match graph/root");
    }
  }
}

}  // namespace

StrategySet enumerate_tree_strategies(const Graph& g, Vertex root,
                                      const StrategyLimits& limits) {
  g.require_vertex(root, "root");
  if (limits.max_trees <= 0 || limits.max_depth <= 0) {
    throw invalid_argument("strategy limits must be positive");
  }
  const int n = g.order();
  const int max_depth = std::min(limits.max_depth, 120);
  StrategySet out;
  out.root = root;
  absl::flat_hash_set<std::string> emitted;

  auto emit = [&](const DepthVector& d) {
    if (!emitted.insert(key_of(d)).second) return true;
    if (static_cast<int>(out.strategies.size()) >= limits.max_trees) {
      out.truncated = true;
      return false;
    }
    out.strategies.push_back(strategy_from_depths(g, root, d));
    return true;
  };

  // One shortest path to every vertex, following the smallest-id parent.
  const auto dist = distances(g, root);
  for (Vertex v = 0; v < n; ++v) {
    if (v == root || dist[v] > max_depth) continue;
    DepthVector d(n, -1);
    d[root] = 0;
    for (Vertex cur = v; cur != root;) {
      d[cur] = static_cast<std::int8_t>(dist[cur]);
      for (Vertex u : g.neighbors(cur)) {
        if (dist[u] == dist[cur] - 1) {
          cur = u;
          break;
        }
      }
    }
    if (!emit(d)) return out;
  }

  // Single-branch trees, identified by their depth profile.
  absl::flat_hash_set<std::string> expanded;
  bool stop = false;
  std::function<void(DepthVector&)> grow = [&](DepthVector& d) {
    if (stop || !expanded.insert(key_of(d)).second) return;
    if (!emit(d)) {
      stop = true;
      return;
    }
    for (Vertex u = 0; u < n && !stop; ++u) {
      if (u == root || d[u] < 0 || d[u] >= max_depth) continue;
      for (Vertex v : g.neighbors(u)) {
        if (d[v] >= 0) continue;
        d[v] = static_cast<std::int8_t>(d[u] + 1);
        grow(d);
        d[v] = -1;
        if (stop) return;
      }
    }
  };
  for (Vertex c : g.neighbors(root)) {
    DepthVector d(n, -1);
    d[root] = 0;
    d[c] = 1;
    grow(d);
    if (stop) break;
  }
  return out;
}

LpProblem pebbling_lp(const Graph& g, Vertex root, const StrategySet& s) {
  check_set(g, root, s);
  const auto vars = variables(g, root);
  LpProblem lp;
  lp.c.assign(vars.size(), Rational(1));
  for (const auto& st : s.strategies) {
    std::vector<Rational> row(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) row[j] = st.weight[vars[j]];
    lp.a.push_back(std::move(row));
    lp.b.push_back(st.weight.total());
  }
  return lp;
}

LpResult lp_relaxation_bound(const Graph& g, Vertex root,
                             const StrategySet& s) {
  check_set(g, root, s);
  LpResult out;
  out.uncovered = first_uncovered(g, root, s);
  if (out.uncovered >= 0) return out;

  const LpProblem lp = pebbling_lp(g, root, s);
  const LpSolution sol = solve_lp_lazy(lp);
  if (sol.status != LpStatus::optimal) {
    throw Error(ErrorKind::internal, "covered pebbling LP reported unbounded");
  }
  out.bounded = true;
  out.optimum = sol.objective;
  out.bound = sol.objective.floor() + 1;
  out.pivots = sol.pivots;
  const auto vars = variables(g, root);
  out.primal.assign(g.order(), Rational{});
  for (std::size_t j = 0; j < vars.size(); ++j) out.primal[vars[j]] = sol.x[j];
  out.duals = sol.y;
  out.certified = certifies_optimality(lp, sol);
  return out;
}

Certificate dual_certificate(const Graph& g, Vertex root, const StrategySet& s,
                             const LpResult& lp) {
  if (!lp.bounded) throw invalid_argument("LP gave no bound");
  if (lp.duals.size() != s.strategies.size()) {
    throw invalid_argument("dual vector does not match strategy set");
  }
  std::vector<CertificateEntry> entries;
  for (std::size_t i = 0; i < s.strategies.size(); ++i) {
    if (lp.duals[i].sign() > 0) entries.push_back({s.strategies[i], lp.duals[i]});
  }
  return make_certificate(g, root, std::move(entries));
}

namespace {

struct BudgetStop {};

class IlpSearch {
 public:
  IlpSearch(const LpProblem& lp, const IlpBudget& budget)
      : lp_(lp), budget_(budget), n_(lp.c.size()) {}

  IlpResult run(int order, const std::vector<Vertex>& vars) {
    IlpResult out;
    out.bounded = true;
    best_x_.assign(n_, 0);
    std::vector<std::int64_t> lo(n_, 0);
    std::vector<std::int64_t> hi(n_, -1);  // -1: no upper bound
    std::optional<std::int64_t> root_upper;
    try {
      node(lo, hi, &root_upper);
      out.exact = true;
    } catch (const BudgetStop&) {
    }
    out.z = best_;
    out.upper = out.exact ? best_ : root_upper.value_or(best_);
    std::vector<int> counts(order, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      counts[vars[j]] = static_cast<int>(best_x_[j]);
    }
    out.witness = Configuration(counts);
    out.nodes = nodes_;
    return out;
  }

 private:
  void node(const std::vector<std::int64_t>& lo,
            const std::vector<std::int64_t>& hi,
            std::optional<std::int64_t>* root_upper) {
    if (++nodes_ > budget_.max_nodes) throw BudgetStop{};
    // Shift x = lo + x'; upper bounds become extra rows.
    LpProblem sub;
    sub.c = lp_.c;
    Rational shift;
    for (std::size_t j = 0; j < n_; ++j) shift += lp_.c[j] * Rational(static_cast<long>(lo[j]));
    for (std::size_t i = 0; i < lp_.a.size(); ++i) {
      Rational rhs = lp_.b[i];
      for (std::size_t j = 0; j < n_; ++j) {
        if (lo[j] != 0) rhs -= lp_.a[i][j] * Rational(static_cast<long>(lo[j]));
      }
      // Nonnegative rows with a negative right-hand side are infeasible.
      if (rhs.sign() < 0) return;
      sub.a.push_back(lp_.a[i]);
      sub.b.push_back(std::move(rhs));
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (hi[j] < 0) continue;
      if (hi[j] < lo[j]) return;
      std::vector<Rational> row(n_);
      row[j] = Rational(1);
      sub.a.push_back(std::move(row));
      sub.b.push_back(Rational(static_cast<long>(hi[j] - lo[j])));
    }
    const LpSolution sol = solve_lp_lazy(sub);
    if (sol.status != LpStatus::optimal) {
      throw Error(ErrorKind::internal, "bounded ILP node reported unbounded");
    }
    const std::int64_t ub = (sol.objective + shift).floor();
    if (root_upper != nullptr && !*root_upper) *root_upper = ub;
    if (ub <= best_) return;

    // Rounding down keeps every row satisfied since A >= 0.
    std::vector<std::int64_t> rounded(n_);
    std::int64_t value = 0;
    std::size_t frac = n_;
    for (std::size_t j = 0; j < n_; ++j) {
      rounded[j] = lo[j] + sol.x[j].floor();
      value += rounded[j];
      if (frac == n_ && !sol.x[j].is_integer()) frac = j;
    }
    if (value > best_) {
      best_ = value;
      best_x_ = rounded;
    }
    if (frac == n_ || ub <= best_) return;

    const std::int64_t f = lo[frac] + sol.x[frac].floor();
    auto up_lo = lo;
    up_lo[frac] = f + 1;
    node(up_lo, hi, nullptr);
    auto down_hi = hi;
    down_hi[frac] = f;
    node(lo, down_hi, nullptr);
  }

  const LpProblem& lp_;
  IlpBudget budget_;
  std::size_t n_;
  std::int64_t best_ = 0;
  std::vector<std::int64_t> best_x_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

IlpResult ilp_bound(const Graph& g, Vertex root, const StrategySet& s,
                    const IlpBudget& budget, int max_vertices) {
  check_set(g, root, s);
  if (g.order() > max_vertices) {
    throw invalid_argument("graph has " + std::to_string(g.order()) +
                           " vertices; ILP is limited to " +
                           std::to_string(max_vertices));
  }
  if (budget.max_nodes == 0) throw invalid_argument("ILP budget must be > 0");
  if (first_uncovered(g, root, s) >= 0) {
    IlpResult out;
    out.witness = Configuration(g.order());
    return out;
  }
  const LpProblem lp = pebbling_lp(g, root, s);
  IlpSearch search(lp, budget);
  return search.run(g.order(), variables(g, root));
}

}  // namespace pebble
