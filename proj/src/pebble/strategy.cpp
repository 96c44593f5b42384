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

#include "pebble/strategy.hpp"

#include <algorithm>

#include "pebble/error.hpp"

namespace pebble {

namespace {

std::string vname(Vertex v) { return "vertex " + std::to_string(v); }

}  // namespace

WeightFunction::WeightFunction(int n, Vertex root)
    : root_(root), w_(static_cast<std::size_t>(n)) {
  if (root < 0 || root >= n) throw invalid_argument("root out of range");
}

WeightFunction::WeightFunction(Vertex root, std::vector<Rational> weights)
    : root_(root), w_(std::move(weights)) {
  if (root < 0 || root >= order()) throw invalid_argument("root out of range");
  for (Vertex v = 0; v < order(); ++v) {
    if (w_[v].sign() < 0) {
      throw invalid_argument("negative weight at " + vname(v));
    }
  }
  if (!w_[root].is_zero()) throw invalid_argument("root weight must be 0");
}

void WeightFunction::set(Vertex v, Rational value) {
  if (v < 0 || v >= order()) throw invalid_argument("weight index out of range");
  if (value.sign() < 0) throw invalid_argument("negative weight at " + vname(v));
  if (v == root_ && !value.is_zero()) {
    throw invalid_argument("root weight must be 0");
  }
  w_[v] = std::move(value);
}

Rational WeightFunction::dot(const Configuration& p) const {
  if (p.order() != order()) {
    throw invalid_argument("configuration size does not match weights");
  }
  Rational s;
  for (Vertex v = 0; v < order(); ++v) {
    if (p[v] != 0) s += w_[v] * Rational(p[v]);
  }
  return s;
}

Rational WeightFunction::total() const {
  Rational s;
  for (const auto& x : w_) s += x;
  return s;
}

Rational WeightFunction::min_nonroot() const {
  std::optional<Rational> m;
  for (Vertex v = 0; v < order(); ++v) {
    if (v == root_) continue;
    if (!m || w_[v] < *m) m = w_[v];
  }
  return m.value_or(Rational{});
}

std::vector<Vertex> WeightFunction::zero_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (v != root_ && w_[v].is_zero()) out.push_back(v);
  }
  return out;
}

WeightFunction WeightFunction::scaled(const Rational& c) const {
  if (c.sign() < 0) throw invalid_argument("negative scale");
  WeightFunction out = *this;
  for (auto& x : out.w_) x *= c;
  return out;
}

const char* to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::tree_basic:
      return "tree_basic";
    case StrategyKind::tree_nonbasic:
      return "tree_nonbasic";
    case StrategyKind::cycle_tail:
      return "cycle_tail";
    case StrategyKind::explicit_weights:
      return "explicit";
  }
  return "?";
}

StrategyKind strategy_kind_from_string(const std::string& s) {
  if (s == "tree_basic") return StrategyKind::tree_basic;
  if (s == "tree_nonbasic") return StrategyKind::tree_nonbasic;
  if (s == "cycle_tail") return StrategyKind::cycle_tail;
  if (s == "explicit") return StrategyKind::explicit_weights;
  throw parse_error("unknown strategy kind '" + s + "'");
}

Strategy make_tree_strategy(const Graph& g, Vertex root,
                            const std::vector<Vertex>& parent,
                            std::vector<Rational> weights, bool basic) {
  g.require_vertex(root, "root");
  if (static_cast<int>(parent.size()) != g.order()) {
    throw invalid_argument("parent array has wrong length");
  }
  Strategy s;
  s.kind = basic ? StrategyKind::tree_basic : StrategyKind::tree_nonbasic;
  s.weight = WeightFunction(root, std::move(weights));
  TreeSupport t;
  t.parent = parent;
  t.in_tree.assign(g.order(), false);
  t.in_tree[root] = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (parent[v] >= 0) t.in_tree[v] = true;
  }
  s.tree = std::move(t);
  return s;
}

Strategy basic_tree_strategy(const Graph& g, Vertex root,
                             const std::vector<Vertex>& parent) {
  const int n = g.order();
  std::vector<int> depth(n, -1);
  depth[root] = 0;
  // Parent chains are short; resolve depths by repeated relaxation.
  for (int round = 0; round < n; ++round) {
    for (Vertex v = 0; v < n; ++v) {
      if (parent[v] >= 0 && depth[parent[v]] >= 0) depth[v] = depth[parent[v]] + 1;
    }
  }
  int h = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] >= 0 && depth[v] < 0) {
      throw invalid_argument("tree parent chain from " + vname(v) +
                             " does not reach the root");
    }
    h = std::max(h, depth[v]);
  }
  std::vector<Rational> w(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v != root && parent[v] >= 0) w[v] = Rational::pow2(h - depth[v]);
  }
  return make_tree_strategy(g, root, parent, std::move(w), true);
}

std::optional<Violation> validate_tree_strategy(const Graph& g,
                                                const Strategy& s) {
  if (s.kind != StrategyKind::tree_basic &&
      s.kind != StrategyKind::tree_nonbasic) {
    return Violation{-1, "not a tree strategy"};
  }
  if (!s.tree) return Violation{-1, "missing tree support"};
  const auto& t = *s.tree;
  const int n = g.order();
  const Vertex r = s.weight.root();
  if (s.weight.order() != n || static_cast<int>(t.parent.size()) != n ||
      static_cast<int>(t.in_tree.size()) != n) {
    return Violation{-1, "support size does not match graph"};
  }
  if (!g.contains(r)) return Violation{r, "root is not a vertex"};
  if (!t.in_tree[r] || t.parent[r] != -1) {
    return Violation{r, "root must be in the tree without a parent"};
  }
  std::vector<bool> attached(n, false);
  for (const auto& a : s.attachments) {
    if (g.contains(a.vertex)) attached[a.vertex] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == r) continue;
    const Vertex p = t.parent[v];
    if (!t.in_tree[v]) {
      if (p != -1) return Violation{v, "off-tree vertex has a parent"};
      if (!attached[v] && !s.weight[v].is_zero()) {
        return Violation{v, "nonzero weight off the tree"};
      }
      continue;
    }
    if (attached[v]) return Violation{v, "tree vertex is also attached"};
    if (!g.contains(p) || !t.in_tree[p]) {
      return Violation{v, "parent is not a tree vertex"};
    }
    if (!g.adjacent(v, p)) return Violation{v, "tree edge to parent is not an edge of the graph"};
  }
  // Every tree vertex must reach the root.
  for (Vertex v = 0; v < n; ++v) {
    if (!t.in_tree[v]) continue;
    Vertex cur = v;
    for (int steps = 0; cur != r; ++steps) {
      if (steps > n) return Violation{v, "parent pointers form a cycle"};
      cur = t.parent[cur];
    }
  }
  const bool basic = s.kind == StrategyKind::tree_basic;
  for (Vertex v = 0; v < n; ++v) {
    if (v == r || !t.in_tree[v] || t.parent[v] == r) continue;
    const Rational twice = Rational(2) * s.weight[v];
    const Rational& up = s.weight[t.parent[v]];
    if (basic && up != twice) {
      return Violation{v, "basic tree needs w(parent) = 2 w(v); have " +
                              up.str() + " vs " + twice.str()};
    }
    if (!basic && up < twice) {
      return Violation{v, "tree needs w(parent) >= 2 w(v); have " + up.str() +
                              " vs " + twice.str()};
    }
  }
  return validate_attachments(g, s, t.in_tree);
}

std::optional<Violation> validate_attachments(const Graph& g,
                                              const Strategy& s,
                                              const std::vector<bool>& base) {
  std::vector<bool> placed = base;
  for (const auto& a : s.attachments) {
    if (!g.contains(a.vertex) || !g.contains(a.parent)) {
      return Violation{a.vertex, "attachment refers to an unknown vertex"};
    }
    if (a.vertex == s.weight.root()) {
      return Violation{a.vertex, "root cannot be attached"};
    }
    if (placed[a.vertex]) {
      return Violation{a.vertex, "attached vertex already has a role"};
    }
    if (!placed[a.parent] || a.parent == s.weight.root()) {
      return Violation{a.vertex, "attachment parent is not a strategy vertex"};
    }
    if (!g.adjacent(a.vertex, a.parent)) {
      return Violation{a.vertex, "attachment edge is not an edge of the graph"};
    }
    if (Rational(2) * s.weight[a.vertex] > s.weight[a.parent]) {
      return Violation{a.vertex, "attached weight exceeds half of parent " +
                                     std::to_string(a.parent)};
    }
    placed[a.vertex] = true;
  }
  return std::nullopt;
}

Strategy attach_tree(const Graph& g, const Strategy& s, Vertex attach_at,
                     const std::vector<WeightedEdge>& subtree) {
  g.require_vertex(attach_at, "attach_at");
  if (attach_at == s.weight.root()) {
    throw invalid_argument("cannot attach at the root");
  }
  if (s.weight.order() != g.order()) {
    throw invalid_argument("strategy does not match graph");
  }
  Strategy out = s;
  std::vector<bool> weighted(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    weighted[v] = !s.weight[v].is_zero();
  }
  if (!weighted[attach_at]) {
    throw invalid_argument("attach_at " + vname(attach_at) +
                           " carries no weight");
  }
  bool first = true;
  for (const auto& e : subtree) {
    g.require_vertex(e.vertex);
    g.require_vertex(e.parent);
    const std::string edge =
        std::to_string(e.parent) + "-" + std::to_string(e.vertex);
    if (first && e.parent != attach_at) {
      throw invalid_argument("first attached edge must start at attach_at");
    }
    first = false;
    if (!weighted[e.parent]) {
      throw invalid_argument("edge " + edge + ": parent carries no weight");
    }
    if (weighted[e.vertex] || e.vertex == s.weight.root()) {
      throw invalid_argument("edge " + edge + ": child already weighted");
    }
    if (!g.adjacent(e.vertex, e.parent)) {
      throw invalid_argument("edge " + edge + " is not in the graph");
    }
    if (e.weight.sign() < 0 ||
        Rational(2) * e.weight > out.weight[e.parent]) {
      throw invalid_argument("edge " + edge + ": child weight " +
                             e.weight.str() + " exceeds half of " +
                             out.weight[e.parent].str());
    }
    out.weight.set(e.vertex, e.weight);
    out.attachments.push_back({e.vertex, e.parent});
    weighted[e.vertex] = true;
  }
  return out;
}

WeightFunction combine(const std::vector<WeightedEntry>& entries) {
  if (entries.empty()) throw invalid_argument("combine needs an entry");
  const WeightFunction& first = *entries.front().weight;
  bool any = false;
  std::vector<Rational> acc(first.order());
  for (const auto& e : entries) {
    if (e.weight->root() != first.root()) {
      throw invalid_argument("combine: root mismatch (" +
                             std::to_string(e.weight->root()) + " vs " +
                             std::to_string(first.root()) + ")");
    }
    if (e.weight->order() != first.order()) {
      throw invalid_argument("combine: size mismatch");
    }
    if (e.coefficient.sign() < 0) {
      throw invalid_argument("combine: negative coefficient");
    }
    if (!e.coefficient.is_zero()) any = true;
    for (Vertex v = 0; v < first.order(); ++v) {
      acc[v] += e.coefficient * (*e.weight)[v];
    }
  }
  if (!any) throw invalid_argument("combine: all coefficients are zero");
  return WeightFunction(first.root(), std::move(acc));
}

CoveringBound covering_bound(const Graph& g, Vertex root,
                             const WeightFunction& w) {
  g.require_vertex(root, "root");
  if (w.order() != g.order() || w.root() != root) {
    throw invalid_argument("weight function does not match graph/root");
  }
  if (auto zeros = w.zero_vertices(); !zeros.empty()) {
    throw invalid_argument("covering bound undefined: " + vname(zeros.front()) +
                           " has weight 0");
  }
  CoveringBound out;
  out.sum = w.total();
  out.minimum = w.min_nonroot();
  out.bound = (out.sum / out.minimum).floor() + 1;
  return out;
}

}  // namespace pebble
