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
#include <string>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/rational.hpp"

namespace pebble {

/// Nonnegative rational weights on every vertex, zero on the root.
class WeightFunction {
 public:
  WeightFunction() = default;
  WeightFunction(int n, Vertex root);
  /// Checks size, nonnegativity and w(root) = 0.
  WeightFunction(Vertex root, std::vector<Rational> weights);

  int order() const { return static_cast<int>(w_.size()); }
  Vertex root() const { return root_; }
  const Rational& operator[](Vertex v) const { return w_[v]; }
  const std::vector<Rational>& weights() const { return w_; }

  /// Throws on negative weights or a nonzero root weight.
  void set(Vertex v, Rational value);

  /// w . p
  Rational dot(const Configuration& p) const;
  /// w . 1, the sum over all vertices (the root contributes 0).
  Rational total() const;
  /// Smallest weight over non-root vertices.
  Rational min_nonroot() const;
  /// Non-root vertices carrying weight 0, ascending.
  std::vector<Vertex> zero_vertices() const;

  WeightFunction scaled(const Rational& c) const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) =
      default;

 private:
  Vertex root_ = 0;
  std::vector<Rational> w_;
};

enum class StrategyKind { tree_basic, tree_nonbasic, cycle_tail, explicit_weights };

const char* to_string(StrategyKind k);
StrategyKind strategy_kind_from_string(const std::string& s);

/// A vertex hung off an existing strategy vertex with at most half its
/// parent's weight.
struct Attachment {
  Vertex vertex;
  Vertex parent;

  friend bool operator==(const Attachment&, const Attachment&) = default;
};

/// Tree support: parent[v] for tree vertices other than the root, -1 for the
/// root and for vertices off the tree.
struct TreeSupport {
  std::vector<Vertex> parent;
  std::vector<bool> in_tree;
};

/// Roles of a cycle-with-tail embedding. The template is an even cycle
/// x_t, x'_{t-1}, ..., x'_1, x_0, x''_1, ..., x''_{t-1}, x_t plus the tail
/// x_t, x_{t+1}, ..., x_s, with x_s adjacent to the root (s = t + tail).
/// Template weights are 2^i on x'_i, x''_i and x_i, and alpha on x_0; the
/// strategy carries them multiplied by `scale`.
struct CycleTailSupport {
  int t = 2;
  int tail = 0;
  Vertex x0 = -1;
  /// left[i - 1] = x'_i and right[i - 1] = x''_i for 1 <= i <= t - 1.
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  /// path[k] = x_{t+k} for 0 <= k <= tail.
  std::vector<Vertex> path;
  Rational scale{1};
};

struct Strategy {
  StrategyKind kind = StrategyKind::explicit_weights;
  WeightFunction weight;
  std::optional<TreeSupport> tree;
  std::optional<CycleTailSupport> cycle;
  std::vector<Attachment> attachments;
  /// Explicit strategies whose validity is taken on trust rather than
  /// checked. Reported as such by certificate verification.
  bool trusted = false;
  std::string note;
};

/// First failed condition of a structural check.
struct Violation {
  Vertex vertex = -1;
  std::string reason;
};

/// Builds a tree strategy from parent pointers and weights.
Strategy make_tree_strategy(const Graph& g, Vertex root,
                            const std::vector<Vertex>& parent,
                            std::vector<Rational> weights, bool basic);

/// Basic strategy on the given tree with the deepest leaves weighted 1 and
/// weights doubling toward the root.
Strategy basic_tree_strategy(const Graph& g, Vertex root,
                             const std::vector<Vertex>& parent);

/// Tree checks: the support is a tree in g containing the root, weights
/// vanish off the tree, and w(parent) = 2 w(v) (basic) or w(parent) >=
/// 2 w(v) (nonbasic) for every tree vertex whose parent is not the root.
/// Attachments are checked separately and may sit anywhere.
std::optional<Violation> validate_tree_strategy(const Graph& g,
                                                const Strategy& s);

/// Checks that every attachment hangs off a weighted vertex of the base
/// strategy (or an earlier attachment) by an edge of g with w(child) <=
/// w(parent) / 2, and that attached vertices carry no other role.
std::optional<Violation> validate_attachments(const Graph& g,
                                              const Strategy& s,
                                              const std::vector<bool>& base);

struct WeightedEdge {
  Vertex vertex;
  Vertex parent;
  Rational weight;
};

/// Extends s by the given vertices, each hung from an already weighted
/// vertex (the first must hang from `attach_at`). Throws invalid_argument
/// naming the edge when a child exceeds half its parent.
Strategy attach_tree(const Graph& g, const Strategy& s, Vertex attach_at,
                     const std::vector<WeightedEdge>& subtree);

struct WeightedEntry {
  const WeightFunction* weight;
  Rational coefficient;
};

/// Pointwise sum of coefficient * weight. Any nonnegative coefficients are
/// accepted as long as they are not all zero.
WeightFunction combine(const std::vector<WeightedEntry>& entries);

struct CoveringBound {
  Rational sum;      // S = sum over v != r of w(v)
  Rational minimum;  // C = min over v != r of w(v)
  std::int64_t bound = 0;  // floor(S / C) + 1
};

/// pi(G, r) <= floor(S / C) + 1 for a valid w. Throws invalid_argument if a
/// non-root vertex has weight 0.
CoveringBound covering_bound(const Graph& g, Vertex root,
                             const WeightFunction& w);

}  // namespace pebble
