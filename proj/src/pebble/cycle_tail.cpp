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

#include "pebble/cycle_tail.hpp"

#include "pebble/error.hpp"

namespace pebble {

namespace {

constexpr int kMaxExponent = 60;

void check_params(int t, int tail) {
  if (t < 2) throw invalid_argument("cycle_tail: t must be >= 2");
  if (tail < 0) throw invalid_argument("cycle_tail: tail must be >= 0");
  if (t + tail > kMaxExponent) throw invalid_argument("cycle_tail: too long");
}

// Vertices of the template in role order with their template weights.
struct Role {
  Vertex v;
  Rational weight;
};

std::vector<Role> roles_of(const CycleTailSupport& s) {
  std::vector<Role> out;
  const int t = s.t;
  for (int i = 1; i <= t - 1; ++i) {
    out.push_back({s.left[i - 1], Rational::pow2(i)});
    out.push_back({s.right[i - 1], Rational::pow2(i)});
  }
  for (int k = 0; k <= s.tail; ++k) {
    out.push_back({s.path[k], Rational::pow2(t + k)});
  }
  out.push_back({s.x0, cycle_tail_alpha(t, s.tail)});
  return out;
}

// Edges the template needs, in the same role vocabulary.
std::vector<Edge> required_edges(const CycleTailSupport& s, Vertex root) {
  std::vector<Edge> out;
  const int t = s.t;
  out.push_back({root, s.path.back()});
  for (int k = 0; k < s.tail; ++k) out.push_back({s.path[k], s.path[k + 1]});
  for (const auto* side : {&s.left, &s.right}) {
    out.push_back({s.path[0], (*side)[t - 2]});
    for (int i = t - 1; i >= 2; --i) {
      out.push_back({(*side)[i - 1], (*side)[i - 2]});
    }
    out.push_back({(*side)[0], s.x0});
  }
  return out;
}

std::optional<Violation> check_shape(const Graph& g, Vertex root,
                                     const CycleTailSupport& s) {
  if (s.t < 2 || s.tail < 0) return Violation{-1, "bad (t, tail) parameters"};
  if (static_cast<int>(s.left.size()) != s.t - 1 ||
      static_cast<int>(s.right.size()) != s.t - 1 ||
      static_cast<int>(s.path.size()) != s.tail + 1) {
    return Violation{-1, "role lists do not match (t, tail)"};
  }
  if (s.scale.sign() <= 0) return Violation{-1, "scale must be positive"};
  std::vector<bool> used(g.order(), false);
  if (!g.contains(root)) return Violation{root, "root is not a vertex"};
  used[root] = true;
  for (const auto& role : roles_of(s)) {
    if (!g.contains(role.v)) return Violation{role.v, "role is not a vertex"};
    if (used[role.v]) return Violation{role.v, "vertex used for two roles"};
    used[role.v] = true;
  }
  for (const auto& [a, b] : required_edges(s, root)) {
    if (!g.adjacent(a, b)) {
      return Violation{a, "missing template edge " + std::to_string(a) + "-" +
                              std::to_string(b)};
    }
  }
  return std::nullopt;
}

}  // namespace

Rational cycle_tail_alpha(int t, int tail) {
  check_params(t, tail);
  const int s = t + tail;
  const Rational den = Rational::pow2(s) - Rational(1);
  if (den.is_zero()) throw invalid_argument("cycle_tail: degenerate alpha");
  return (Rational::pow2(s) + Rational::pow2(t - 1) - Rational(2)) / den;
}

Rational cycle_tail_total(int t, int tail) {
  const int s = t + tail;
  return cycle_tail_alpha(t, tail) + Rational::pow2(s + 1) + Rational::pow2(t) -
         Rational(4);
}

CycleTailInstance cycle_tail_weights(int t, int tail) {
  check_params(t, tail);
  CycleTailSupport roles;
  roles.t = t;
  roles.tail = tail;
  for (int k = 0; k <= tail; ++k) roles.path.push_back(tail + 1 - k);
  for (int i = 1; i <= t - 1; ++i) {
    roles.left.push_back(tail + 1 + i);
    roles.right.push_back(tail + t + i);
  }
  roles.x0 = tail + 2 * t;
  const int n = tail + 2 * t + 1;
  std::vector<Edge> edges = required_edges(roles, 0);
  Graph g = Graph::from_edges(n, edges);
  CycleTailInstance out{g, 0, embed_cycle_tail(g, 0, roles),
                        cycle_tail_alpha(t, tail), cycle_tail_total(t, tail)};
  return out;
}

Strategy embed_cycle_tail(const Graph& g, Vertex root,
                          const CycleTailSupport& roles) {
  if (auto bad = check_shape(g, root, roles)) {
    throw invalid_argument("cycle_tail embedding: " + bad->reason);
  }
  Strategy s;
  s.kind = StrategyKind::cycle_tail;
  s.weight = WeightFunction(g.order(), root);
  for (const auto& role : roles_of(roles)) {
    s.weight.set(role.v, role.weight * roles.scale);
  }
  s.cycle = roles;
  return s;
}

std::optional<Violation> validate_cycle_tail(const Graph& g,
                                             const Strategy& s) {
  if (s.kind != StrategyKind::cycle_tail) {
    return Violation{-1, "not a cycle_tail strategy"};
  }
  if (!s.cycle) return Violation{-1, "missing cycle_tail support"};
  if (s.weight.order() != g.order()) {
    return Violation{-1, "weights do not match graph"};
  }
  const Vertex root = s.weight.root();
  if (auto bad = check_shape(g, root, *s.cycle)) return bad;
  std::vector<bool> base(g.order(), false);
  base[root] = true;
  for (const auto& role : roles_of(*s.cycle)) {
    base[role.v] = true;
    if (s.weight[role.v] != role.weight * s.cycle->scale) {
      return Violation{role.v, "weight " + s.weight[role.v].str() +
                                   " differs from template " +
                                   (role.weight * s.cycle->scale).str()};
    }
  }
  std::vector<bool> attached(g.order(), false);
  for (const auto& a : s.attachments) {
    if (g.contains(a.vertex)) attached[a.vertex] = true;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!base[v] && !attached[v] && !s.weight[v].is_zero()) {
      return Violation{v, "nonzero weight outside the template"};
    }
  }
  return validate_attachments(g, s, base);
}

}  // namespace pebble
