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

#include "pebble/class0.hpp"

#include <algorithm>

#include "pebble/error.hpp"
#include "pebble/isomorphism.hpp"

namespace pebble {

namespace {

Error not_applicable(const std::string& what) {
  return Error(ErrorKind::not_applicable, what);
}

std::string vname(Vertex v) { return "vertex " + std::to_string(v); }

// 0 on `zero`, `heavy_count` on heavy, 1 elsewhere.
Configuration fill(int n, const std::vector<bool>& zero, Vertex heavy,
                   int heavy_count) {
  Configuration p(n);
  for (Vertex w = 0; w < n; ++w) {
    if (!zero[w]) p.set(w, 1);
  }
  p.set(heavy, heavy_count);
  return p;
}

// Reason the pair fails the given statement, empty if it applies.
std::string snl_failure(const Graph& g, const std::vector<int>& dist_u,
                        Vertex u, Vertex v, int statement) {
  if (statement == 1) {
    if (g.degree(u) != 2) return "d(u) must be 2";
    if (dist_u[v] < 3) return "dist(u, v) must be at least 3";
    if (g.degree(v) > 3) return "d(v) must be at most 3";
    return {};
  }
  if (g.degree(u) != 3) return "d(u) must be 3";
  if (dist_u[v] < 4) return "dist(u, v) must be at least 4";
  if (g.degree(v) > 3) return "d(v) must be at most 3";
  for (Vertex w : g.neighbors(v)) {
    if (g.degree(w) != 3) return "neighbor " + std::to_string(w) + " of v is not a 3-vertex";
  }
  return {};
}

AuditItem check_witness(const Graph& g, std::string condition,
                        std::string detail, Vertex root, Configuration p,
                        const SolverBudget& budget, int max_vertices) {
  AuditItem item;
  item.condition = std::move(condition);
  item.status = CheckStatus::fail;
  item.detail = std::move(detail);
  item.root = root;
  if (g.order() <= max_vertices) {
    item.solver = to_string(is_solvable(g, root, p, budget).verdict);
  }
  item.witness = std::move(p);
  return item;
}

}  // namespace

std::vector<SnlTrigger> scan_snl(const Graph& g) {
  std::vector<SnlTrigger> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 2 && g.degree(u) != 3) continue;
    const auto dist = distances(g, u);
    for (Vertex v = 0; v < g.order(); ++v) {
      for (int st = 1; st <= 2; ++st) {
        if (snl_failure(g, dist, u, v, st).empty()) out.push_back({u, v, st});
      }
    }
  }
  return out;
}

Configuration snl_witness(const Graph& g, Vertex u, Vertex v) {
  g.require_vertex(u, "u");
  g.require_vertex(v, "v");
  const auto dist = distances(g, u);
  const int st = g.degree(u) == 2 ? 1 : 2;
  if (auto why = snl_failure(g, dist, u, v, st); !why.empty()) {
    throw not_applicable("small-neighborhood witness: " + why);
  }
  const int n = g.order();
  std::vector<bool> zero(n, false);
  zero[u] = true;
  for (Vertex w : g.neighbors(u)) zero[w] = true;
  for (Vertex w : g.neighbors(v)) {
    zero[w] = true;
    if (st == 2) {
      for (Vertex x : g.neighbors(w)) zero[x] = true;
    }
  }
  Configuration p = fill(n, zero, v, st == 1 ? 7 : 15);
  if (p.size() < n) {
    throw Error(ErrorKind::internal, "small-neighborhood witness too small");
  }
  return p;
}

CutWitness cut_vertex_witness(const Graph& g, Vertex u) {
  g.require_vertex(u, "u");
  const auto comp = components_without(g, u);
  const auto nbrs = g.neighbors(u);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (comp[nbrs[i]] == comp[nbrs[j]]) continue;
      CutWitness w;
      w.cut = u;
      w.heavy = nbrs[i];
      w.root = nbrs[j];
      std::vector<bool> zero(g.order(), false);
      zero[u] = zero[w.root] = true;
      w.config = fill(g.order(), zero, w.heavy, 3);
      return w;
    }
  }
  throw not_applicable(vname(u) + " is not a cut vertex");
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not_applicable";
    case CheckStatus::advisory:
      return "advisory";
  }
  return "?";
}

std::vector<AuditItem> audit_edge_bounds(const Graph& g) {
  const long n = g.order();
  const long e = g.edge_count();
  const int d = diameter(g);
  std::vector<AuditItem> out;

  AuditItem diam3{"edges_diameter3", CheckStatus::not_applicable, {}, {}, {}, {}};
  if (d >= 3) {
    const bool ok = 3 * e >= 5 * n - 11;
    diam3.status = ok ? CheckStatus::pass : CheckStatus::fail;
    diam3.detail = "3e = " + std::to_string(3 * e) + (ok ? " >= " : " < ") +
                   "5n - 11 = " + std::to_string(5 * n - 11);
  } else {
    diam3.detail = "diameter " + std::to_string(d) + " < 3";
  }
  out.push_back(std::move(diam3));

  AuditItem diam2{"edges_diameter2", CheckStatus::not_applicable, {}, {}, {}, {}};
  if (d == 2 && cut_vertices(g).empty()) {
    const bool ok = e >= 2 * n - 5;
    diam2.status = ok ? CheckStatus::pass : CheckStatus::fail;
    diam2.detail = "e = " + std::to_string(e) + (ok ? " >= " : " < ") +
                   "2n - 5 = " + std::to_string(2 * n - 5);
    if (e == 2 * n - 5) diam2.detail += " (equality)";
  } else {
    diam2.detail = d == 2 ? "has a cut vertex" : "diameter is not 2";
  }
  out.push_back(std::move(diam2));

  AuditItem sparse{"edges_three_halves", CheckStatus::pass, {}, {}, {}, {}};
  const long floor_3n2 = 3 * n / 2;
  if (e >= floor_3n2) {
    sparse.detail = "e = " + std::to_string(e) + " >= floor(3n/2) = " +
                    std::to_string(floor_3n2);
  } else {
    sparse.status = CheckStatus::advisory;
    sparse.detail = "e = " + std::to_string(e) + " < floor(3n/2) = " +
                    std::to_string(floor_3n2) + "; informational only";
  }
  out.push_back(std::move(sparse));
  return out;
}

const char* to_string(EqualityKind k) {
  switch (k) {
    case EqualityKind::petersen:
      return "petersen";
    case EqualityKind::family_F:
      return "F";
    case EqualityKind::family_G:
      return "G";
    case EqualityKind::none:
      return "none";
  }
  return "?";
}

EqualityClass classify_equality_diam2(const Graph& g) {
  EqualityClass out;
  const int n = g.order();
  if (diameter(g) != 2) {
    out.reason = "diameter is not 2";
    return out;
  }
  if (!cut_vertices(g).empty()) {
    out.reason = "graph has a cut vertex";
    return out;
  }
  if (g.edge_count() != 2 * n - 5) {
    out.reason = "edge count is not 2n - 5";
    return out;
  }
  auto try_match = [&](const Graph& t, EqualityKind kind,
                       std::vector<int> params) {
    if (auto m = find_isomorphism(g, t)) {
      out.kind = kind;
      out.params = std::move(params);
      out.mapping = std::move(*m);
      return true;
    }
    return false;
  };
  if (n == 10 && try_match(petersen_generalized(5, 2), EqualityKind::petersen, {})) {
    return out;
  }
  for (int p = 1; 2 * p <= n - 3; ++p) {
    if (try_match(family_F(p, n - 3 - p), EqualityKind::family_F,
                  {p, n - 3 - p})) {
      return out;
    }
  }
  for (int p = 1; 3 * p <= n - 4; ++p) {
    for (int q = p; p + 2 * q <= n - 4; ++q) {
      const int r = n - 4 - p - q;
      if (try_match(family_G(p, q, r), EqualityKind::family_G, {p, q, r})) {
        return out;
      }
    }
  }
  out.reason =
      "diameter-2 equality graph matches no known extremal graph; it cannot be "
      "Class 0 unless the characterization is wrong";
  return out;
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::class0:
      return "class0";
    case Conclusion::possibly_class0:
      return "possibly_class0";
    case Conclusion::not_class0:
      return "not_class0";
  }
  return "?";
}

AuditReport refute_class0(const Graph& g, const SolverBudget& budget,
                          const AuditOptions& options) {
  budget.validate();
  AuditReport rep;
  rep.n = g.order();
  rep.e = g.edge_count();
  rep.diameter = diameter(g);
  rep.min_degree = min_degree(g);
  const int check_max = options.solver_max_vertices;

  const auto cuts = cut_vertices(g);
  if (!cuts.empty()) {
    CutWitness w = cut_vertex_witness(g, cuts.front());
    rep.items.push_back(check_witness(
        g, "cut_vertex",
        vname(w.cut) + " separates " + std::to_string(w.heavy) + " from " +
            std::to_string(w.root),
        w.root, std::move(w.config), budget, check_max));
  } else {
    rep.items.push_back({"cut_vertex", CheckStatus::pass, "no cut vertex", {}, {}, {}});
  }

  const auto triggers = scan_snl(g);
  if (!triggers.empty()) {
    const auto& t = triggers.front();
    rep.items.push_back(check_witness(
        g, "small_neighborhood",
        "statement " + std::to_string(t.statement) + " with u = " +
            std::to_string(t.u) + ", v = " + std::to_string(t.v) + " (" +
            std::to_string(triggers.size()) + " applicable pairs)",
        t.u, snl_witness(g, t.u, t.v), budget, check_max));
  } else {
    rep.items.push_back(
        {"small_neighborhood", CheckStatus::pass, "no applicable pair", {}, {}, {}});
  }

  for (auto& item : audit_edge_bounds(g)) rep.items.push_back(std::move(item));

  if (rep.diameter == 2 && cuts.empty() && rep.e == 2 * rep.n - 5) {
    rep.equality = classify_equality_diam2(g);
  }

  // A solver-confirmed witness settles the question.
  for (const auto& item : rep.items) {
    if (item.status == CheckStatus::fail && item.solver == "unsolvable") {
      rep.conclusion = Conclusion::not_class0;
      rep.justification = item.condition + ": solver-confirmed witness";
      rep.root = item.root;
      rep.witness = item.witness;
      return rep;
    }
  }

  const AuditItem* theorem_fail = nullptr;
  for (const auto& item : rep.items) {
    if (item.status == CheckStatus::fail && !theorem_fail) theorem_fail = &item;
  }

  if (options.exact) {
    const Class0Result r = is_class0(g, budget, options.pebbling);
    switch (r.status) {
      case Class0Status::yes:
        rep.exact_search = "confirmed";
        if (theorem_fail) {
          throw Error(ErrorKind::internal,
                      "exact search says Class 0 but " +
                          theorem_fail->condition + " failed");
        }
        rep.conclusion = Conclusion::class0;
        rep.justification = "exact search";
        return rep;
      case Class0Status::no:
        rep.exact_search = "refuted";
        rep.conclusion = Conclusion::not_class0;
        rep.justification = "exact search";
        rep.root = r.root;
        rep.witness = r.witness;
        return rep;
      case Class0Status::budget_exceeded:
        rep.exact_search = "budget_exceeded";
        break;
    }
  }
  if (theorem_fail) {
    rep.conclusion = Conclusion::not_class0;
    rep.justification = theorem_fail->condition + ": theorem-only";
    rep.root = theorem_fail->root;
    rep.witness = theorem_fail->witness;
  }
  return rep;
}

}  // namespace pebble
