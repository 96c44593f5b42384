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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "pebble/class0.hpp"
#include "pebble/error.hpp"

using namespace pebble;

namespace {

// Same graph under a random vertex order.
Graph shuffled(const Graph& g, std::uint64_t seed) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), std::move(edges));
}

const AuditItem& item(const AuditReport& r, const std::string& name) {
  for (const auto& i : r.items) {
    if (i.condition == name) return i;
  }
  FAIL("missing item " << name);
  return r.items.front();
}

}  // namespace

TEST_CASE("small-neighborhood witnesses on P(8,2)") {
  const Graph g = petersen_generalized(8, 2);
  const auto triggers = scan_snl(g);
  REQUIRE_FALSE(triggers.empty());
  const auto& t = triggers.front();
  CHECK(t.statement == 2);
  const Configuration p = snl_witness(g, t.u, t.v);
  CHECK(p.size() >= g.order());
  CHECK(p[t.v] == 15);
  CHECK(is_solvable(g, t.u, p).verdict == Verdict::unsolvable);
}

TEST_CASE("statement 1 on a long cycle") {
  const Graph c = cycle(8);
  const auto triggers = scan_snl(c);
  REQUIRE_FALSE(triggers.empty());
  CHECK(triggers.front().statement == 1);
  for (const auto& t : triggers) {
    const Configuration p = snl_witness(c, t.u, t.v);
    CHECK(p.size() >= c.order());
    CHECK_FALSE(oracle::solvable(c, t.u, p.counts()));
  }
}

TEST_CASE("inapplicable pairs are refused") {
  const Graph c = cycle(5);
  CHECK(scan_snl(c).empty());
  try {
    snl_witness(c, 0, 2);
    FAIL("expected not_applicable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_applicable);
    CHECK(std::string(e.what()).find("dist") != std::string::npos);
  }
  CHECK_THROWS_AS(cut_vertex_witness(c, 0), Error);
}

TEST_CASE("cut vertex witness") {
  const Graph g = path(5);
  const CutWitness w = cut_vertex_witness(g, 2);
  CHECK(w.config.size() == g.order());
  CHECK(w.config[w.heavy] == 3);
  CHECK(w.config[w.cut] == 0);
  CHECK_FALSE(oracle::solvable(g, w.root, w.config.counts()));
}

TEST_CASE("edge bounds") {
  const auto c5 = audit_edge_bounds(cycle(5));
  CHECK(c5[0].status == CheckStatus::not_applicable);
  CHECK(c5[1].status == CheckStatus::pass);
  CHECK(c5[2].status == CheckStatus::advisory);  // 5 < floor(15/2)

  const auto c8 = audit_edge_bounds(cycle(8));  // 24 < 29
  CHECK(c8[0].status == CheckStatus::fail);

  // Remove one edge from F(2,2): diameter stays 2, e = 2n - 6.
  const Graph f = family_F(2, 2);
  std::vector<Edge> edges = f.edges();
  edges.erase(std::find(edges.begin(), edges.end(), Edge{1, 2}));
  const Graph thin = Graph::from_edges(f.order(), edges);
  if (diameter(thin) == 2 && cut_vertices(thin).empty()) {
    CHECK(audit_edge_bounds(thin)[1].status == CheckStatus::fail);
  }
}

TEST_CASE("equality case classification") {
  const auto pet = classify_equality_diam2(shuffled(petersen_generalized(5, 2), 3));
  CHECK(pet.kind == EqualityKind::petersen);

  const Graph f = shuffled(family_F(3, 2), 5);
  const auto ef = classify_equality_diam2(f);
  CHECK(ef.kind == EqualityKind::family_F);
  CHECK(ef.params == std::vector<int>{2, 3});
  const Graph tmpl = family_F(2, 3);
  for (auto [u, v] : f.edges()) CHECK(tmpl.adjacent(ef.mapping[u], ef.mapping[v]));

  const auto eg = classify_equality_diam2(shuffled(family_G(2, 1, 2), 9));
  CHECK(eg.kind == EqualityKind::family_G);
  CHECK(eg.params == std::vector<int>{1, 2, 2});

  CHECK(classify_equality_diam2(complete(5)).kind == EqualityKind::none);
  CHECK(classify_equality_diam2(hypercube(3)).kind == EqualityKind::none);
}

TEST_CASE("audit conclusions") {
  const auto p82 = refute_class0(petersen_generalized(8, 2));
  CHECK(p82.conclusion == Conclusion::not_class0);
  CHECK(item(p82, "small_neighborhood").solver == "unsolvable");
  REQUIRE(p82.witness);
  CHECK(p82.witness->size() >= 16);

  const auto k5 = refute_class0(complete(5));
  CHECK(k5.conclusion == Conclusion::class0);
  CHECK(k5.exact_search == "confirmed");

  AuditOptions quick;
  quick.exact = false;
  const auto k5q = refute_class0(complete(5), {}, quick);
  CHECK(k5q.conclusion == Conclusion::possibly_class0);
  CHECK(k5q.exact_search == "skipped");

  const auto pet = refute_class0(petersen_generalized(5, 2));
  REQUIRE(pet.equality);
  CHECK(pet.equality->kind == EqualityKind::petersen);
  CHECK(pet.conclusion == Conclusion::class0);

  const auto tree = refute_class0(path(4));
  CHECK(tree.conclusion == Conclusion::not_class0);
  CHECK(item(tree, "cut_vertex").solver == "unsolvable");

  // Above the re-check size the verdict rests on the theorems alone.
  AuditOptions large;
  large.exact = false;
  large.solver_max_vertices = 4;
  const auto c12 = refute_class0(cycle(12), {}, large);
  CHECK(c12.conclusion == Conclusion::not_class0);
  CHECK(c12.justification.find("theorem-only") != std::string::npos);
}

TEST_CASE("cloning keeps small graphs Class 0") {
  for (const Graph& base : {family_F(1, 1), family_G(1, 1, 1), complete(4)}) {
    REQUIRE(is_class0(base).status == Class0Status::yes);
    for (Vertex v = 0; v < base.order(); ++v) {
      const Graph c = clone_vertex(base, v);
      if (c.order() > 9) continue;
      CHECK(is_class0(c).status == Class0Status::yes);
    }
  }
}
