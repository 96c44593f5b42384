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

#include "doctest.h"
#include "pebble/error.hpp"
#include "pebble/graph.hpp"
#include "pebble/isomorphism.hpp"
#include "pebble/rational.hpp"

using namespace pebble;

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-7").str() == "-7/1");
  CHECK(Rational::parse("38/31").floor() == 1);
  CHECK(Rational::parse("-1/2").floor() == -1);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK(Rational::parse("1/3") + Rational::parse("1/6") == Rational::parse("1/2"));
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), Error);          // disconnected
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}, {0, 1}}), Error);  // loop
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), Error);  // duplicate
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), Error);
}

TEST_CASE("generator sizes") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(path(n).edge_count() == n - 1);
    CHECK(diameter(path(n)) == n - 1);
    CHECK(complete(n).edge_count() == n * (n - 1) / 2);
  }
  for (int n = 3; n <= 8; ++n) {
    CHECK(cycle(n).edge_count() == n);
    CHECK(diameter(cycle(n)) == n / 2);
  }
  for (int d = 1; d <= 4; ++d) {
    const Graph q = hypercube(d);
    CHECK(q.order() == (1 << d));
    CHECK(q.edge_count() == d * (1 << (d - 1)));
    CHECK(diameter(q) == d);
  }
  const Graph pet = petersen_generalized(5, 2);
  CHECK(pet.order() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(diameter(pet) == 2);
  const Graph p82 = petersen_generalized(8, 2);
  CHECK(p82.order() == 16);
  CHECK(p82.edge_count() == 24);

  const Graph l = lemke();
  CHECK(l.order() == 8);
  CHECK(l.edge_count() == 13);

  const Graph b4 = bruhat(4);
  CHECK(b4.order() == 24);
  CHECK(b4.edge_count() == 36);
  CHECK(diameter(b4) == 6);
  CHECK(bruhat(3).order() == 6);
  CHECK_THROWS_AS(bruhat(7), Error);
  CHECK_THROWS_AS(bruhat(1), Error);
}

TEST_CASE("family members") {
  CHECK(isomorphic(family_F(1, 1), cycle(5)));
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 6; ++q) {
      const Graph f = family_F(p, q);
      CHECK(f.edge_count() == 2 * f.order() - 5);
      CHECK(diameter(f) == 2);
      CHECK(cut_vertices(f).empty());
    }
  }
  const Graph g = family_G(1, 1, 1);
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 9);
  CHECK_THROWS_AS(family_F(0, 1), Error);
  CHECK_THROWS_AS(family_G(1, 0, 1), Error);
}

TEST_CASE("distances and cut vertices") {
  CHECK(distances(path(4), 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(cut_vertices(path(4)) == std::vector<Vertex>{1, 2});
  CHECK(cut_vertices(cycle(5)).empty());
  CHECK(min_degree(hypercube(3)) == 3);
  const auto comp = components_without(path(3), 1);
  CHECK(comp[0] != comp[2]);
}

TEST_CASE("clone vertex copies the neighborhood") {
  const Graph f = family_F(1, 1);
  // Vertex 3 subdivides v-a; its clone gives the next family member.
  const Graph c = clone_vertex(f, 3);
  CHECK(c.order() == 6);
  CHECK(isomorphic(c, family_F(2, 1)));
  const Graph g = clone_vertex(family_G(1, 1, 1), 4);
  CHECK(isomorphic(g, family_G(2, 1, 1)));
}

TEST_CASE("isomorphism search") {
  const Graph a = cycle(6);
  const Graph b = Graph::from_edges(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  const auto m = find_isomorphism(a, b);
  REQUIRE(m);
  for (auto [u, v] : a.edges()) CHECK(b.adjacent((*m)[u], (*m)[v]));
  CHECK_FALSE(isomorphic(cycle(6), petersen_generalized(3, 1)));
  CHECK_FALSE(isomorphic(path(4), cycle(4)));
  CHECK(isomorphic(petersen_generalized(5, 2), petersen_generalized(5, 2)));
  CHECK_FALSE(isomorphic(petersen_generalized(5, 1), petersen_generalized(5, 2)));
}
