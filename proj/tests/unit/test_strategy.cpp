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

#include "doctest.h"
#include "oracle.hpp"
#include "pebble/cycle_tail.hpp"
#include "pebble/error.hpp"
#include "pebble/strategy.hpp"
#include "pebble/validity.hpp"

using namespace pebble;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

std::vector<mpq_class> as_mpq(const WeightFunction& w) {
  std::vector<mpq_class> out;
  for (const auto& x : w.weights()) out.emplace_back(x.str());
  return out;
}

WeightFunction weights(Vertex root, std::vector<const char*> ws) {
  std::vector<Rational> v;
  for (const char* s : ws) v.push_back(R(s));
  return WeightFunction(root, std::move(v));
}

}  // namespace

TEST_CASE("weight function invariants") {
  CHECK_THROWS_AS(weights(0, {"1", "1"}), Error);
  CHECK_THROWS_AS(weights(0, {"0", "-1"}), Error);
  const WeightFunction w = weights(0, {"0", "4", "2", "1"});
  CHECK(w.total() == Rational(7));
  CHECK(w.dot(Configuration({5, 1, 0, 3})) == Rational(7));
  CHECK(w.min_nonroot() == Rational(1));
  CHECK(w.scaled(R("1/2"))[1] == Rational(2));
}

TEST_CASE("tree strategies on C5") {
  const Graph g = cycle(5);
  const Strategy a = make_tree_strategy(g, 0, {-1, 0, 1, 2, -1},
                                        {R("0"), R("4"), R("2"), R("1"), R("0")}, true);
  const Strategy b = make_tree_strategy(g, 0, {-1, -1, 3, 4, 0},
                                        {R("0"), R("0"), R("1"), R("2"), R("4")}, true);
  CHECK_FALSE(validate_tree_strategy(g, a));
  CHECK_FALSE(validate_tree_strategy(g, b));
  const WeightFunction w = combine({{&a.weight, Rational(1)}, {&b.weight, Rational(1)}});
  const CoveringBound c = covering_bound(g, 0, w);
  CHECK(c.sum == Rational(14));
  CHECK(c.minimum == Rational(3));
  CHECK(c.bound == 5);
  CHECK_THROWS_AS(covering_bound(g, 0, a.weight), Error);
}

TEST_CASE("tree checks catch bad doubling and non-edges") {
  const Graph g = path(4);
  Strategy s = make_tree_strategy(g, 0, {-1, 0, 1, 2},
                                  {R("0"), R("4"), R("2"), R("1")}, true);
  CHECK_FALSE(validate_tree_strategy(g, s));
  s.weight.set(2, R("3"));
  CHECK(validate_tree_strategy(g, s));  // basic needs exact halving
  s.kind = StrategyKind::tree_nonbasic;
  CHECK(validate_tree_strategy(g, s));  // 4 < 2 * 3
  s.weight.set(2, R("2"));
  s.weight.set(3, R("3/4"));
  CHECK_FALSE(validate_tree_strategy(g, s));
  const Strategy off = make_tree_strategy(g, 0, {-1, 0, 0, 2},
                                          {R("0"), R("4"), R("2"), R("1")}, true);
  const auto v = validate_tree_strategy(g, off);
  REQUIRE(v);
  CHECK(v->vertex == 2);
}

TEST_CASE("cycle-tail alpha and totals") {
  for (int t = 2; t <= 6; ++t) {
    for (int tail = 0; tail <= 4; ++tail) {
      const long s = t + tail;
      mpq_class alpha((1L << s) + (1L << (t - 1)) - 2, (1L << s) - 1);
      alpha.canonicalize();
      CHECK(mpq_class(cycle_tail_alpha(t, tail).str()) == alpha);
      const auto inst = cycle_tail_weights(t, tail);
      CHECK(inst.graph.order() == 2 * t + tail + 1);
      // Every weight of the template summed by hand.
      mpq_class total = alpha;
      for (int i = 1; i < t; ++i) total += 2 * (1L << i);
      for (long i = t; i <= s; ++i) total += 1L << i;
      CHECK(mpq_class(inst.strategy.weight.total().str()) == total);
      CHECK(mpq_class(cycle_tail_total(t, tail).str()) == total);
    }
  }
  CHECK(cycle_tail_alpha(2, 0) == R("4/3"));
  CHECK(cycle_tail_alpha(4, 1) == R("38/31"));
  CHECK_THROWS_AS(cycle_tail_weights(1, 0), Error);
}

TEST_CASE("validity agrees with the oracle") {
  for (auto [t, tail] : {std::pair{2, 0}, {2, 1}, {2, 2}, {3, 0}}) {
    const auto inst = cycle_tail_weights(t, tail);
    const auto r = verify_validity_bruteforce(inst.graph, inst.strategy.weight);
    CHECK(r.status == ValidityStatus::valid);
    CHECK(oracle::weight_valid(inst.graph, inst.root, as_mpq(inst.strategy.weight)));
  }
  // Square scaled by 3: 12 next to the root, 6 on the sides, 4 opposite.
  const auto sq = cycle_tail_weights(2, 0);
  const WeightFunction w3 = sq.strategy.weight.scaled(Rational(3));
  CHECK(verify_validity_bruteforce(sq.graph, w3).status == ValidityStatus::valid);

  // Equal weights along a path are not valid: 3 pebbles on the far end.
  const Graph p3 = path(3);
  const WeightFunction flat = weights(0, {"0", "1", "1"});
  const auto bad = verify_validity_bruteforce(p3, flat);
  REQUIRE(bad.status == ValidityStatus::invalid);
  CHECK(bad.witness_value > bad.bound);
  CHECK_FALSE(oracle::solvable(p3, 0, bad.witness.counts()));
  CHECK_FALSE(oracle::weight_valid(p3, 0, as_mpq(flat)));

  // Raising the opposite vertex of the square breaks it.
  WeightFunction bumped = sq.strategy.weight;
  bumped.set(sq.graph.order() - 1, R("2"));
  CHECK(verify_validity_bruteforce(sq.graph, bumped).status == ValidityStatus::invalid);
  CHECK_FALSE(oracle::weight_valid(sq.graph, sq.root, as_mpq(bumped)));
}

TEST_CASE("validity respects its limits") {
  const Graph big = path(11);
  WeightFunction w(11, 0);
  CHECK_THROWS_AS(verify_validity_bruteforce(big, w), Error);
  SolverBudget tiny;
  tiny.max_states = 1;
  const auto inst = cycle_tail_weights(3, 1);
  CHECK(verify_validity_bruteforce(inst.graph, inst.strategy.weight, tiny).status ==
        ValidityStatus::budget_exceeded);
}

TEST_CASE("embedding the square into the cube") {
  const Graph q = hypercube(3);
  CycleTailSupport roles;
  roles.t = 2;
  roles.tail = 0;
  roles.x0 = 7;
  roles.left = {3};
  roles.right = {5};
  roles.path = {1};
  roles.scale = Rational(3);
  const Strategy s = embed_cycle_tail(q, 0, roles);
  CHECK(s.weight[1] == Rational(12));
  CHECK(s.weight[3] == Rational(6));
  CHECK(s.weight[7] == Rational(4));
  CHECK_FALSE(validate_cycle_tail(q, s));
  roles.left = {6};  // 6 is not adjacent to 1
  CHECK_THROWS_AS(embed_cycle_tail(q, 0, roles), Error);
}
