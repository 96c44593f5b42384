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
#include "pebble/error.hpp"
#include "pebble/io.hpp"

using namespace pebble;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::internal;
}

}  // namespace

TEST_CASE("graph JSON round trip keeps labels") {
  const Graph b = bruhat(3);
  const std::string text = to_json(b).dump();
  const Graph back = parse_graph(text);
  CHECK(back == b);
  CHECK(back.label(0) == b.label(0));
  CHECK(to_json(back).dump() == text);
}

TEST_CASE("edge lists") {
  const Graph g = parse_edge_list("# square\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 4);
  const Graph h = parse_graph("n 3\n0 1\n1 2\n");
  CHECK(h.order() == 3);
  CHECK(kind_of([] { parse_edge_list("0 x\n"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { parse_edge_list("0 1\n2 3\n"); }) == ErrorKind::invalid_argument);
}

TEST_CASE("configurations in both forms") {
  const auto a = configuration_from_json(parse_json(R"({"counts": {"2": 5}})"), 3);
  const auto b = configuration_from_json(parse_json("[0, 0, 5]"), 3);
  CHECK(a == b);
  CHECK(a.size() == 5);
  CHECK(to_json(a).dump() == R"({"counts":{"2":5},"size":5})");
  CHECK(kind_of([] { configuration_from_json(parse_json("[1, 2]"), 3); }) ==
        ErrorKind::parse_error);
  CHECK(kind_of([] { configuration_from_json(parse_json(R"({"counts": {"7": 1}})"), 3); }) ==
        ErrorKind::parse_error);
  CHECK(kind_of([] { configuration_from_json(parse_json("[0, -1, 0]"), 3); }) !=
        ErrorKind::internal);
}

TEST_CASE("malformed documents") {
  CHECK(kind_of([] { parse_json("{"); }) == ErrorKind::parse_error);
  CHECK(kind_of([] { graph_from_json(parse_json(R"({"n": 2})")); }) ==
        ErrorKind::parse_error);
  CHECK(kind_of([] { rational_from_json(parse_json("\"1/0\"")); }) ==
        ErrorKind::parse_error);
  CHECK(kind_of([] { load_graph("/nonexistent/graph.json"); }) == ErrorKind::io);
}

TEST_CASE("weights parse against the root") {
  const auto w = weights_from_json(parse_json(R"({"1": "4", "2": "3/2"})"), 3, 0);
  CHECK(w[2] == Rational::parse("3/2"));
  CHECK(weights_to_json(w).dump() == R"({"1":"4/1","2":"3/2"})");
  CHECK_THROWS_AS(weights_from_json(parse_json(R"({"0": "1"})"), 3, 0), Error);
}
