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

#include <string>

#include "doctest.h"
#include "pebble/certificate.hpp"
#include "pebble/error.hpp"
#include "pebble/io.hpp"

using namespace pebble;

namespace {

Certificate bundled(const std::string& name) {
  return certificate_from_json(
      parse_json(read_file(std::string(PEBBLE_DATA_DIR) + "/certificates/" + name + ".json")));
}

}  // namespace

TEST_CASE("bundled certificates verify") {
  struct Case {
    const char* name;
    long sum;
    long min;
    std::int64_t bound;
  };
  for (const Case& c : {Case{"q3", 84, 12, 8}, Case{"c5", 14, 3, 5},
                        Case{"g111_r4", 20, 3, 7}, Case{"g111_r0", 24, 4, 7},
                        Case{"g111_r1", 46, 7, 7}}) {
    CAPTURE(c.name);
    const auto rep = verify_certificate(bundled(c.name), VerifyMode::structural);
    CHECK(rep.ok);
    REQUIRE(rep.covering);
    CHECK(rep.covering->sum == Rational(c.sum));
    CHECK(rep.covering->minimum == Rational(c.min));
    CHECK(rep.covering->bound == c.bound);
    CHECK_FALSE(rep.any_trusted);
  }
}

TEST_CASE("the Lemke certificate needs exhaustive checking") {
  const Certificate c = bundled("lemke");
  CHECK_FALSE(verify_certificate(c, VerifyMode::structural).ok);
  const auto rep = verify_certificate(c, VerifyMode::bruteforce);
  CHECK(rep.ok);
  REQUIRE(rep.covering);
  CHECK(rep.covering->sum == Rational(55));
  CHECK(rep.covering->minimum == Rational(7));
  CHECK(rep.covering->bound == 8);
}

TEST_CASE("B4 combines to 63 with a trusted middle entry") {
  const Certificate c = bundled("b4");
  const auto rep = verify_certificate(c, VerifyMode::structural);
  CHECK(rep.ok);
  CHECK(rep.any_trusted);
  REQUIRE(rep.covering);
  CHECK(rep.covering->sum == Rational(63));
  CHECK(rep.covering->minimum == Rational(1));
  CHECK(rep.covering->bound == 64);
  int trusted = 0;
  for (const auto& e : rep.entries) trusted += e.verdict == EntryVerdict::trusted;
  CHECK(trusted == 1);
}

TEST_CASE("tampering is caught") {
  Certificate c = bundled("c5");
  c.entries[0].strategy.weight.set(3, Rational(2));  // breaks doubling
  const auto rep = verify_certificate(c, VerifyMode::structural);
  CHECK_FALSE(rep.ok);
  CHECK(rep.entries[0].verdict == EntryVerdict::failed);

  Certificate claim = bundled("q3");
  claim.claimed_bound = 7;
  const auto r2 = verify_certificate(claim, VerifyMode::structural);
  CHECK_FALSE(r2.ok);
  CHECK_FALSE(r2.bound_matches);

  // An overweight explicit entry fails exhaustive checking.
  Certificate lem = bundled("lemke");
  lem.entries[0].strategy.weight.set(5, Rational(9));
  const auto r3 = verify_certificate(lem, VerifyMode::bruteforce);
  CHECK_FALSE(r3.ok);
  CHECK(r3.entries[0].counterexample);
}

TEST_CASE("certificates survive a JSON round trip") {
  for (const char* name : {"q3", "c5", "lemke", "b4", "g111_r1"}) {
    const Certificate c = bundled(name);
    const std::string once = to_json(c).dump(2);
    const Certificate back = certificate_from_json(parse_json(once));
    CHECK(to_json(back).dump(2) == once);
  }
}
