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

#include "pebble/validity.hpp"

#include <algorithm>

#include "pebble/error.hpp"

namespace pebble {

namespace {

struct Stop {};

constexpr int kMaxCapExponent = 30;

class ValiditySearch {
 public:
  ValiditySearch(const Graph& g, const WeightFunction& w,
                 const SolverBudget& budget)
      : w_(w), solver_(g, w.root(), budget), p_(g.order(), 0) {
    const auto& dist = solver_.root_distances();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != w.root() && !w[v].is_zero()) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    caps_.resize(order_.size());
    for (std::size_t i = order_.size(); i-- > 0;) {
      const int d = std::min(dist[order_[i]], kMaxCapExponent);
      caps_[i] = (std::int64_t{1} << d) - 1;
    }
    result_.bound = w.total();
  }

  ValidityResult run() {
    try {
      recurse(0, Rational{}, caps_);
    } catch (const Stop&) {
    }
    result_.states = solver_.states();
    return result_;
  }

 private:
  bool unsolvable_now() {
    const Verdict v = solver_.decide(Configuration(p_));
    if (v == Verdict::budget_exceeded) {
      result_.status = ValidityStatus::budget_exceeded;
      throw Stop{};
    }
    return v == Verdict::unsolvable;
  }

  // Largest count at order_[j] keeping the current partial configuration
  // unsolvable, searched below `hi`. Solvability is monotone in the count.
  std::int64_t max_count(std::size_t j, std::int64_t hi) {
    const Vertex v = order_[j];
    std::int64_t lo = 0;
    while (lo < hi) {
      const std::int64_t mid = (lo + hi + 1) / 2;
      p_[v] = static_cast<int>(mid);
      if (unsolvable_now()) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    p_[v] = 0;
    return lo;
  }

  // `limits[j]` bounds the count on order_[j] for every unsolvable
  // completion of the current partial configuration.
  void recurse(std::size_t i, const Rational& value,
               const std::vector<std::int64_t>& limits) {
    if (i == order_.size()) {
      if (value > result_.bound) {
        result_.status = ValidityStatus::invalid;
        result_.witness = Configuration(p_);
        result_.witness_value = value;
        throw Stop{};
      }
      return;
    }
    std::vector<std::int64_t> tight(limits);
    Rational rest;
    for (std::size_t j = order_.size(); j-- > i;) {
      tight[j] = max_count(j, limits[j]);
      if (j > i) rest += w_[order_[j]] * Rational(static_cast<long>(tight[j]));
    }
    const Vertex v = order_[i];
    if (value + rest + w_[v] * Rational(static_cast<long>(tight[i])) <=
        result_.bound) {
      return;
    }
    for (std::int64_t c = tight[i]; c >= 0; --c) {
      const Rational next = value + w_[v] * Rational(static_cast<long>(c));
      if (next + rest <= result_.bound) break;
      p_[v] = static_cast<int>(c);
      recurse(i + 1, next, tight);
    }
    p_[v] = 0;
  }

  const WeightFunction& w_;
  Solver solver_;
  std::vector<int> p_;
  std::vector<Vertex> order_;
  std::vector<std::int64_t> caps_;
  ValidityResult result_;
};

}  // namespace

const char* to_string(ValidityStatus s) {
  switch (s) {
    case ValidityStatus::valid:
      return "valid";
    case ValidityStatus::invalid:
      return "invalid";
    case ValidityStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "?";
}

ValidityResult verify_validity_bruteforce(const Graph& g,
                                          const WeightFunction& w,
                                          const SolverBudget& budget,
                                          int max_vertices) {
  if (w.order() != g.order()) {
    throw invalid_argument("weight function does not match graph");
  }
  if (g.order() > max_vertices) {
    throw invalid_argument("graph has " + std::to_string(g.order()) +
                           " vertices; brute-force validity is limited to " +
                           std::to_string(max_vertices));
  }
  budget.validate();
  ValiditySearch search(g, w, budget);
  return search.run();
}

}  // namespace pebble
