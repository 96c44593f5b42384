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

#include "pebble/certificate.hpp"

#include "pebble/cycle_tail.hpp"
#include "pebble/error.hpp"

namespace pebble {

namespace {

std::optional<Violation> structural_check(const Graph& g, const Strategy& s) {
  switch (s.kind) {
    case StrategyKind::tree_basic:
    case StrategyKind::tree_nonbasic:
      return validate_tree_strategy(g, s);
    case StrategyKind::cycle_tail:
      return validate_cycle_tail(g, s);
    case StrategyKind::explicit_weights:
      break;
  }
  return std::nullopt;
}

std::string describe(const Violation& v) {
  if (v.vertex < 0) return v.reason;
  return "vertex " + std::to_string(v.vertex) + ": " + v.reason;
}

EntryReport check_entry(const Certificate& c, int index, VerifyMode mode,
                        const SolverBudget& budget, int max_vertices,
                        bool& budget_hit) {
  const auto& entry = c.entries[index];
  const Strategy& s = entry.strategy;
  EntryReport rep;
  rep.index = index;
  rep.kind = s.kind;
  if (s.weight.order() != c.graph.order()) {
    rep.reason = "weights do not cover the graph";
    return rep;
  }
  if (s.weight.root() != c.root) {
    rep.reason = "strategy root " + std::to_string(s.weight.root()) +
                 " differs from certificate root";
    return rep;
  }
  if (entry.coefficient.sign() <= 0) {
    rep.reason = "coefficient must be positive";
    return rep;
  }
  const bool is_explicit = s.kind == StrategyKind::explicit_weights;
  if (is_explicit && s.trusted) {
    rep.verdict = EntryVerdict::trusted;
    rep.method = "trusted";
    rep.reason = "validity taken on trust; not checked";
    return rep;
  }
  if (!is_explicit) {
    rep.method = s.kind == StrategyKind::cycle_tail ? "cycle_tail" : "tree";
    if (auto bad = structural_check(c.graph, s)) {
      rep.reason = describe(*bad);
      return rep;
    }
  }
  const bool small = c.graph.order() <= max_vertices;
  if (mode == VerifyMode::structural || !small) {
    if (is_explicit) {
      rep.method = "bruteforce";
      rep.reason = mode == VerifyMode::structural
                       ? "explicit strategy requires bruteforce mode"
                       : "graph exceeds the brute-force vertex limit";
      return rep;
    }
    rep.verdict = EntryVerdict::passed;
    return rep;
  }
  rep.method = "bruteforce";
  const auto res =
      verify_validity_bruteforce(c.graph, s.weight, budget, max_vertices);
  switch (res.status) {
    case ValidityStatus::valid:
      rep.verdict = EntryVerdict::passed;
      break;
    case ValidityStatus::invalid:
      rep.reason = "unsolvable configuration with w.p = " +
                   res.witness_value.str() + " > w.1 = " + res.bound.str();
      rep.counterexample = res.witness;
      break;
    case ValidityStatus::budget_exceeded:
      rep.reason = "budget exceeded";
      budget_hit = true;
      break;
  }
  return rep;
}

}  // namespace

Certificate make_certificate(const Graph& g, Vertex root,
                             std::vector<CertificateEntry> entries) {
  g.require_vertex(root, "root");
  Certificate c{g, root, std::move(entries), 0};
  c.claimed_bound = covering_bound(g, root, combined_weight(c)).bound;
  return c;
}

WeightFunction combined_weight(const Certificate& c) {
  std::vector<WeightedEntry> parts;
  parts.reserve(c.entries.size());
  for (const auto& e : c.entries) {
    parts.push_back({&e.strategy.weight, e.coefficient});
  }
  return combine(parts);
}

const char* to_string(VerifyMode m) {
  return m == VerifyMode::structural ? "structural" : "bruteforce";
}

VerifyMode verify_mode_from_string(const std::string& s) {
  if (s == "structural") return VerifyMode::structural;
  if (s == "bruteforce") return VerifyMode::bruteforce;
  throw invalid_argument("unknown verification mode '" + s + "'");
}

const char* to_string(EntryVerdict v) {
  switch (v) {
    case EntryVerdict::passed:
      return "passed";
    case EntryVerdict::failed:
      return "failed";
    case EntryVerdict::trusted:
      return "trusted";
  }
  return "?";
}

CertificateReport verify_certificate(const Certificate& c, VerifyMode mode,
                                     const SolverBudget& budget,
                                     int max_vertices) {
  CertificateReport rep;
  rep.claimed_bound = c.claimed_bound;
  bool all_pass = !c.entries.empty();
  for (int i = 0; i < static_cast<int>(c.entries.size()); ++i) {
    rep.entries.push_back(
        check_entry(c, i, mode, budget, max_vertices, rep.budget_exceeded));
    const auto v = rep.entries.back().verdict;
    if (v == EntryVerdict::failed) all_pass = false;
    if (v == EntryVerdict::trusted) rep.any_trusted = true;
  }
  if (c.entries.empty()) rep.bound_error = "certificate has no strategies";
  try {
    if (!c.entries.empty()) {
      rep.covering = covering_bound(c.graph, c.root, combined_weight(c));
      rep.bound_matches = rep.covering->bound == c.claimed_bound;
      if (!rep.bound_matches) {
        rep.bound_error = "recomputed bound " +
                          std::to_string(rep.covering->bound) +
                          " differs from claimed " +
                          std::to_string(c.claimed_bound);
      }
    }
  } catch (const Error& e) {
    rep.bound_error = e.what();
  }
  rep.ok = all_pass && rep.bound_matches;
  return rep;
}

}  // namespace pebble
