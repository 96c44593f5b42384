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

#include "pebble/graph.hpp"
#include "pebble/rational.hpp"
#include "pebble/solver.hpp"
#include "pebble/strategy.hpp"
#include "pebble/validity.hpp"

namespace pebble {

struct CertificateEntry {
  Strategy strategy;
  Rational coefficient{1};
};

/// Strategies with coefficients whose combination bounds pi(G, root) by the
/// covering argument. Strategies are stored with every weight spelled out.
struct Certificate {
  Graph graph;
  Vertex root = 0;
  std::vector<CertificateEntry> entries;
  std::int64_t claimed_bound = 0;
};

/// Builds a certificate and fills claimed_bound from the combination.
Certificate make_certificate(const Graph& g, Vertex root,
                             std::vector<CertificateEntry> entries);

/// The combined weight function of a certificate.
WeightFunction combined_weight(const Certificate& c);

enum class VerifyMode { structural, bruteforce };

const char* to_string(VerifyMode m);
VerifyMode verify_mode_from_string(const std::string& s);

enum class EntryVerdict { passed, failed, trusted };

const char* to_string(EntryVerdict v);

struct EntryReport {
  int index = 0;
  StrategyKind kind = StrategyKind::explicit_weights;
  EntryVerdict verdict = EntryVerdict::failed;
  /// How the verdict was reached: "tree", "cycle_tail", "bruteforce",
  /// "trusted".
  std::string method;
  std::string reason;
  std::optional<Configuration> counterexample;
};

struct CertificateReport {
  bool ok = false;
  std::vector<EntryReport> entries;
  std::optional<CoveringBound> covering;
  std::string bound_error;
  std::int64_t claimed_bound = 0;
  bool bound_matches = false;
  bool any_trusted = false;
  bool budget_exceeded = false;
};

/// Re-checks every strategy, recombines, and compares the covering bound
/// with the claim. Structural mode checks trees and cycle_tail embeddings by
/// their defining conditions and rejects untrusted explicit strategies.
/// Brute-force mode additionally runs verify_validity_bruteforce on each
/// untrusted strategy when the graph is within `max_vertices`.
CertificateReport verify_certificate(
    const Certificate& c, VerifyMode mode, const SolverBudget& budget = {},
    int max_vertices = kDefaultBruteforceMaxVertices);

}  // namespace pebble
