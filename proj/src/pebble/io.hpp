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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pebble/certificate.hpp"
#include "pebble/class0.hpp"
#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/lp_bound.hpp"
#include "pebble/pebbling_number.hpp"
#include "pebble/rational.hpp"
#include "pebble/solver.hpp"
#include "pebble/strategy.hpp"
#include "pebble/validity.hpp"

namespace pebble {

/// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

// Parsing errors surface as Error(ErrorKind::parse_error).

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"n": int, "edges": [[u, v], ...], "labels": {"id": "text"}}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// One "u v" pair per line; '#' starts a comment. The vertex count is one
/// more than the largest id, or the value of an "n <count>" line if given.
Graph parse_edge_list(std::string_view text);

/// JSON if the first non-blank character is '{', edge list otherwise.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// {"counts": {"v": count, ...}}; vertices not listed hold no pebbles.
Json to_json(const Configuration& p);
Configuration configuration_from_json(const Json& j, int n);

/// [[from, to], ...]
Json to_json(const std::vector<PebblingMove>& moves);

/// {"v": "num/den", ...} for the nonzero weights.
Json weights_to_json(const WeightFunction& w);
WeightFunction weights_from_json(const Json& j, int n, Vertex root);

/// {"kind", "weights", "support", "trusted"?, "note"?}; the caller adds
/// "coefficient" for certificate entries.
Json to_json(const Strategy& s);
Strategy strategy_from_json(const Json& j, const Graph& g, Vertex root);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const SolveResult& r, Vertex root);
Json to_json(const RootedPebblingResult& r);
Json to_json(const PebblingResult& r);
Json to_json(const Class0Result& r);
Json to_json(const ValidityResult& r);
Json to_json(const CertificateReport& r);
Json to_json(const CoveringBound& b);
Json to_json(const LpResult& r, const StrategySet& s);
Json to_json(const IlpResult& r);
Json to_json(const AuditReport& r);

/// Parses text as JSON, reporting failures as parse errors.
Json parse_json(std::string_view text);

}  // namespace pebble
