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

#include "pebble/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "pebble/error.hpp"

namespace pebble {

namespace {

std::string key(Vertex v) { return std::to_string(v); }

Vertex vertex_key(const std::string& s, int n, const char* what) {
  Vertex v = -1;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0 || v >= n) {
    throw parse_error(std::string(what) + ": bad vertex key '" + s + "'");
  }
  return v;
}

Vertex vertex_value(const Json& j, int n, const char* what) {
  if (!j.is_number_integer()) {
    throw parse_error(std::string(what) + ": vertex must be an integer");
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v >= n) {
    throw parse_error(std::string(what) + ": vertex " + std::to_string(v) +
                      " out of range");
  }
  return static_cast<Vertex>(v);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw parse_error(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::int64_t int_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_number_integer()) {
    throw parse_error(std::string("field '") + name + "' must be an integer");
  }
  return f.get<std::int64_t>();
}

std::vector<Vertex> vertex_list(const Json& j, int n, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be a list");
  std::vector<Vertex> out;
  for (const auto& x : j) out.push_back(vertex_value(x, n, what));
  return out;
}

Json vertex_array(const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

Json support_json(const Strategy& s) {
  Json sup = Json::object();
  if (s.tree) {
    Json parent = Json::object();
    for (Vertex v = 0; v < static_cast<Vertex>(s.tree->parent.size()); ++v) {
      if (s.tree->parent[v] >= 0) parent[key(v)] = s.tree->parent[v];
    }
    sup["parent"] = std::move(parent);
  }
  if (s.cycle) {
    const auto& c = *s.cycle;
    sup["t"] = c.t;
    sup["tail"] = c.tail;
    sup["x0"] = c.x0;
    sup["left"] = vertex_array(c.left);
    sup["right"] = vertex_array(c.right);
    sup["path"] = vertex_array(c.path);
    sup["scale"] = to_json(c.scale);
  }
  if (!s.attachments.empty()) {
    Json att = Json::array();
    for (const auto& a : s.attachments) att.push_back({a.vertex, a.parent});
    sup["attachments"] = std::move(att);
  }
  return sup;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw parse_error("rational must be a \"num/den\" string or an integer");
}

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) {
    Json labels = Json::object();
    for (const auto& [v, text] : g.labels()) labels[key(v)] = text;
    j["labels"] = std::move(labels);
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  const std::int64_t n = int_field(j, "n");
  if (n < 1 || n > 1'000'000) throw parse_error("graph: n out of range");
  const Json& e = field(j, "edges");
  if (!e.is_array()) throw parse_error("graph: edges must be a list");
  std::vector<Edge> edges;
  for (const auto& pair : e) {
    if (!pair.is_array() || pair.size() != 2) {
      throw parse_error("graph: each edge must be a pair [u, v]");
    }
    edges.emplace_back(vertex_value(pair[0], static_cast<int>(n), "edge"),
                       vertex_value(pair[1], static_cast<int>(n), "edge"));
  }
  std::map<Vertex, std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_object()) throw parse_error("graph: labels must be an object");
    for (const auto& [k, text] : l.items()) {
      if (!text.is_string()) throw parse_error("graph: labels must be text");
      labels[vertex_key(k, static_cast<int>(n), "label")] =
          text.get<std::string>();
    }
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges),
                           std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int n = 0;
  int declared = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& why) {
      return parse_error("edge list line " + std::to_string(lineno) + ": " +
                         why);
    };
    if (first == "n") {
      if (!(ls >> declared) || declared < 1) throw fail("bad vertex count");
      continue;
    }
    long u = -1, v = -1;
    try {
      std::size_t used = 0;
      u = std::stol(first, &used);
      if (used != first.size()) throw fail("expected two vertex ids");
    } catch (const std::logic_error&) {
      throw fail("expected two vertex ids");
    }
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) throw fail("expected two vertex ids");
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) {
      throw fail("vertex id out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    n = std::max<int>(n, static_cast<int>(std::max(u, v)) + 1);
  }
  if (declared >= 0) {
    if (declared < n) throw parse_error("edge list: n smaller than an id");
    n = declared;
  }
  if (n == 0) throw parse_error("edge list: no vertices");
  return Graph::from_edges(n, std::move(edges));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return graph_from_json(parse_json(text));
  }
  return parse_edge_list(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::io, "write failed for '" + path + "'");
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

Json to_json(const Configuration& p) {
  Json counts = Json::object();
  for (Vertex v = 0; v < p.order(); ++v) {
    if (p[v] != 0) counts[key(v)] = p[v];
  }
  Json j;
  j["counts"] = std::move(counts);
  j["size"] = p.size();
  return j;
}

Configuration configuration_from_json(const Json& j, int n) {
  // A bare list is shorthand for {"counts": [...]}.
  const Json& counts = j.is_array() ? j : field(j, "counts");
  Configuration p(n);
  if (counts.is_array()) {
    if (static_cast<int>(counts.size()) != n) {
      throw parse_error("configuration: count list length differs from n");
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!counts[v].is_number_integer() || counts[v].get<long>() < 0 ||
          counts[v].get<long>() > std::numeric_limits<int>::max()) {
        throw parse_error("configuration: counts must be nonnegative integers");
      }
      p.set(v, counts[v].get<int>());
    }
    return p;
  }
  if (!counts.is_object()) throw parse_error("configuration: bad counts");
  for (const auto& [k, c] : counts.items()) {
    if (!c.is_number_integer() || c.get<long>() < 0 ||
        c.get<long>() > std::numeric_limits<int>::max()) {
      throw parse_error("configuration: counts must be nonnegative integers");
    }
    p.set(vertex_key(k, n, "configuration"), c.get<int>());
  }
  return p;
}

Json to_json(const std::vector<PebblingMove>& moves) {
  Json a = Json::array();
  for (const auto& m : moves) a.push_back({m.from, m.to});
  return a;
}

Json weights_to_json(const WeightFunction& w) {
  Json j = Json::object();
  for (Vertex v = 0; v < w.order(); ++v) {
    if (!w[v].is_zero()) j[key(v)] = to_json(w[v]);
  }
  return j;
}

WeightFunction weights_from_json(const Json& j, int n, Vertex root) {
  if (!j.is_object()) throw parse_error("weights must be an object");
  if (root < 0 || root >= n) throw parse_error("root out of range");
  WeightFunction w(n, root);
  for (const auto& [k, value] : j.items()) {
    const Vertex v = vertex_key(k, n, "weights");
    const Rational r = rational_from_json(value);
    if (v == root && !r.is_zero()) {
      throw parse_error("weights: the root must have weight 0");
    }
    if (r.sign() < 0) throw parse_error("weights: negative weight");
    if (v != root) w.set(v, r);
  }
  return w;
}

Json to_json(const Strategy& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["weights"] = weights_to_json(s.weight);
  j["support"] = support_json(s);
  if (s.trusted) j["trusted"] = true;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Strategy strategy_from_json(const Json& j, const Graph& g, Vertex root) {
  const int n = g.order();
  Strategy s;
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw parse_error("strategy kind must be text");
  s.kind = strategy_kind_from_string(kind.get<std::string>());
  s.weight = weights_from_json(field(j, "weights"), n, root);
  if (j.contains("trusted")) {
    if (!j.at("trusted").is_boolean()) throw parse_error("trusted must be bool");
    s.trusted = j.at("trusted").get<bool>();
  }
  if (j.contains("note") && j.at("note").is_string()) {
    s.note = j.at("note").get<std::string>();
  }
  const Json empty = Json::object();
  const Json& sup = j.contains("support") ? j.at("support") : empty;
  if (!sup.is_object()) throw parse_error("support must be an object");
  if (s.kind == StrategyKind::tree_basic ||
      s.kind == StrategyKind::tree_nonbasic) {
    TreeSupport t;
    t.parent.assign(n, -1);
    t.in_tree.assign(n, false);
    t.in_tree[root] = true;
    for (const auto& [k, p] : field(sup, "parent").items()) {
      const Vertex v = vertex_key(k, n, "parent");
      t.parent[v] = vertex_value(p, n, "parent");
      t.in_tree[v] = true;
    }
    s.tree = std::move(t);
  } else if (s.kind == StrategyKind::cycle_tail) {
    CycleTailSupport c;
    c.t = static_cast<int>(int_field(sup, "t"));
    c.tail = static_cast<int>(int_field(sup, "tail"));
    c.x0 = vertex_value(field(sup, "x0"), n, "x0");
    c.left = vertex_list(field(sup, "left"), n, "left");
    c.right = vertex_list(field(sup, "right"), n, "right");
    c.path = vertex_list(field(sup, "path"), n, "path");
    c.scale = sup.contains("scale") ? rational_from_json(sup.at("scale"))
                                    : Rational(1);
    s.cycle = std::move(c);
  }
  if (sup.contains("attachments")) {
    const Json& att = sup.at("attachments");
    if (!att.is_array()) throw parse_error("attachments must be a list");
    for (const auto& a : att) {
      if (!a.is_array() || a.size() != 2) {
        throw parse_error("attachment must be [vertex, parent]");
      }
      s.attachments.push_back({vertex_value(a[0], n, "attachment"),
                               vertex_value(a[1], n, "attachment")});
    }
  }
  return s;
}

Json to_json(const Certificate& c) {
  Json j;
  j["graph"] = to_json(c.graph);
  j["root"] = c.root;
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json x = to_json(e.strategy);
    x["coefficient"] = to_json(e.coefficient);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["claimed_bound"] = c.claimed_bound;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c{graph_from_json(field(j, "graph")), 0, {}, 0};
  c.root = vertex_value(field(j, "root"), c.graph.order(), "root");
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw parse_error("entries must be a list");
  for (const auto& e : entries) {
    CertificateEntry entry;
    entry.strategy = strategy_from_json(e, c.graph, c.root);
    entry.coefficient = e.contains("coefficient")
                            ? rational_from_json(e.at("coefficient"))
                            : Rational(1);
    c.entries.push_back(std::move(entry));
  }
  c.claimed_bound = int_field(j, "claimed_bound");
  return c;
}

Json to_json(const SolveResult& r, Vertex root) {
  Json j;
  j["root"] = root;
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::solvable) j["moves"] = to_json(r.witness);
  j["states"] = r.states;
  return j;
}

Json to_json(const RootedPebblingResult& r) {
  Json j;
  j["root"] = r.root;
  j["exact"] = r.exact;
  if (r.exact) {
    j["pi"] = r.lower;
  } else {
    j["lower"] = r.lower;
    j["upper"] = r.upper;
  }
  j["witness"] = to_json(r.witness);
  j["states"] = r.states;
  return j;
}

Json to_json(const PebblingResult& r) {
  Json j;
  j["exact"] = r.exact;
  if (r.exact) {
    j["pi"] = r.lower;
  } else {
    j["lower"] = r.lower;
    j["upper"] = r.upper;
  }
  j["root"] = r.root;
  j["witness"] = to_json(r.witness);
  Json roots = Json::array();
  for (const auto& x : r.per_root) roots.push_back(to_json(x));
  j["per_root"] = std::move(roots);
  return j;
}

Json to_json(const Class0Result& r) {
  Json j;
  switch (r.status) {
    case Class0Status::yes:
      j["class0"] = "yes";
      break;
    case Class0Status::no:
      j["class0"] = "no";
      j["root"] = r.root;
      j["witness"] = to_json(r.witness);
      break;
    case Class0Status::budget_exceeded:
      j["class0"] = "budget_exceeded";
      break;
  }
  return j;
}

Json to_json(const ValidityResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["bound"] = to_json(r.bound);
  if (r.status == ValidityStatus::invalid) {
    j["witness"] = to_json(r.witness);
    j["witness_value"] = to_json(r.witness_value);
  }
  j["states"] = r.states;
  return j;
}

Json to_json(const CoveringBound& b) {
  Json j;
  j["sum"] = to_json(b.sum);
  j["minimum"] = to_json(b.minimum);
  j["bound"] = b.bound;
  return j;
}

Json to_json(const CertificateReport& r) {
  Json j;
  j["ok"] = r.ok;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["index"] = e.index;
    x["kind"] = to_string(e.kind);
    x["verdict"] = to_string(e.verdict);
    x["method"] = e.method;
    if (!e.reason.empty()) x["reason"] = e.reason;
    if (e.counterexample) x["counterexample"] = to_json(*e.counterexample);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  if (r.covering) j["covering"] = to_json(*r.covering);
  if (!r.bound_error.empty()) j["bound_error"] = r.bound_error;
  j["claimed_bound"] = r.claimed_bound;
  j["bound_matches"] = r.bound_matches;
  j["any_trusted"] = r.any_trusted;
  j["budget_exceeded"] = r.budget_exceeded;
  return j;
}

Json to_json(const LpResult& r, const StrategySet& s) {
  Json j;
  j["root"] = s.root;
  j["strategies"] = s.strategies.size();
  j["truncated"] = s.truncated;
  j["bounded"] = r.bounded;
  if (!r.bounded) {
    j["uncovered"] = r.uncovered;
    return j;
  }
  j["optimum"] = to_json(r.optimum);
  j["bound"] = r.bound;
  Json primal = Json::object();
  for (Vertex v = 0; v < static_cast<Vertex>(r.primal.size()); ++v) {
    if (!r.primal[v].is_zero()) primal[key(v)] = to_json(r.primal[v]);
  }
  j["primal"] = std::move(primal);
  Json duals = Json::array();
  for (std::size_t i = 0; i < r.duals.size(); ++i) {
    if (r.duals[i].is_zero()) continue;
    Json d;
    d["strategy"] = i;
    d["value"] = to_json(r.duals[i]);
    d["weights"] = weights_to_json(s.strategies[i].weight);
    duals.push_back(std::move(d));
  }
  j["duals"] = std::move(duals);
  j["certified"] = r.certified;
  j["pivots"] = r.pivots;
  return j;
}

Json to_json(const IlpResult& r) {
  Json j;
  j["exact"] = r.exact;
  j["bounded"] = r.bounded;
  j["z"] = r.z;
  j["upper"] = r.upper;
  if (r.bounded) j["witness"] = to_json(r.witness);
  j["nodes"] = r.nodes;
  return j;
}

Json to_json(const AuditReport& r) {
  Json j;
  j["n"] = r.n;
  j["e"] = r.e;
  j["diameter"] = r.diameter;
  j["min_degree"] = r.min_degree;
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json x;
    x["condition"] = item.condition;
    x["status"] = to_string(item.status);
    x["detail"] = item.detail;
    if (item.root) x["root"] = *item.root;
    if (item.witness) x["witness"] = to_json(*item.witness);
    if (!item.solver.empty()) x["solver"] = item.solver;
    items.push_back(std::move(x));
  }
  j["items"] = std::move(items);
  if (r.equality) {
    Json eq;
    eq["kind"] = to_string(r.equality->kind);
    if (!r.equality->params.empty()) eq["params"] = r.equality->params;
    if (!r.equality->mapping.empty()) eq["mapping"] = r.equality->mapping;
    if (!r.equality->reason.empty()) eq["reason"] = r.equality->reason;
    j["equality"] = std::move(eq);
  }
  j["exact_search"] = r.exact_search;
  j["conclusion"] = to_string(r.conclusion);
  if (!r.justification.empty()) j["justification"] = r.justification;
  if (r.root) j["root"] = *r.root;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

}  // namespace pebble
