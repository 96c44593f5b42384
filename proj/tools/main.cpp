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

// pebble: command-line front end over the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pebble/pebble.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for library errors; carries the C status.
struct ApiError : std::runtime_error {
  explicit ApiError(int status)
      : std::runtime_error(pebble_last_error()), status(status) {}
  int status;
};

int check(int status) {
  if (status < 0) throw ApiError(status);
  return status;
}

struct GraphDeleter {
  void operator()(pebble_graph* g) const { pebble_graph_free(g); }
};
using GraphPtr = std::unique_ptr<pebble_graph, GraphDeleter>;

// Owns a report string and parses it.
struct Report {
  int status = 0;
  std::string text;
  Json json;
};

Report take(int status, char* s) {
  Report r;
  r.status = check(status);
  if (s) {
    r.text = s;
    pebble_string_free(s);
    r.json = Json::parse(r.text);
  }
  return r;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Reads inline JSON when the argument starts with '{' or '[', a file otherwise.
std::string json_arg(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  return read_text(arg);
}

GraphPtr load(const std::string& path) {
  pebble_graph* g = nullptr;
  if (path == "-") {
    check(pebble_graph_parse(read_text(path).c_str(), &g));
  } else {
    check(pebble_graph_load(path.c_str(), &g));
  }
  return GraphPtr(g);
}

struct Common {
  std::string format = "text";
  std::string out;
  std::uint64_t states = 0;
  double seconds = 0;
  int jobs = 1;
};

pebble_budget budget_of(const Common& c) {
  pebble_budget b;
  pebble_budget_init(&b);
  if (c.states > 0) b.max_states = c.states;
  if (c.seconds > 0) b.seconds = c.seconds;
  b.jobs = c.jobs;
  return b;
}

void write_out(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + c.out + "'");
}

std::string counts_text(const Json& config) {
  std::string s;
  for (const auto& [v, k] : config.at("counts").items()) {
    if (!s.empty()) s += ' ';
    s += v + ":" + std::to_string(k.get<long long>());
  }
  return s.empty() ? "(empty)" : s;
}

std::string moves_text(const Json& moves) {
  std::string s;
  for (const auto& m : moves) {
    if (!s.empty()) s += ", ";
    s += std::to_string(m[0].get<int>()) + "->" + std::to_string(m[1].get<int>());
  }
  return s;
}

// "n/1" reads as "n" in text output.
std::string rat(const Json& r) {
  std::string s = r.get<std::string>();
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
  return s;
}

// Text renderers. Each takes the parsed report.

std::string text_pi(const Json& j, bool rooted) {
  std::ostringstream o;
  const std::string name =
      rooted ? "pi(G, " + std::to_string(j.at("root").get<int>()) + ")" : "pi(G)";
  if (j.at("exact").get<bool>()) {
    o << name << " = " << j.at("pi").get<long long>() << "\n";
  } else {
    o << name << " in [" << j.at("lower").get<long long>() << ", "
      << j.at("upper").get<long long>() << "] (budget exhausted)\n";
  }
  const auto& w = j.at("witness");
  if (w.at("size").get<long long>() > 0) {
    o << "largest unsolvable configuration (root " << j.at("root").get<int>()
      << ", size " << w.at("size").get<long long>() << "): " << counts_text(w)
      << "\n";
  }
  if (!rooted) {
    for (const auto& r : j.at("per_root")) {
      o << "  root " << r.at("root").get<int>() << ": ";
      if (r.at("exact").get<bool>()) {
        o << r.at("pi").get<long long>();
      } else {
        o << "[" << r.at("lower").get<long long>() << ", "
          << r.at("upper").get<long long>() << "]";
      }
      o << "\n";
    }
  }
  return o.str();
}

std::string text_solve(const Json& j) {
  std::ostringstream o;
  const std::string verdict = j.at("verdict");
  o << verdict;
  if (verdict == "solvable") {
    o << " (" << j.at("moves").size() << " moves)";
    if (!j.at("moves").empty()) o << ": " << moves_text(j.at("moves"));
  }
  o << "\n";
  return o.str();
}

std::string text_class0(const Json& j) {
  std::ostringstream o;
  const std::string s = j.at("class0");
  if (s == "yes") o << "Class 0\n";
  if (s == "budget_exceeded") o << "undecided (budget exhausted)\n";
  if (s == "no") {
    o << "not Class 0: root " << j.at("root").get<int>()
      << " unsolvable from " << counts_text(j.at("witness")) << "\n";
  }
  return o.str();
}

std::string text_covering(const Json& c) {
  return "S = " + rat(c.at("sum")) +
         ", C = " + rat(c.at("minimum")) +
         ", bound floor(S/C) + 1 = " + std::to_string(c.at("bound").get<long long>());
}

std::string text_verify(const Json& j) {
  std::ostringstream o;
  for (const auto& e : j.at("entries")) {
    o << "entry " << e.at("index").get<int>() << " "
      << e.at("kind").get<std::string>() << ": "
      << e.at("verdict").get<std::string>() << " ("
      << e.at("method").get<std::string>() << ")";
    if (e.contains("reason")) o << " " << e.at("reason").get<std::string>();
    o << "\n";
  }
  if (j.contains("covering")) o << text_covering(j.at("covering")) << "\n";
  if (j.contains("bound_error")) {
    o << "no bound: " << j.at("bound_error").get<std::string>() << "\n";
  }
  o << "claimed bound " << j.at("claimed_bound").get<long long>() << ": "
    << (j.at("bound_matches").get<bool>() ? "reproduced" : "not reproduced")
    << "\n";
  if (j.at("ok").get<bool>()) {
    o << "certificate verified";
    if (j.at("any_trusted").get<bool>()) o << " (contains trusted entries)";
    o << "\n";
  } else if (j.at("budget_exceeded").get<bool>()) {
    o << "verification incomplete (budget exhausted)\n";
  } else {
    o << "certificate rejected\n";
  }
  return o.str();
}

std::string text_lp(const Json& j) {
  std::ostringstream o;
  o << "strategies: " << j.at("strategies").get<long long>();
  if (j.at("truncated").get<bool>()) o << " (truncated)";
  o << "\n";
  if (!j.at("bounded").get<bool>()) {
    o << "no bound: vertex " << j.at("uncovered").get<int>()
      << " carries no weight in any strategy\n";
    return o.str();
  }
  o << "LP optimum: " << rat(j.at("optimum")) << "\n";
  o << "bound: floor(z) + 1 = " << j.at("bound").get<long long>() << "\n";
  o << "duality certificate: "
    << (j.at("certified").get<bool>() ? "checked" : "FAILED") << "\n";
  if (j.contains("ilp")) {
    const auto& ilp = j.at("ilp");
    if (ilp.contains("skipped")) {
      o << "ILP: skipped, " << ilp.at("skipped").get<std::string>() << "\n";
    } else if (ilp.at("exact").get<bool>()) {
      o << "ILP optimum: " << ilp.at("z").get<long long>() << ", bound "
        << ilp.at("z").get<long long>() + 1 << "\n";
    } else {
      o << "ILP: " << ilp.at("z").get<long long>() << " <= z <= "
        << ilp.at("upper").get<long long>() << " (node limit)\n";
    }
  }
  return o.str();
}

std::string text_validity(const Json& j) {
  std::ostringstream o;
  const std::string s = j.at("status");
  o << s << " (w . 1 = " << rat(j.at("bound")) << ")\n";
  if (s == "invalid") {
    o << "unsolvable configuration with w . p = "
      << rat(j.at("witness_value")) << ": "
      << counts_text(j.at("witness")) << "\n";
  }
  return o.str();
}

std::string text_audit(const Json& j) {
  std::ostringstream o;
  o << "n = " << j.at("n").get<int>() << ", e = " << j.at("e").get<int>()
    << ", diameter " << j.at("diameter").get<int>() << ", min degree "
    << j.at("min_degree").get<int>() << "\n";
  for (const auto& item : j.at("items")) {
    o << "[" << item.at("status").get<std::string>() << "] "
      << item.at("condition").get<std::string>() << ": "
      << item.at("detail").get<std::string>();
    if (item.contains("solver")) {
      o << "; solver: " << item.at("solver").get<std::string>();
    }
    o << "\n";
  }
  if (j.contains("equality")) {
    const auto& eq = j.at("equality");
    o << "equality case: " << eq.at("kind").get<std::string>();
    if (eq.contains("params")) {
      o << "(";
      bool first = true;
      for (const auto& p : eq.at("params")) {
        o << (first ? "" : ",") << p.get<int>();
        first = false;
      }
      o << ")";
    }
    if (eq.contains("reason")) o << ": " << eq.at("reason").get<std::string>();
    o << "\n";
  }
  o << "exact search: " << j.at("exact_search").get<std::string>() << "\n";
  o << "conclusion: " << j.at("conclusion").get<std::string>();
  if (j.contains("justification")) {
    o << " (" << j.at("justification").get<std::string>() << ")";
  }
  o << "\n";
  if (j.contains("witness")) {
    o << "witness (root " << j.at("root").get<int>()
      << "): " << counts_text(j.at("witness")) << "\n";
  }
  return o.str();
}

template <typename Render>
int finish(const Common& c, const Report& r, Render render) {
  write_out(c, c.format == "json" ? r.text : render(r.json));
  return r.status;
}

void add_common(CLI::App* app, Common& c, bool budget) {
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("PEBBLE_FORMAT");
  app->add_option("--out", c.out, "Write output to a file");
  if (budget) {
    app->add_option("--budget-states", c.states, "State limit per search")
        ->check(CLI::PositiveNumber)
        ->envname("PEBBLE_BUDGET_STATES");
    app->add_option("--budget-seconds", c.seconds, "Wall-clock limit")
        ->check(CLI::PositiveNumber)
        ->envname("PEBBLE_BUDGET_SECONDS");
    app->add_option("--jobs", c.jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->envname("PEBBLE_JOBS");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact graph pebbling numbers and certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pebble_version()));

  Common common;
  std::string graph_path;
  int root = -1;
  std::function<int()> action;

  auto* gen = app.add_subcommand("generate", "Write a generated graph as JSON");
  std::string family;
  std::vector<int> params;
  gen->add_option("family", family,
                  "path|cycle|complete|hypercube|petersen|lemke|bruhat|"
                  "familyF|familyG")
      ->required();
  gen->add_option("params", params, "Integer parameters");
  add_common(gen, common, false);
  gen->callback([&] {
    action = [&] {
      pebble_graph* g = nullptr;
      check(pebble_graph_generate(family.c_str(), params.data(), params.size(),
                                  &g));
      GraphPtr owned(g);
      char* s = nullptr;
      check(pebble_graph_to_json(g, &s));
      std::string text = s;
      pebble_string_free(s);
      write_out(common, text);
      return 0;
    };
  });

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "Graph file (JSON or edge list), - for stdin")
        ->required();
  };
  auto add_root = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--root", root, "Target vertex")
                    ->check(CLI::NonNegativeNumber)
                    ->envname("PEBBLE_ROOT");
    if (required) opt->required();
  };

  auto* pi = app.add_subcommand("pi", "Exact pebbling number");
  add_graph(pi);
  add_root(pi, false);
  add_common(pi, common, true);
  pi->callback([&] {
    action = [&] {
      auto g = load(graph_path);
      const auto b = budget_of(common);
      char* s = nullptr;
      const int st = pebble_pi(g.get(), root, &b, &s);
      const bool rooted = root >= 0;
      return finish(common, take(st, s),
                    [&](const Json& j) { return text_pi(j, rooted); });
    };
  });

  auto* solve = app.add_subcommand("solve", "Decide one configuration");
  std::string config;
  add_graph(solve);
  add_root(solve, true);
  solve->add_option("--config", config,
                    "Configuration JSON or file: {\"counts\": {\"v\": k}} or [k0, k1, ...]")
      ->required();
  add_common(solve, common, true);
  solve->callback([&] {
    action = [&] {
      auto g = load(graph_path);
      const auto b = budget_of(common);
      char* s = nullptr;
      const int st = pebble_solve(g.get(), root, json_arg(config).c_str(), &b, &s);
      return finish(common, take(st, s), text_solve);
    };
  });

  auto* class0 = app.add_subcommand("class0", "Decide whether pi(G) = n");
  add_graph(class0);
  add_common(class0, common, true);
  class0->callback([&] {
    action = [&] {
      auto g = load(graph_path);
      const auto b = budget_of(common);
      char* s = nullptr;
      const int st = pebble_class0(g.get(), &b, &s);
      return finish(common, take(st, s), text_class0);
    };
  });

  auto* certify = app.add_subcommand("certify", "Assemble a certificate from strategies");
  std::string strategies;
  add_graph(certify);
  add_root(certify, true);
  certify->add_option("--strategies", strategies,
                      "JSON list of strategies, inline or a file")
      ->required();
  add_common(certify, common, false);
  certify->callback([&] {
    action = [&] {
      auto g = load(graph_path);
      char* s = nullptr;
      const int st =
          pebble_certify(g.get(), root, json_arg(strategies).c_str(), &s);
      const auto r = take(st, s);
      write_out(common, r.text);
      return r.status;
    };
  });

  auto* verify = app.add_subcommand("verify", "Check a certificate");
  std::string cert_path;
  std::string mode = "structural";
  verify->add_option("certificate", cert_path, "Certificate file")->required();
  verify->add_option("--mode", mode, "Verification mode")
      ->check(CLI::IsMember({"structural", "bruteforce"}))
      ->envname("PEBBLE_MODE");
  add_common(verify, common, true);
  verify->callback([&] {
    action = [&] {
      const auto b = budget_of(common);
      char* s = nullptr;
      const int st =
          pebble_verify(read_text(cert_path).c_str(), mode.c_str(), &b, &s);
      return finish(common, take(st, s), text_verify);
    };
  });

  auto* lp = app.add_subcommand("lp", "Tree-strategy LP bound");
  int max_trees = 0;
  int max_depth = 0;
  bool with_ilp = false;
  std::string cert_out;
  add_graph(lp);
  add_root(lp, true);
  lp->add_option("--max-trees", max_trees, "Strategy enumeration limit")
      ->check(CLI::PositiveNumber);
  lp->add_option("--max-depth", max_depth, "Tree depth limit")
      ->check(CLI::PositiveNumber);
  lp->add_flag("--ilp", with_ilp, "Also solve the integer program");
  lp->add_option("--certificate-out", cert_out, "Write the dual certificate");
  add_common(lp, common, false);
  lp->callback([&] {
    action = [&] {
      auto g = load(graph_path);
      char* s = nullptr;
      const int st =
          pebble_lp(g.get(), root, max_trees, max_depth, with_ilp ? 1 : 0, &s);
      const auto r = take(st, s);
      if (!cert_out.empty() && r.json.contains("certificate")) {
        Common c;
        c.out = cert_out;
        write_out(c, r.json.at("certificate").dump(2) + "\n");
      }
      return finish(common, r, text_lp);
    };
  });

  auto* validity = app.add_subcommand("validity", "Exhaustively check a weight function");
  std::string weights;
  add_graph(validity);
  add_root(validity, true);
  validity->add_option("--weights", weights,
                       "Weights JSON {\"v\": \"num/den\"}, inline or a file")
      ->required();
  add_common(validity, common, true);
  validity->callback([&] {
    action = [&] {
      auto g = load(graph_path);
      const auto b = budget_of(common);
      char* s = nullptr;
      const int st =
          pebble_validity(g.get(), root, json_arg(weights).c_str(), &b, &s);
      return finish(common, take(st, s), text_validity);
    };
  });

  auto* audit = app.add_subcommand("audit", "Structural Class 0 audit");
  bool no_exact = false;
  add_graph(audit);
  audit->add_flag("--no-exact", no_exact, "Skip the exhaustive search");
  add_common(audit, common, true);
  audit->callback([&] {
    action = [&] {
      auto g = load(graph_path);
      const auto b = budget_of(common);
      char* s = nullptr;
      const int st = pebble_audit(g.get(), no_exact ? 0 : 1, &b, &s);
      return finish(common, take(st, s), text_audit);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return action();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ApiError& e) {
    std::cerr << "pebble: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pebble: " << e.what() << "\n";
    return kExitUsage;
  }
}
