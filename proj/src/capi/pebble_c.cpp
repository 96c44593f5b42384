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

#include "pebble/pebble.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "pebble/certificate.hpp"
#include "pebble/class0.hpp"
#include "pebble/error.hpp"
#include "pebble/graph.hpp"
#include "pebble/io.hpp"
#include "pebble/lp_bound.hpp"
#include "pebble/pebbling_number.hpp"
#include "pebble/solver.hpp"
#include "pebble/validity.hpp"

struct pebble_graph {
  pebble::Graph graph;
};

namespace {

thread_local std::string last_error;

int fail(int code, const std::string& message) {
  last_error = message;
  return code;
}

int code_for(pebble::ErrorKind kind) {
  switch (kind) {
    case pebble::ErrorKind::invalid_argument:
      return PEBBLE_EINVAL;
    case pebble::ErrorKind::parse_error:
      return PEBBLE_EPARSE;
    case pebble::ErrorKind::illegal_move:
      return PEBBLE_EMOVE;
    case pebble::ErrorKind::not_applicable:
      return PEBBLE_ENOTAPPLICABLE;
    case pebble::ErrorKind::io:
      return PEBBLE_EIO;
    case pebble::ErrorKind::internal:
      return PEBBLE_EINTERNAL;
  }
  return PEBBLE_EINTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const pebble::Error& e) {
    return fail(code_for(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(PEBBLE_EPARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PEBBLE_EINTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PEBBLE_EINTERNAL, e.what());
  } catch (...) {
    return fail(PEBBLE_EINTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const pebble::Json& j, char** out) { *out = dup(j.dump(2) + "\n"); }

void require(bool ok, const char* what) {
  if (!ok) throw pebble::invalid_argument(what);
}

pebble::SolverBudget to_budget(const pebble_budget* b) {
  pebble::SolverBudget out;
  if (b) {
    out.max_states = b->max_states;
    out.time_limit = std::chrono::duration<double>(b->seconds);
  }
  out.validate();
  return out;
}

pebble::PebblingOptions to_options(const pebble_budget* b) {
  pebble::PebblingOptions opt;
  if (b) {
    require(b->jobs >= 1, "jobs must be at least 1");
    opt.jobs = b->jobs;
  }
  return opt;
}

pebble::Graph generate(const std::string& family, const int* p, size_t n) {
  auto want = [&](size_t count) {
    if (n != count) {
      throw pebble::invalid_argument(family + " takes " +
                                     std::to_string(count) + " parameter(s)");
    }
  };
  if (family == "path") return want(1), pebble::path(p[0]);
  if (family == "cycle") return want(1), pebble::cycle(p[0]);
  if (family == "complete") return want(1), pebble::complete(p[0]);
  if (family == "hypercube") return want(1), pebble::hypercube(p[0]);
  if (family == "petersen") return want(2), pebble::petersen_generalized(p[0], p[1]);
  if (family == "lemke") return want(0), pebble::lemke();
  if (family == "bruhat") return want(1), pebble::bruhat(p[0]);
  if (family == "familyF") return want(2), pebble::family_F(p[0], p[1]);
  if (family == "familyG") return want(3), pebble::family_G(p[0], p[1], p[2]);
  throw pebble::invalid_argument("unknown graph family '" + family + "'");
}

}  // namespace

extern "C" {

void pebble_budget_init(pebble_budget* budget) {
  if (!budget) return;
  const pebble::SolverBudget d;
  budget->max_states = d.max_states;
  budget->seconds = d.time_limit.count();
  budget->jobs = 1;
}

const char* pebble_version(void) { return "0.1.0"; }

const char* pebble_last_error(void) { return last_error.c_str(); }

void pebble_string_free(char* s) { std::free(s); }

int pebble_graph_generate(const char* family, const int* params,
                          size_t nparams, pebble_graph** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(family && out, "null argument");
    require(nparams == 0 || params, "null parameter list");
    *out = new pebble_graph{generate(family, params, nparams)};
    return PEBBLE_OK;
  });
}

int pebble_graph_parse(const char* text, pebble_graph** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(text && out, "null argument");
    *out = new pebble_graph{pebble::parse_graph(text)};
    return PEBBLE_OK;
  });
}

int pebble_graph_load(const char* path, pebble_graph** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(path && out, "null argument");
    *out = new pebble_graph{pebble::load_graph(path)};
    return PEBBLE_OK;
  });
}

void pebble_graph_free(pebble_graph* g) { delete g; }

int pebble_graph_order(const pebble_graph* g) {
  return g ? g->graph.order() : fail(PEBBLE_EINVAL, "null graph");
}

int pebble_graph_edge_count(const pebble_graph* g) {
  return g ? g->graph.edge_count() : fail(PEBBLE_EINVAL, "null graph");
}

int pebble_graph_diameter(const pebble_graph* g, int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = pebble::diameter(g->graph);
    return PEBBLE_OK;
  });
}

int pebble_graph_to_json(const pebble_graph* g, char** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(g && out, "null argument");
    emit(pebble::to_json(g->graph), out);
    return PEBBLE_OK;
  });
}

int pebble_solve(const pebble_graph* g, int root, const char* config_json,
                 const pebble_budget* budget, char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    require(g && config_json && report, "null argument");
    const auto& graph = g->graph;
    graph.require_vertex(root, "root");
    const auto p = pebble::configuration_from_json(
        pebble::parse_json(config_json), graph.order());
    const auto r = pebble::is_solvable(graph, root, p, to_budget(budget));
    emit(pebble::to_json(r, root), report);
    switch (r.verdict) {
      case pebble::Verdict::solvable:
        return PEBBLE_OK;
      case pebble::Verdict::unsolvable:
        return PEBBLE_NEGATIVE;
      case pebble::Verdict::budget_exceeded:
        return PEBBLE_BUDGET;
    }
    return PEBBLE_EINTERNAL;
  });
}

int pebble_pi(const pebble_graph* g, int root, const pebble_budget* budget,
              char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    require(g && report, "null argument");
    const auto b = to_budget(budget);
    if (root >= 0) {
      g->graph.require_vertex(root, "root");
      const auto r = pebble::pebbling_number_rooted(g->graph, root, b);
      emit(pebble::to_json(r), report);
      return r.exact ? PEBBLE_OK : PEBBLE_BUDGET;
    }
    const auto r = pebble::pebbling_number(g->graph, b, to_options(budget));
    emit(pebble::to_json(r), report);
    return r.exact ? PEBBLE_OK : PEBBLE_BUDGET;
  });
}

int pebble_class0(const pebble_graph* g, const pebble_budget* budget,
                  char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    require(g && report, "null argument");
    const auto r =
        pebble::is_class0(g->graph, to_budget(budget), to_options(budget));
    emit(pebble::to_json(r), report);
    switch (r.status) {
      case pebble::Class0Status::yes:
        return PEBBLE_OK;
      case pebble::Class0Status::no:
        return PEBBLE_NEGATIVE;
      case pebble::Class0Status::budget_exceeded:
        return PEBBLE_BUDGET;
    }
    return PEBBLE_EINTERNAL;
  });
}

int pebble_certify(const pebble_graph* g, int root, const char* entries_json,
                   char** certificate) {
  if (certificate) *certificate = nullptr;
  return guarded([&] {
    require(g && entries_json && certificate, "null argument");
    g->graph.require_vertex(root, "root");
    const auto j = pebble::parse_json(entries_json);
    if (!j.is_array()) throw pebble::parse_error("strategies must be a list");
    std::vector<pebble::CertificateEntry> entries;
    for (const auto& e : j) {
      pebble::CertificateEntry entry;
      entry.strategy = pebble::strategy_from_json(e, g->graph, root);
      if (e.contains("coefficient")) {
        entry.coefficient = pebble::rational_from_json(e.at("coefficient"));
      }
      entries.push_back(std::move(entry));
    }
    emit(pebble::to_json(
             pebble::make_certificate(g->graph, root, std::move(entries))),
         certificate);
    return PEBBLE_OK;
  });
}

int pebble_verify(const char* certificate_json, const char* mode,
                  const pebble_budget* budget, char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    require(certificate_json && report, "null argument");
    const auto c =
        pebble::certificate_from_json(pebble::parse_json(certificate_json));
    const auto m = pebble::verify_mode_from_string(mode ? mode : "structural");
    const auto r = pebble::verify_certificate(c, m, to_budget(budget));
    emit(pebble::to_json(r), report);
    if (r.ok) return PEBBLE_OK;
    return r.budget_exceeded ? PEBBLE_BUDGET : PEBBLE_NEGATIVE;
  });
}

int pebble_lp(const pebble_graph* g, int root, int max_trees, int max_depth,
              int with_ilp, char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    require(g && report, "null argument");
    require(max_trees >= 0 && max_depth >= 0, "limits must be nonnegative");
    const auto& graph = g->graph;
    graph.require_vertex(root, "root");
    pebble::StrategyLimits limits;
    if (max_trees > 0) limits.max_trees = max_trees;
    if (max_depth > 0) limits.max_depth = max_depth;
    const auto set = pebble::enumerate_tree_strategies(graph, root, limits);
    const auto lp = pebble::lp_relaxation_bound(graph, root, set);
    auto j = pebble::to_json(lp, set);
    if (lp.bounded) {
      j["certificate"] =
          pebble::to_json(pebble::dual_certificate(graph, root, set, lp));
    }
    if (with_ilp) {
      if (graph.order() <= pebble::kDefaultIlpMaxVertices) {
        j["ilp"] = pebble::to_json(pebble::ilp_bound(graph, root, set));
      } else {
        j["ilp"] = {{"skipped", "more than " +
                                    std::to_string(pebble::kDefaultIlpMaxVertices) +
                                    " vertices"}};
      }
    }
    emit(j, report);
    return lp.bounded ? PEBBLE_OK : PEBBLE_NEGATIVE;
  });
}

int pebble_validity(const pebble_graph* g, int root, const char* weights_json,
                    const pebble_budget* budget, char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    require(g && weights_json && report, "null argument");
    g->graph.require_vertex(root, "root");
    const auto w = pebble::weights_from_json(pebble::parse_json(weights_json),
                                             g->graph.order(), root);
    const auto r =
        pebble::verify_validity_bruteforce(g->graph, w, to_budget(budget));
    emit(pebble::to_json(r), report);
    switch (r.status) {
      case pebble::ValidityStatus::valid:
        return PEBBLE_OK;
      case pebble::ValidityStatus::invalid:
        return PEBBLE_NEGATIVE;
      case pebble::ValidityStatus::budget_exceeded:
        return PEBBLE_BUDGET;
    }
    return PEBBLE_EINTERNAL;
  });
}

int pebble_audit(const pebble_graph* g, int exact, const pebble_budget* budget,
                 char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    require(g && report, "null argument");
    pebble::AuditOptions opt;
    opt.exact = exact != 0;
    opt.pebbling = to_options(budget);
    const auto r = pebble::refute_class0(g->graph, to_budget(budget), opt);
    emit(pebble::to_json(r), report);
    switch (r.conclusion) {
      case pebble::Conclusion::class0:
        return PEBBLE_OK;
      case pebble::Conclusion::not_class0:
        return PEBBLE_NEGATIVE;
      case pebble::Conclusion::possibly_class0:
        return r.exact_search == "budget_exceeded" ? PEBBLE_BUDGET : PEBBLE_OK;
    }
    return PEBBLE_EINTERNAL;
  });
}

}  // extern "C"
