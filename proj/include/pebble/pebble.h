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

#ifndef PEBBLE_PEBBLE_H_
#define PEBBLE_PEBBLE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PEBBLE_BUILDING_LIBRARY)
#define PEBBLE_API __attribute__((visibility("default")))
#else
#define PEBBLE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonnegative values are outcomes, negative values errors;
 * after an error pebble_last_error() describes it. */
#define PEBBLE_OK 0
#define PEBBLE_NEGATIVE 1 /* unsolvable, refuted, invalid, not Class 0 */
#define PEBBLE_BUDGET 2   /* search stopped before a verdict */
#define PEBBLE_EINVAL (-1)
#define PEBBLE_EPARSE (-2)
#define PEBBLE_EMOVE (-3)
#define PEBBLE_ENOTAPPLICABLE (-4)
#define PEBBLE_EIO (-5)
#define PEBBLE_EINTERNAL (-6)

typedef struct pebble_graph pebble_graph;

typedef struct pebble_budget {
  uint64_t max_states; /* per search; must be positive */
  double seconds;      /* wall clock; must be positive */
  int jobs;            /* worker threads for multi-root work */
} pebble_budget;

/* Library defaults: 50 million states, 600 seconds, 1 job. */
PEBBLE_API void pebble_budget_init(pebble_budget* budget);

PEBBLE_API const char* pebble_version(void);

/* Message for the last error on the calling thread, "" if none. */
PEBBLE_API const char* pebble_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
PEBBLE_API void pebble_string_free(char* s);

/* Families: path n, cycle n, complete n, hypercube d, petersen n k, lemke,
 * bruhat m, familyF p q, familyG p q r. */
PEBBLE_API int pebble_graph_generate(const char* family, const int* params,
                                     size_t nparams, pebble_graph** out);
/* Graph JSON or an edge list. */
PEBBLE_API int pebble_graph_parse(const char* text, pebble_graph** out);
PEBBLE_API int pebble_graph_load(const char* path, pebble_graph** out);
PEBBLE_API void pebble_graph_free(pebble_graph* g);

PEBBLE_API int pebble_graph_order(const pebble_graph* g);
PEBBLE_API int pebble_graph_edge_count(const pebble_graph* g);
PEBBLE_API int pebble_graph_diameter(const pebble_graph* g, int* out);
PEBBLE_API int pebble_graph_to_json(const pebble_graph* g, char** out);

/* Reports below are JSON documents written to *report. A null budget means
 * the defaults. */

/* config_json: {"counts": {"v": k}} or an array of n counts.
 * PEBBLE_OK when solvable, PEBBLE_NEGATIVE when not. */
PEBBLE_API int pebble_solve(const pebble_graph* g, int root,
                            const char* config_json,
                            const pebble_budget* budget, char** report);

/* pi(G, root), or pi(G) when root < 0. PEBBLE_BUDGET leaves an interval. */
PEBBLE_API int pebble_pi(const pebble_graph* g, int root,
                         const pebble_budget* budget, char** report);

/* PEBBLE_OK when pi(G) = n, PEBBLE_NEGATIVE with a witness otherwise. */
PEBBLE_API int pebble_class0(const pebble_graph* g,
                             const pebble_budget* budget, char** report);

/* Builds a certificate from a JSON array of strategies, each with an
 * optional "coefficient". */
PEBBLE_API int pebble_certify(const pebble_graph* g, int root,
                              const char* entries_json, char** certificate);

/* mode: "structural" or "bruteforce". PEBBLE_NEGATIVE when any entry fails
 * or the claimed bound is not reproduced. */
PEBBLE_API int pebble_verify(const char* certificate_json, const char* mode,
                             const pebble_budget* budget, char** report);

/* Strategy enumeration (0 selects a default limit), exact LP and, when
 * with_ilp is set, the integer bound. The report carries the dual
 * certificate. PEBBLE_NEGATIVE when some vertex is uncovered. */
PEBBLE_API int pebble_lp(const pebble_graph* g, int root, int max_trees,
                         int max_depth, int with_ilp, char** report);

/* Weight function validity by exhaustive search.
 * weights_json: {"v": "num/den", ...}. */
PEBBLE_API int pebble_validity(const pebble_graph* g, int root,
                               const char* weights_json,
                               const pebble_budget* budget, char** report);

/* Structural Class 0 audit; exact != 0 adds the exhaustive search.
 * PEBBLE_NEGATIVE when refuted, PEBBLE_BUDGET when undecided after an
 * exhausted exact search. */
PEBBLE_API int pebble_audit(const pebble_graph* g, int exact,
                            const pebble_budget* budget, char** report);

#ifdef __cplusplus
}
#endif

#endif  /* PEBBLE_PEBBLE_H_ */
