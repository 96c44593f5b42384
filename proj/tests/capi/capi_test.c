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

/* Exercises the C API from C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "pebble/pebble.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, \
              #cond);                                             \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* s, const char* needle) {
  return s && strstr(s, needle) != NULL;
}

int main(void) {
  pebble_budget budget;
  pebble_graph* g = NULL;
  char* report = NULL;
  int params[3] = {3, 0, 0};
  int diam = 0;

  pebble_budget_init(&budget);
  EXPECT(budget.max_states > 0 && budget.seconds > 0 && budget.jobs == 1);
  EXPECT(strlen(pebble_version()) > 0);

  EXPECT(pebble_graph_generate("hypercube", params, 1, &g) == PEBBLE_OK);
  EXPECT(pebble_graph_order(g) == 8);
  EXPECT(pebble_graph_edge_count(g) == 12);
  EXPECT(pebble_graph_diameter(g, &diam) == PEBBLE_OK && diam == 3);

  EXPECT(pebble_pi(g, -1, &budget, &report) == PEBBLE_OK);
  EXPECT(contains(report, "\"pi\": 8"));
  pebble_string_free(report);

  EXPECT(pebble_solve(g, 0, "{\"counts\": {\"7\": 8}}", &budget, &report) ==
         PEBBLE_OK);
  EXPECT(contains(report, "\"solvable\""));
  pebble_string_free(report);
  EXPECT(pebble_solve(g, 0, "[0,1,1,1,1,1,1,1]", &budget, &report) ==
         PEBBLE_NEGATIVE);
  pebble_string_free(report);

  EXPECT(pebble_class0(g, &budget, &report) == PEBBLE_OK);
  pebble_string_free(report);

  EXPECT(pebble_lp(g, 0, 0, 0, 1, &report) == PEBBLE_OK);
  EXPECT(contains(report, "\"certificate\""));
  pebble_string_free(report);

  EXPECT(pebble_validity(g, 0, "{\"1\": \"1\"}", &budget, &report) == PEBBLE_OK);
  pebble_string_free(report);

  /* Budget exhaustion is a status, not an error. */
  budget.max_states = 1;
  EXPECT(pebble_pi(g, 0, &budget, &report) == PEBBLE_BUDGET);
  EXPECT(contains(report, "\"lower\""));
  pebble_string_free(report);
  pebble_budget_init(&budget);

  /* Errors. */
  report = NULL;
  EXPECT(pebble_solve(g, 42, "[]", &budget, &report) == PEBBLE_EINVAL);
  EXPECT(report == NULL);
  EXPECT(strlen(pebble_last_error()) > 0);
  EXPECT(pebble_solve(g, 0, "{oops", &budget, &report) == PEBBLE_EPARSE);
  pebble_graph_free(g);
  g = NULL;

  EXPECT(pebble_graph_generate("moebius", params, 1, &g) == PEBBLE_EINVAL);
  EXPECT(contains(pebble_last_error(), "moebius"));
  EXPECT(pebble_graph_generate("cycle", params, 2, &g) == PEBBLE_EINVAL);
  EXPECT(pebble_graph_load("/nonexistent.json", &g) == PEBBLE_EIO);
  EXPECT(pebble_graph_parse("0 1\n2 3\n", &g) == PEBBLE_EINVAL);
  budget.max_states = 0;
  params[0] = 4;
  EXPECT(pebble_graph_generate("path", params, 1, &g) == PEBBLE_OK);
  EXPECT(pebble_pi(g, 0, &budget, &report) == PEBBLE_EINVAL);
  pebble_budget_init(&budget);

  /* A path has cut vertices, so the audit refutes it. */
  EXPECT(pebble_audit(g, 1, &budget, &report) == PEBBLE_NEGATIVE);
  EXPECT(contains(report, "\"not_class0\""));
  pebble_string_free(report);
  pebble_graph_free(g);

  /* Certify then verify. */
  params[0] = 5;
  EXPECT(pebble_graph_generate("cycle", params, 1, &g) == PEBBLE_OK);
  {
    const char* entries =
        "[{\"kind\": \"tree_basic\", \"weights\": {\"1\": \"4\", \"2\": \"2\", "
        "\"3\": \"1\"}, \"support\": {\"parent\": {\"1\": 0, \"2\": 1, \"3\": 2}}},"
        "{\"kind\": \"tree_basic\", \"weights\": {\"4\": \"4\", \"3\": \"2\", "
        "\"2\": \"1\"}, \"support\": {\"parent\": {\"4\": 0, \"3\": 4, \"2\": 3}}}]";
    char* cert = NULL;
    EXPECT(pebble_certify(g, 0, entries, &cert) == PEBBLE_OK);
    EXPECT(contains(cert, "\"claimed_bound\": 5"));
    EXPECT(pebble_verify(cert, "structural", NULL, &report) == PEBBLE_OK);
    pebble_string_free(report);
    EXPECT(pebble_verify(cert, "sideways", NULL, &report) == PEBBLE_EINVAL);
    pebble_string_free(cert);
  }
  pebble_graph_free(g);

  EXPECT(pebble_graph_order(NULL) == PEBBLE_EINVAL);
  pebble_graph_free(NULL);
  pebble_string_free(NULL);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
