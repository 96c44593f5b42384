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

#include "pebble/simplex.hpp"

#include <algorithm>

#include "pebble/error.hpp"

namespace pebble {

LpSolution solve_lp(const LpProblem& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw invalid_argument("lp: b has wrong length");
  for (const auto& row : lp.a) {
    if (row.size() != n) throw invalid_argument("lp: ragged constraint matrix");
  }
  for (const auto& bi : lp.b) {
    if (bi.sign() < 0) throw invalid_argument("lp: negative right-hand side");
  }

  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols));
  std::vector<Rational> rhs = lp.b;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = lp.a[i][j];
    t[i][n + i] = Rational(1);
    basis[i] = n + i;
  }
  // Reduced costs z_j - c_j; the objective value sits in `obj`.
  std::vector<Rational> z(cols);
  for (std::size_t j = 0; j < n; ++j) z[j] = -lp.c[j];
  Rational obj;

  LpSolution out;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rational ratio = rhs[i] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave == m) {
      out.status = LpStatus::unbounded;
      return out;
    }

    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
      }
      rhs[i] -= f * rhs[leave];
    }
    if (!z[enter].is_zero()) {
      const Rational f = z[enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!t[leave][j].is_zero()) z[j] -= f * t[leave][j];
      }
      obj -= f * rhs[leave];
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  out.status = LpStatus::optimal;
  out.objective = obj;
  out.x.assign(n, Rational{});
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) out.x[basis[i]] = rhs[i];
  }
  out.y.assign(m, Rational{});
  for (std::size_t i = 0; i < m; ++i) out.y[i] = z[n + i];
  return out;
}

LpSolution solve_lp_lazy(const LpProblem& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  for (const auto& row : lp.a) {
    if (row.size() != n) throw invalid_argument("lp: ragged constraint matrix");
    for (const auto& x : row) {
      if (x.sign() < 0) throw invalid_argument("lp: lazy rows need A >= 0");
    }
  }
  if (lp.b.size() != m) throw invalid_argument("lp: b has wrong length");

  std::vector<bool> active(m, false);
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (lp.a[i][j].sign() > 0) {
        if (!active[i]) rows.push_back(i);
        active[i] = true;
        break;
      }
    }
  }
  const std::size_t batch = std::max<std::size_t>(16, 2 * n);

  for (;;) {
    std::sort(rows.begin(), rows.end());
    LpProblem sub;
    sub.c = lp.c;
    for (std::size_t i : rows) {
      sub.a.push_back(lp.a[i]);
      sub.b.push_back(lp.b[i]);
    }
    LpSolution sol = solve_lp(sub);
    if (sol.status == LpStatus::unbounded) return sol;

    std::vector<std::pair<Rational, std::size_t>> violated;
    for (std::size_t i = 0; i < m; ++i) {
      if (active[i]) continue;
      Rational lhs;
      for (std::size_t j = 0; j < n; ++j) {
        if (!sol.x[j].is_zero()) lhs += lp.a[i][j] * sol.x[j];
      }
      if (lhs > lp.b[i]) violated.emplace_back(lhs - lp.b[i], i);
    }
    if (violated.empty()) {
      std::vector<Rational> y(m);
      for (std::size_t k = 0; k < rows.size(); ++k) y[rows[k]] = sol.y[k];
      sol.y = std::move(y);
      return sol;
    }
    const std::size_t take = std::min(batch, violated.size());
    std::partial_sort(violated.begin(), violated.begin() + take, violated.end(),
                      [](const auto& a, const auto& b) {
                        return a.first != b.first ? a.first > b.first
                                                  : a.second < b.second;
                      });
    for (std::size_t k = 0; k < take; ++k) {
      active[violated[k].second] = true;
      rows.push_back(violated[k].second);
    }
  }
}

bool certifies_optimality(const LpProblem& lp, const LpSolution& s) {
  if (s.status != LpStatus::optimal) return false;
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (s.x.size() != n || s.y.size() != m) return false;
  Rational primal, dual;
  for (std::size_t j = 0; j < n; ++j) {
    if (s.x[j].sign() < 0) return false;
    primal += lp.c[j] * s.x[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.a[i][j] * s.x[j];
    if (lhs > lp.b[i]) return false;
    if (s.y[i].sign() < 0) return false;
    dual += lp.b[i] * s.y[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col;
    for (std::size_t i = 0; i < m; ++i) col += lp.a[i][j] * s.y[i];
    if (col < lp.c[j]) return false;
  }
  return primal == dual && primal == s.objective;
}

}  // namespace pebble
