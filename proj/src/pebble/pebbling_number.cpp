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

#include "pebble/pebbling_number.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include "pebble/error.hpp"

namespace pebble {

namespace {

struct Interrupted {};

constexpr int kMaxCapExponent = 30;

std::int64_t vertex_cap(int d) {
  if (d <= 0) return 0;
  return (std::int64_t{1} << std::min(d, kMaxCapExponent)) - 1;
}

class UnsolvableSearch {
 public:
  UnsolvableSearch(const Graph& g, Vertex root, const SolverBudget& budget,
                   std::int64_t stop_at)
      : g_(g), root_(root), solver_(g, root, budget), stop_at_(stop_at) {
    const auto& dist = solver_.root_distances();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != root) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });
    rem_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i-- > 0;) {
      rem_[i] = rem_[i + 1] + vertex_cap(dist[order_[i]]);
    }
    p_.assign(g.order(), 0);
  }

  RootedPebblingResult run() {
    RootedPebblingResult out;
    out.root = root_;
    seed_incumbent();
    bool finished = true;
    if (best_ < stop_at_) {
      try {
        recurse(0);
      } catch (const Interrupted&) {
        finished = stopped_;
      }
    }
    out.witness = Configuration(best_config_);
    out.lower = best_ + 1;
    out.upper = rem_[0] + 1;
    out.exact = finished && !stopped_;
    if (out.exact) out.upper = out.lower;
    out.states = solver_.states();
    return out;
  }

  bool stopped() const { return stopped_ || best_ >= stop_at_; }

 private:
  // One pebble on every non-root vertex is always unsolvable, as is
  // 2^ecc - 1 pebbles on a farthest vertex.
  void seed_incumbent() {
    best_config_.assign(g_.order(), 1);
    best_config_[root_] = 0;
    best_ = g_.order() - 1;
    if (!order_.empty()) {
      const Vertex far = order_.front();
      const std::int64_t far_cap =
          vertex_cap(solver_.root_distances()[far]);
      if (far_cap > best_) {
        best_ = far_cap;
        best_config_.assign(g_.order(), 0);
        best_config_[far] = static_cast<int>(far_cap);
      }
    }
  }

  bool unsolvable_now() {
    const Verdict v = solver_.decide(Configuration(p_));
    if (v == Verdict::budget_exceeded) throw Interrupted{};
    return v == Verdict::unsolvable;
  }

  void recurse(std::size_t i) {
    if (i == order_.size()) {
      if (size_ > best_) {
        best_ = size_;
        best_config_ = p_;
        if (best_ >= stop_at_) {
          stopped_ = true;
          throw Interrupted{};
        }
      }
      return;
    }
    if (size_ + rem_[i] <= best_) return;
    const Vertex v = order_[i];
    const std::int64_t cap = rem_[i] - rem_[i + 1];

    // Largest count at v keeping the partial configuration unsolvable;
    // solvability is monotone in the count.
    std::int64_t lo = 0, hi = cap;
    while (lo < hi) {
      const std::int64_t mid = (lo + hi + 1) / 2;
      p_[v] = static_cast<int>(mid);
      if (unsolvable_now()) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    for (std::int64_t c = lo; c >= 0; --c) {
      if (size_ + c + rem_[i + 1] <= best_) break;
      p_[v] = static_cast<int>(c);
      size_ += c;
      recurse(i + 1);
      size_ -= c;
    }
    p_[v] = 0;
  }

  const Graph& g_;
  Vertex root_;
  Solver solver_;
  std::int64_t stop_at_;
  std::vector<Vertex> order_;
  std::vector<std::int64_t> rem_;
  std::vector<int> p_;
  std::int64_t size_ = 0;
  std::int64_t best_ = -1;
  std::vector<int> best_config_;
  bool stopped_ = false;
};

SolverBudget remaining(const SolverBudget& budget,
                       std::chrono::steady_clock::time_point deadline) {
  SolverBudget b = budget;
  const auto left = std::chrono::duration<double>(
      deadline - std::chrono::steady_clock::now());
  b.time_limit = std::max(left, std::chrono::duration<double>(1e-3));
  return b;
}

template <typename Fn>
std::vector<RootedPebblingResult> for_roots(const std::vector<Vertex>& roots,
                                            int jobs, Fn&& fn) {
  std::vector<RootedPebblingResult> out(roots.size());
  if (jobs <= 1 || roots.size() <= 1) {
    for (std::size_t i = 0; i < roots.size(); ++i) out[i] = fn(roots[i]);
    return out;
  }
  for (std::size_t start = 0; start < roots.size();
       start += static_cast<std::size_t>(jobs)) {
    std::vector<std::future<RootedPebblingResult>> batch;
    const std::size_t end =
        std::min(roots.size(), start + static_cast<std::size_t>(jobs));
    for (std::size_t i = start; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, fn, roots[i]));
    }
    for (std::size_t i = start; i < end; ++i) out[i] = batch[i - start].get();
  }
  return out;
}

}  // namespace

RootedPebblingResult max_unsolvable(const Graph& g, Vertex root,
                                    const SolverBudget& budget) {
  g.require_vertex(root, "root");
  budget.validate();
  UnsolvableSearch search(g, root, budget,
                          std::numeric_limits<std::int64_t>::max());
  return search.run();
}

RootedPebblingResult pebbling_number_rooted(const Graph& g, Vertex root,
                                            const SolverBudget& budget) {
  return max_unsolvable(g, root, budget);
}

PebblingResult pebbling_number(const Graph& g, const SolverBudget& budget,
                               const PebblingOptions& options) {
  budget.validate();
  const auto deadline =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          budget.time_limit);
  std::vector<Vertex> roots;
  const int count = options.assume_vertex_transitive ? 1 : g.order();
  for (Vertex r = 0; r < count; ++r) roots.push_back(r);

  PebblingResult out;
  out.per_root = for_roots(roots, options.jobs, [&](Vertex r) {
    return max_unsolvable(g, r, remaining(budget, deadline));
  });
  out.exact = true;
  for (const auto& r : out.per_root) {
    out.exact = out.exact && r.exact;
    out.upper = std::max(out.upper, r.upper);
    if (r.lower > out.lower) {
      out.lower = r.lower;
      out.root = r.root;
      out.witness = r.witness;
    }
  }
  if (out.exact) out.upper = out.lower;
  return out;
}

Class0Result is_class0(const Graph& g, const SolverBudget& budget,
                       const PebblingOptions& options) {
  budget.validate();
  const auto deadline =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          budget.time_limit);
  std::vector<Vertex> roots;
  const int count = options.assume_vertex_transitive ? 1 : g.order();
  for (Vertex r = 0; r < count; ++r) roots.push_back(r);

  auto probe = [&](Vertex r) {
    UnsolvableSearch search(g, r, remaining(budget, deadline), g.order());
    return search.run();
  };

  Class0Result out;
  bool budget_hit = false;
  auto inspect = [&](const RootedPebblingResult& r) {
    if (r.lower - 1 >= g.order()) {
      out.status = Class0Status::no;
      out.root = r.root;
      out.witness = r.witness;
      return true;
    }
    if (!r.exact) budget_hit = true;
    return false;
  };
  if (options.jobs <= 1) {
    for (Vertex r : roots) {
      if (inspect(probe(r))) return out;
    }
  } else {
    for (const auto& r : for_roots(roots, options.jobs, probe)) {
      if (inspect(r)) return out;
    }
  }
  out.status = budget_hit ? Class0Status::budget_exceeded : Class0Status::yes;
  return out;
}

}  // namespace pebble
