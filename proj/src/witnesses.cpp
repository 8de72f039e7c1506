// Copyright 2026 The epba Authors
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

#include "epba/witnesses.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "epba/error.hpp"
#include "epba/lp.hpp"
#include "epba/sdp.hpp"

namespace epba {

WeightFunction::WeightFunction(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw InvalidInput("weights must be finite and nonnegative");
  }
}

WeightFunction WeightFunction::ones(std::size_t n) {
  return WeightFunction(std::vector<double>(n, 1.0));
}

namespace {

void check_weights(const Graph& g, const WeightFunction& w) {
  if (w.size() != g.size())
    throw InvalidInput("weight function has " + std::to_string(w.size()) +
                       " entries for a graph with " +
                       std::to_string(g.size()) + " vertices");
}

using Mask = std::uint64_t;

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, const WeightFunction& w,
                       std::uint64_t budget)
      : w_(w), budget_(budget), adj_(g.size(), 0) {
    double total = 0.0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto& nb = g.neighbors(static_cast<VertexId>(v));
      for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u))
        adj_[v] |= Mask{1} << u;
      total += w[static_cast<VertexId>(v)];
    }
    eps_ = 1e-12 * std::max(1.0, total);
  }

  AlphaResult run() {
    Mask candidates = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v)
      if (w_[static_cast<VertexId>(v)] > 0) candidates |= Mask{1} << v;
    expand(0, 0.0, candidates);
    AlphaResult out;
    for (Mask r = best_set_; r != 0; r &= r - 1) {
      const auto v = static_cast<VertexId>(std::countr_zero(r));
      out.independent_set.push_back(v);
      out.value += w_[v];
    }
    return out;
  }

 private:
  // Lexicographic order on ascending vertex lists.
  static bool lex_less(Mask a, Mask b) {
    while (a != 0 && b != 0) {
      const int x = std::countr_zero(a), y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  }

  double cover_bound(Mask p) const {
    std::vector<int> order;
    for (Mask r = p; r != 0; r &= r - 1) order.push_back(std::countr_zero(r));
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return w_[a] > w_[b]; });
    std::vector<Mask> cliques;
    double bound = 0.0;
    for (int v : order) {
      auto it = std::find_if(cliques.begin(), cliques.end(), [&](Mask c) {
        return (c & ~adj_[v]) == 0;
      });
      if (it == cliques.end()) {
        cliques.push_back(Mask{1} << v);
        bound += w_[v];  // heaviest member, since vertices arrive by weight
      } else {
        *it |= Mask{1} << v;
      }
    }
    return bound;
  }

  void expand(Mask chosen, double value, Mask p) {
    if (++nodes_ > budget_)
      throw SearchBudgetExceeded("independent set search exceeded " +
                                 std::to_string(budget_) + " nodes");
    if (p == 0) {
      if (!found_ || value > best_ + eps_ ||
          (value >= best_ - eps_ && lex_less(chosen, best_set_))) {
        found_ = true;
        best_ = value;
        best_set_ = chosen;
      }
      return;
    }
    if (found_ && value + cover_bound(p) < best_ - eps_) return;
    const int v = std::countr_zero(p);
    const Mask bit = Mask{1} << v;
    expand(chosen | bit, value + w_[v], p & ~adj_[v] & ~bit);
    expand(chosen, value, p & ~bit);
  }

  const WeightFunction& w_;
  std::uint64_t budget_;
  std::vector<Mask> adj_;
  double eps_ = 0.0;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  double best_ = 0.0;
  Mask best_set_ = 0;
};

}  // namespace

AlphaResult alpha(const Graph& g, const WeightFunction& w,
                  const AlphaOptions& options) {
  check_weights(g, w);
  if (g.size() > 64)
    throw CapExceeded("alpha is limited to 64 vertices");
  return IndependentSetSearch(g, w, options.node_budget).run();
}

ThetaResult theta(const Graph& g, const WeightFunction& w) {
  check_weights(g, w);
  if (g.size() > 64) throw CapExceeded("theta is limited to 64 vertices");
  const auto edges = g.edges();
  std::vector<std::pair<int, int>> zeros(edges.begin(), edges.end());
  const auto sol = solve_theta_sdp(g.size(), zeros, w.values());
  ThetaResult out;
  out.primal = sol.primal;
  out.dual = sol.dual;
  out.gap = sol.dual - sol.primal;
  out.value = 0.5 * (sol.primal + sol.dual);
  out.iterations = sol.iterations;
  if (std::abs(out.gap) > 1e-6 || sol.primal_residual > 1e-6) {
    throw SolverFailure("theta SDP gap " + std::to_string(out.gap) +
                        " exceeds 1e-6");
  }
  return out;
}

AlphaStarResult alpha_star(const Graph& g, const WeightFunction& w) {
  check_weights(g, w);
  const auto cover = maximal_cliques(g);
  const std::size_t n = g.size();
  LinearProgram lp(n);
  lp.objective = w.values();
  for (const auto& clique : cover.cliques) {
    std::vector<double> row(n, 0.0);
    for (VertexId v : clique) row[v] = 1.0;
    lp.add_row(std::move(row), RowSense::kLessEqual, 1.0);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<double> row(n, 0.0);
    row[v] = 1.0;
    lp.add_row(std::move(row), RowSense::kLessEqual, 1.0);
  }
  const auto sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal)
    throw SolverFailure("fractional packing LP did not reach an optimum");
  return AlphaStarResult{sol.objective, sol.x};
}

WitnessReport nc_inequality_report(const Graph& g, const WeightFunction& w) {
  WitnessReport r;
  r.alpha = alpha(g, w);
  r.theta = theta(g, w);
  r.alpha_star = alpha_star(g, w);
  const double tol = r.tolerances.theta;
  if (r.alpha.value > r.theta.value + tol ||
      r.theta.value > r.alpha_star.value + tol) {
    std::ostringstream os;
    os.precision(10);
    os << "sandwich violated: alpha " << r.alpha.value << ", theta "
       << r.theta.value << ", alpha* " << r.alpha_star.value;
    throw SolverFailure(os.str());
  }
  r.gap_found = r.alpha.value < r.theta.value - r.tolerances.gap_found;
  return r;
}

double nc_expression(const WeightFunction& w, std::span<const double> p) {
  if (p.size() != w.size()) throw InvalidInput("state and weights differ in size");
  double total = 0.0;
  for (std::size_t v = 0; v < p.size(); ++v)
    total += w[static_cast<VertexId>(v)] * p[v];
  return total;
}

}  // namespace epba
