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

#include "epba/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "epba/atom_graph.hpp"
#include "epba/error.hpp"
#include "epba/lp.hpp"

namespace epba {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

StateCheck is_state(const PartialBooleanAlgebra& b, std::span<const double> p,
                    double tolerance) {
  if (p.size() != b.size())
    throw UnknownElement("state has " + std::to_string(p.size()) +
                         " values for " + std::to_string(b.size()) +
                         " elements");
  StateCheck out;
  auto add = [&](std::string v) {
    out.ok = false;
    if (out.violations.size() < 100) out.violations.push_back(std::move(v));
  };
  if (std::abs(p[b.zero()]) > tolerance) add("p(0)=0");
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto x = static_cast<ElementId>(i);
    if (!(p[i] >= -tolerance && p[i] <= 1.0 + tolerance))
      add("range: p(" + b.label(x) + ")=" + fmt(p[i]));
    const ElementId nx = b.neg(x);
    if (nx != kNoElement && std::abs(p[nx] - (1.0 - p[i])) > tolerance)
      add("p(~x)=1-p(x) at " + b.label(x));
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const auto y = static_cast<ElementId>(j);
      if (!b.compatible(x, y)) continue;
      const ElementId m = b.meet(x, y), jn = b.join(x, y);
      if (m == kNoElement || jn == kNoElement) continue;
      if (std::abs(p[jn] + p[m] - p[i] - p[j]) > tolerance)
        add("modularity at (" + b.label(x) + ", " + b.label(y) + ")");
    }
  }
  return out;
}

namespace {

StateCheck check_clique_sums(const Graph& g, std::span<const double> p,
                             double tolerance, bool exact) {
  if (p.size() != g.size())
    throw InvalidInput("state has " + std::to_string(p.size()) +
                       " values for " + std::to_string(g.size()) +
                       " vertices");
  StateCheck out;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (!(p[v] >= -tolerance && p[v] <= 1.0 + tolerance)) {
      out.ok = false;
      out.violations.push_back("range: p(" +
                               g.name(static_cast<VertexId>(v)) + ")");
    }
  }
  for (const auto& clique : maximal_cliques(g).cliques) {
    double sum = 0.0;
    for (VertexId v : clique) sum += p[v];
    const bool bad = exact ? std::abs(sum - 1.0) > tolerance
                           : sum > 1.0 + tolerance;
    if (bad) {
      out.ok = false;
      std::string names;
      for (VertexId v : clique) names += (names.empty() ? "" : ",") + g.name(v);
      out.violations.push_back("clique sum " + fmt(sum) + " on {" + names + "}");
    }
  }
  return out;
}

}  // namespace

StateCheck is_graph_state(const Graph& g, std::span<const double> p,
                          double tolerance) {
  return check_clique_sums(g, p, tolerance, true);
}

StateCheck is_substate(const Graph& g, std::span<const double> p,
                       double tolerance) {
  return check_clique_sums(g, p, tolerance, false);
}

GraphState restrict_state(const PartialBooleanAlgebra& b,
                          const AlgebraState& p) {
  if (!satisfies_lep(b))
    throw LepRequired("state restriction needs an exclusive algebra");
  if (const auto check = is_state(b, p.values); !check.ok)
    throw InvalidInput("not a state: " + check.violations.front());
  GraphState out;
  for (ElementId a : atoms(b)) out.values.push_back(p.values[a]);
  return out;
}

AlgebraState extend_state(const PartialBooleanAlgebra& b, const GraphState& q) {
  if (!satisfies_lep(b))
    throw LepRequired("state extension needs an exclusive algebra");
  const auto at = atoms(b);
  if (q.values.size() != at.size())
    throw InvalidInput("graph state has " + std::to_string(q.values.size()) +
                       " values for " + std::to_string(at.size()) + " atoms");
  if (const auto check = is_graph_state(atom_graph(b), q.values); !check.ok)
    throw InvalidInput("not a graph state: " + check.violations.front());

  std::vector<int> atom_index(b.size(), -1);
  for (std::size_t k = 0; k < at.size(); ++k) atom_index[at[k]] = static_cast<int>(k);

  AlgebraState p;
  p.values.assign(b.size(), 0.0);
  std::vector<bool> assigned(b.size(), false);
  for (const auto& ctx : maximal_contexts(b)) {
    for (ElementId x : ctx.members) {
      ElementId acc = b.zero();
      double value = 0.0;
      for (ElementId a : ctx.atoms) {
        if (!leq(b, a, x)) continue;
        if (atom_index[a] < 0)
          throw NotAtomSpanned("context atom " + b.label(a) +
                               " is not an atom of the algebra");
        acc = b.join(acc, a);
        value += q.values[atom_index[a]];
      }
      if (acc != x)
        throw NotAtomSpanned("element " + b.label(x) +
                             " is not the join of the atoms below it");
      if (assigned[x] && std::abs(p.values[x] - value) > kStateTolerance) {
        throw Error("extension of the graph state is not well defined at " +
                    b.label(x));
      }
      p.values[x] = value;
      assigned[x] = true;
    }
  }
  return p;
}

namespace {

class ZeroOneEnumerator {
 public:
  ZeroOneEnumerator(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {
    cliques_ = maximal_cliques(g).cliques;
    member_of_.resize(g.size());
    for (std::size_t k = 0; k < cliques_.size(); ++k)
      for (VertexId v : cliques_[k]) member_of_[v].push_back(k);
    covered_.assign(cliques_.size(), 0);
    blocked_.assign(g.size(), 0);
  }

  std::vector<GraphState> run(bool stop_at_first) {
    stop_at_first_ = stop_at_first;
    recurse();
    std::sort(found_.begin(), found_.end());
    std::vector<GraphState> out;
    for (const auto& sel : found_) {
      GraphState s;
      s.values.assign(g_.size(), 0.0);
      for (VertexId v : sel) s.values[v] = 1.0;
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  bool recurse() {
    // Most constrained uncovered clique first.
    std::size_t pick = cliques_.size(), fewest = 0;
    for (std::size_t k = 0; k < cliques_.size(); ++k) {
      if (covered_[k]) continue;
      std::size_t avail = 0;
      for (VertexId v : cliques_[k]) avail += blocked_[v] == 0;
      if (avail == 0) return false;
      if (pick == cliques_.size() || avail < fewest) {
        pick = k;
        fewest = avail;
      }
    }
    if (pick == cliques_.size()) {
      if (found_.size() >= cap_)
        throw CapExceeded("more than " + std::to_string(cap_) + " 0-1 states");
      auto sel = chosen_;
      std::sort(sel.begin(), sel.end());
      found_.push_back(std::move(sel));
      return stop_at_first_;
    }
    for (VertexId v : cliques_[pick]) {
      if (blocked_[v]) continue;
      chosen_.push_back(v);
      for (std::size_t k : member_of_[v]) ++covered_[k];
      ++blocked_[v];
      const auto& nb = g_.neighbors(v);
      for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u))
        ++blocked_[u];
      const bool done = recurse();
      for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u))
        --blocked_[u];
      --blocked_[v];
      for (std::size_t k : member_of_[v]) --covered_[k];
      chosen_.pop_back();
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t cap_;
  bool stop_at_first_ = false;
  std::vector<std::vector<VertexId>> cliques_;
  std::vector<std::vector<std::size_t>> member_of_;
  std::vector<int> covered_;
  std::vector<int> blocked_;
  std::vector<VertexId> chosen_;
  std::vector<std::vector<VertexId>> found_;
};

LinearProgram state_polytope(const Graph& g, std::size_t extra_vars) {
  const std::size_t n = g.size();
  LinearProgram lp(n + extra_vars);
  for (const auto& clique : maximal_cliques(g).cliques) {
    std::vector<double> row(n + extra_vars, 0.0);
    for (VertexId v : clique) row[v] = 1.0;
    lp.add_row(std::move(row), RowSense::kEqual, 1.0);
  }
  return lp;
}

GraphState clamp(std::vector<double> x, std::size_t n) {
  x.resize(n);
  for (double& v : x) v = std::clamp(v, 0.0, 1.0);
  return GraphState{std::move(x)};
}

}  // namespace

std::vector<GraphState> zero_one_states(const Graph& g,
                                        const EnumerationOptions& options) {
  return ZeroOneEnumerator(g, options.state_cap).run(false);
}

bool has_ks_property(const Graph& g, const EnumerationOptions& options) {
  return ZeroOneEnumerator(g, options.state_cap).run(true).empty();
}

std::optional<GraphState> state_feasible(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return GraphState{};
  // Variables p_0..p_{n-1}, t; maximise t with p_v >= t.
  LinearProgram lp = state_polytope(g, 1);
  lp.objective[n] = 1.0;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<double> row(n + 1, 0.0);
    row[v] = 1.0;
    row[n] = -1.0;
    lp.add_row(std::move(row), RowSense::kGreaterEqual, 0.0);
  }
  const auto sol = solve_lp(lp);
  if (sol.status == LpStatus::kInfeasible) return std::nullopt;
  if (sol.status != LpStatus::kOptimal)
    throw SolverFailure("state feasibility LP is unbounded");
  auto state = clamp(sol.x, n);
  if (const auto check = is_graph_state(g, state.values, 1e-7); !check.ok)
    throw SolverFailure("state feasibility LP residual too large: " +
                        check.violations.front());
  return state;
}

std::optional<GraphState> sample_graph_state(const Graph& g,
                                             std::mt19937_64& rng) {
  auto centre = state_feasible(g);
  if (!centre) return std::nullopt;
  const std::size_t n = g.size();
  std::vector<std::vector<double>> points{centre->values};
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int k = 0; k < 3; ++k) {
    LinearProgram lp = state_polytope(g, 0);
    for (double& c : lp.objective) c = coef(rng);
    const auto sol = solve_lp(lp);
    if (sol.status == LpStatus::kOptimal) points.push_back(clamp(sol.x, n).values);
  }
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<double> mix(points.size());
  double total = 0.0;
  for (double& m : mix) total += (m = gamma(rng));
  GraphState out;
  out.values.assign(n, 0.0);
  for (std::size_t k = 0; k < points.size(); ++k)
    for (std::size_t v = 0; v < n; ++v)
      out.values[v] += mix[k] / total * points[k][v];
  return out;
}

}  // namespace epba
