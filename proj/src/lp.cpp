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

#include "epba/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "epba/error.hpp"

namespace epba {

namespace {

constexpr double kPivotTolerance = 1e-9;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0),
        basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  // Row `rows_` holds reduced costs; its rhs slot holds minus the objective.
  double& cost(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  // Loads reduced costs for objective `c` (indexed by column) given the basis.
  void load_costs(const std::vector<double>& c) {
    for (std::size_t j = 0; j <= cols_; ++j) cost(j) = j < cols_ ? c[j] : 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) cost(j) -= cb * at(i, j);
    }
  }

  // Bland's rule. Returns false on unboundedness.
  bool optimise(const std::vector<bool>& allowed, double tol,
                std::size_t& iterations, std::size_t max_iterations) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && cost(j) > tol) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        const double a = at(i, enter);
        if (a <= kPivotTolerance) continue;
        const double ratio = rhs(i) / a;
        if (leave == rows_ || ratio < best - tol ||
            (ratio <= best + tol && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == rows_) return false;
      if (++iterations > max_iterations) {
        throw SolverFailure("simplex exceeded " +
                            std::to_string(max_iterations) + " iterations");
      }
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const LpOptions& options) {
  const std::size_t n = lp.num_vars;
  const std::size_t m = lp.rows.size();
  const double tol = options.tolerance;

  // Normalise to rhs >= 0.
  std::vector<LinearProgram::Row> rows = lp.rows;
  for (auto& row : rows) {
    if (row.coefficients.size() != n)
      throw InvalidInput("LP row has wrong number of coefficients");
    if (row.rhs < 0) {
      for (double& a : row.coefficients) a = -a;
      row.rhs = -row.rhs;
      if (row.sense == RowSense::kLessEqual) row.sense = RowSense::kGreaterEqual;
      else if (row.sense == RowSense::kGreaterEqual) row.sense = RowSense::kLessEqual;
    }
  }
  std::size_t slacks = 0, artificials = 0;
  for (const auto& row : rows) {
    if (row.sense != RowSense::kEqual) ++slacks;
    if (row.sense != RowSense::kLessEqual) ++artificials;
  }
  const std::size_t cols = n + slacks + artificials;
  Tableau t(m, cols);
  std::vector<bool> is_artificial(cols, false);
  std::size_t next_slack = n, next_art = n + slacks;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = rows[i].coefficients[j];
    t.rhs(i) = rows[i].rhs;
    switch (rows[i].sense) {
      case RowSense::kLessEqual:
        t.at(i, next_slack) = 1.0;
        t.basis()[i] = next_slack++;
        break;
      case RowSense::kGreaterEqual:
        t.at(i, next_slack++) = -1.0;
        [[fallthrough]];
      case RowSense::kEqual:
        t.at(i, next_art) = 1.0;
        is_artificial[next_art] = true;
        t.basis()[i] = next_art++;
        break;
    }
  }

  LpSolution sol;
  std::vector<bool> allowed(cols, true);
  if (artificials > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j)
      if (is_artificial[j]) phase1[j] = -1.0;
    t.load_costs(phase1);
    t.optimise(allowed, tol, sol.iterations, options.max_iterations);
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      if (is_artificial[t.basis()[i]]) infeasibility += t.rhs(i);
    if (infeasibility > 1e-9) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Pivot remaining (zero-valued) artificials out where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_artificial[t.basis()[i]]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!is_artificial[j] && std::abs(t.at(i, j)) > 1e-9) {
          t.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = 0; j < cols; ++j)
      if (is_artificial[j]) allowed[j] = false;
  }

  std::vector<double> phase2(cols, 0.0);
  std::copy(lp.objective.begin(), lp.objective.end(), phase2.begin());
  t.load_costs(phase2);
  if (!t.optimise(allowed, tol, sol.iterations, options.max_iterations)) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.status = LpStatus::kOptimal;
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis()[i] < n) sol.x[t.basis()[i]] = std::max(0.0, t.rhs(i));
  sol.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.objective += lp.objective[j] * sol.x[j];
  return sol;
}

}  // namespace epba
