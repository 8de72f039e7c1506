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

#pragma once

#include <cstddef>
#include <vector>

namespace epba {

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

/// maximize objective·x subject to rows, x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<double> coefficients;
    RowSense sense = RowSense::kLessEqual;
    double rhs = 0.0;
  };

  explicit LinearProgram(std::size_t num_vars)
      : num_vars(num_vars), objective(num_vars, 0.0) {}

  void add_row(std::vector<double> coefficients, RowSense sense, double rhs) {
    rows.push_back({std::move(coefficients), sense, rhs});
  }

  std::size_t num_vars;
  std::vector<double> objective;
  std::vector<Row> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
};

struct LpOptions {
  double tolerance = 1e-11;
  std::size_t max_iterations = 200'000;
};

/// Two-phase dense tableau simplex with Bland's rule. Throws SolverFailure
/// when the iteration limit is reached.
LpSolution solve_lp(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace epba
