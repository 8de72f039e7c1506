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
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace epba {

struct SdpOptions {
  /// Stop once dual - primal <= gap_tolerance * max(1, |primal|).
  double gap_tolerance = 1e-9;
  std::size_t max_iterations = 300;
};

struct ThetaSdpSolution {
  double primal = 0.0;  // <C, X> at the final primal iterate
  double dual = 0.0;    // upper bound certified by the dual slack Z > 0
  std::size_t iterations = 0;
  double primal_residual = 0.0;  // max |X_ij| over constrained entries, |tr X - 1|
  Eigen::MatrixXd x;
};

/// Solves  max sum_ij sqrt(w_i w_j) X_ij  s.t. tr X = 1, X_ij = 0 on `zero_entries`,
/// X PSD, with a feasible-start primal-dual interior point method (HKM
/// direction). Throws SolverFailure on non-convergence.
ThetaSdpSolution solve_theta_sdp(
    std::size_t n, std::span<const std::pair<int, int>> zero_entries,
    std::span<const double> weights, const SdpOptions& options = {});

}  // namespace epba
