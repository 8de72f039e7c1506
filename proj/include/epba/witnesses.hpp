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
#include <cstdint>
#include <span>
#include <vector>

#include "epba/graph.hpp"

namespace epba {

/// Nonnegative vertex weights, indexed by vertex id.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::vector<double> weights);

  static WeightFunction ones(std::size_t n);

  std::size_t size() const { return weights_.size(); }
  double operator[](VertexId v) const { return weights_[v]; }
  const std::vector<double>& values() const { return weights_; }

 private:
  std::vector<double> weights_;
};

struct AlphaResult {
  double value = 0.0;
  std::vector<VertexId> independent_set;  // lexicographically least optimum
};

struct AlphaOptions {
  std::uint64_t node_budget = 50'000'000;
};

/// Weighted independence number by branch and bound, bounding each node
/// with a greedy weighted clique cover.
AlphaResult alpha(const Graph& g, const WeightFunction& w,
                  const AlphaOptions& options = {});

struct ThetaResult {
  double value = 0.0;  // midpoint of [primal, dual]
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
  std::size_t iterations = 0;
};

/// Weighted Lovász number: max sum sqrt(w_i w_j) X_ij over PSD X with unit
/// trace and X_ij = 0 on every edge. Certified gap below 1e-6.
ThetaResult theta(const Graph& g, const WeightFunction& w);

struct AlphaStarResult {
  double value = 0.0;
  std::vector<double> x;  // optimal fractional packing
};

/// Weighted fractional packing number over the maximal-clique constraints.
AlphaStarResult alpha_star(const Graph& g, const WeightFunction& w);

struct Tolerances {
  double theta = 1e-4;      // reported accuracy of theta
  double gap_found = 1e-4;  // alpha < theta - gap_found
};

struct WitnessReport {
  AlphaResult alpha;
  ThetaResult theta;
  AlphaStarResult alpha_star;
  bool gap_found = false;
  Tolerances tolerances;
};

/// All three bounds of the noncontextuality inequality sum w(v) p(v) <= alpha.
/// Throws SolverFailure if alpha <= theta <= alpha* fails beyond tolerance.
WitnessReport nc_inequality_report(const Graph& g, const WeightFunction& w);

/// sum_v w(v) p(v), the left-hand side of the inequality.
double nc_expression(const WeightFunction& w, std::span<const double> p);

}  // namespace epba
