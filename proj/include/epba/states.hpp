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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "epba/algebra.hpp"
#include "epba/graph.hpp"

namespace epba {

inline constexpr double kStateTolerance = 1e-9;

/// Probability per element, indexed by ElementId.
struct AlgebraState {
  std::vector<double> values;
};

/// Probability per vertex, indexed by VertexId. Clique sums are exactly one.
struct GraphState {
  std::vector<double> values;
};

/// Like GraphState, with clique sums at most one.
struct Substate {
  std::vector<double> values;
};

struct StateCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

/// p(0) = 0, p(~x) = 1 - p(x), p(x|y) + p(x&y) = p(x) + p(y) on compatible
/// pairs, and every value in [0, 1]. Checked exhaustively.
StateCheck is_state(const PartialBooleanAlgebra& b, std::span<const double> p,
                    double tolerance = kStateTolerance);

StateCheck is_graph_state(const Graph& g, std::span<const double> p,
                          double tolerance = kStateTolerance);
StateCheck is_substate(const Graph& g, std::span<const double> p,
                       double tolerance = kStateTolerance);

/// Values on atoms(b), in atom order. Requires LEP (LepRequired) and a state.
GraphState restrict_state(const PartialBooleanAlgebra& b,
                          const AlgebraState& p);

/// The unique state on `b` whose restriction to the atoms is `q`: each
/// element gets the summed weight of the atoms below it in any maximal
/// context holding it. Agreement across contexts is verified.
/// Throws LepRequired or NotAtomSpanned.
AlgebraState extend_state(const PartialBooleanAlgebra& b, const GraphState& q);

struct EnumerationOptions {
  std::size_t state_cap = 1'000'000;
};

/// Every 0-1 state: independent sets meeting each maximal clique exactly
/// once. Sorted by the ascending list of selected vertices.
std::vector<GraphState> zero_one_states(const Graph& g,
                                        const EnumerationOptions& options = {});

/// No 0-1 state exists.
bool has_ks_property(const Graph& g, const EnumerationOptions& options = {});

/// A state maximising its smallest vertex value, or nullopt when the clique
/// constraints are infeasible.
std::optional<GraphState> state_feasible(const Graph& g);

/// Random point of the state polytope: a Dirichlet mixture of LP vertices for
/// random objectives and the feasible point above. nullopt if no state exists.
std::optional<GraphState> sample_graph_state(const Graph& g,
                                             std::mt19937_64& rng);

}  // namespace epba
