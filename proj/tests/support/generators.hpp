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

// Seeded random instances for property tests.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "epba/algebra.hpp"
#include "epba/graph.hpp"
#include "epba/states.hpp"

namespace gen {

using Rng = std::mt19937_64;

/// Erdős–Rényi graph G(n, p).
epba::Graph random_graph(std::size_t n, double p, Rng& rng);

/// Union of random cliques of size 2..max_clique covering n vertices.
epba::Graph clique_union_graph(std::size_t n, std::size_t cliques,
                               std::size_t max_clique, Rng& rng);

/// Glues one to three power-set algebras (one to three atoms each) by
/// identifying a few random element pairs together with their negations.
/// Returns an algebra only when the tables are consistent, the result
/// passes validate_pba and it has at most max_elements elements. Element
/// order is shuffled.
std::optional<epba::PartialBooleanAlgebra> random_glued_pba(
    Rng& rng, std::size_t max_elements = 12);

/// Element order shuffled, zero and one kept where the permutation puts them.
epba::PartialBooleanAlgebra shuffled(const epba::PartialBooleanAlgebra& b,
                                     Rng& rng);

/// All graphs on at most max_n vertices, one per isomorphism class.
std::vector<epba::Graph> all_graphs_up_to_iso(std::size_t max_n);

/// Realizable epBAs: reconstructions of every graph with at most five
/// vertices and of random clique unions on six to nine vertices, together
/// with relabelled copies. Pairwise distinct as tables.
std::vector<epba::PartialBooleanAlgebra> epba_catalog(std::uint64_t seed);

/// Positive weights drawn from (0.1, 2).
std::vector<double> random_weights(std::size_t n, Rng& rng);

/// Convex combination of the given vectors with Dirichlet(1) coefficients.
std::vector<double> random_mixture(const std::vector<std::vector<double>>& points,
                                   Rng& rng);

}  // namespace gen
