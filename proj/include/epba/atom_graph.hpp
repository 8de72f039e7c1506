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
#include <string>
#include <variant>
#include <vector>

#include "epba/algebra.hpp"
#include "epba/graph.hpp"

namespace epba {

/// Vertex k is atoms(b)[k], named by its label; edges join distinct
/// compatible atoms.
AtomGraph atom_graph(const PartialBooleanAlgebra& b);

struct ReconstructOptions {
  std::size_t vertex_cap = 64;
  std::size_t clique_cap = 10'000;
  /// Upper bound on the number of (clique, subset) pairs considered.
  std::size_t pair_cap = 1u << 14;
};

struct Realization {
  PartialBooleanAlgebra algebra;
  /// atom_map[v] is the element of `algebra` standing for vertex v.
  std::vector<ElementId> atom_map;
};

struct NotRealizable {
  std::string condition;  // first violated check, e.g. "equivalence:transitivity"
  std::string detail;
};

struct ReconstructionResult {
  std::variant<Realization, NotRealizable> outcome;

  bool realizable() const {
    return std::holds_alternative<Realization>(outcome);
  }
  const Realization& realization() const {
    return std::get<Realization>(outcome);
  }
  const NotRealizable& failure() const {
    return std::get<NotRealizable>(outcome);
  }
};

/// Builds the exclusive partial Boolean algebra whose atom graph is `g`, if
/// one exists. Elements are classes of (maximal clique, subset) pairs where
/// (C1, A1) ~ (C2, A2) iff (C1 \ A1) ∪ A2 and A1 ∪ (C2 \ A2) are both maximal
/// cliques. Every axiom of the result is verified; the first failed check is
/// reported as NotRealizable. Throws CapExceeded past the configured caps.
ReconstructionResult reconstruct(const Graph& g,
                                 const ReconstructOptions& options = {});

}  // namespace epba
