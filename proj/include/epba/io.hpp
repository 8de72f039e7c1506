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

#include <string>
#include <vector>

#include <json.hpp>

#include "epba/algebra.hpp"
#include "epba/atom_graph.hpp"
#include "epba/graph.hpp"
#include "epba/quantum.hpp"
#include "epba/states.hpp"
#include "epba/witnesses.hpp"

namespace epba::io {

using Json = nlohmann::json;

/// Rounds to 10 significant digits so emitted floats are stable.
double round10(double x);

/// Reads and parses a JSON file ("-" is stdin). Parse errors become
/// InvalidInput carrying "path:line:column".
Json load_json(const std::string& path);
Json parse_json(const std::string& text, const std::string& source = "<input>");
std::string dump(const Json& j);

Json to_json(const PartialBooleanAlgebra& b);
PartialBooleanAlgebra algebra_from_json(const Json& j);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);
/// Graph JSON with a "cliques" list appended.
Json to_json(const Graph& g, const CliqueCover& cover);

/// {"values": {name: number}} keyed by the given names.
Json state_to_json(const std::vector<std::string>& names,
                   const std::vector<double>& values);
/// Every name must be present; unknown keys raise UnknownElement.
std::vector<double> state_from_json(const Json& j,
                                    const std::vector<std::string>& names);

/// {"weights": {name: number}}; vertices not listed get weight 1.
WeightFunction weights_from_json(const Json& j, const Graph& g);
Json weights_to_json(const Graph& g, const WeightFunction& w);

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, std::size_t dim);

/// {"dim": d, "projectors": [{"name", "re", "im"}]}.
Json projectors_to_json(const std::vector<Projector>& projectors,
                        const std::vector<std::string>& names);
std::vector<Projector> projectors_from_json(const Json& j,
                                            std::vector<std::string>* names);

/// {"dim": d, "re": [[...]], "im": [[...]]}.
Json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

Json to_json(const PartialBooleanAlgebra& b, const ValidationReport& r);
Json to_json(const Graph& g, const WitnessReport& r);
Json to_json(const Graph& g, const ReconstructionResult& r);
/// Algebra, generator names and projector matrices.
Json to_json(const QuantumSystem& q);

}  // namespace epba::io
