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
#include <vector>

#include "epba/algebra.hpp"

namespace epba {

/// Glues power-set algebras, one per list of atom names, along shared labels.
/// Within a context the subset S of atoms is labelled "0", "1", the atom name
/// (|S| = 1), "~x" for the complement of a single atom x (with "~~x" read as
/// "x"), or the sorted atom names joined by "|". Equal labels denote one
/// element. Throws MalformedTable if the glued tables disagree.
PartialBooleanAlgebra from_contexts(
    const std::vector<std::vector<std::string>>& contexts);

/// Two contexts P({a1,b1,c}) and P({a2,b2,c}); 12 elements.
PartialBooleanAlgebra b1();
/// Two contexts P({a1,b1,~c}) and P({a2,b2,c}); 12 elements, violates LEP.
PartialBooleanAlgebra b2();
/// {0, a1, b1, a2, b2, 1} with contexts {0,a1,b1,1} and {0,a2,b2,1}.
PartialBooleanAlgebra b2_prime();
/// Power set of {x1, ..., xn}; n >= 1.
PartialBooleanAlgebra boolean_algebra(std::size_t n);

}  // namespace epba
