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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epba/graph.hpp"

namespace epba {

using ElementId = std::int32_t;
inline constexpr ElementId kNoElement = -1;

/// A finite partial Boolean algebra stored as explicit tables over dense
/// element ids. meet/join are defined exactly on compatible pairs; the
/// tables are symmetric. The object itself does not enforce the axioms:
/// run validate_pba() before relying on them.
class PartialBooleanAlgebra {
 public:
  PartialBooleanAlgebra() = default;

  /// Every element starts compatible with itself, with meet(a,a) = join(a,a) = a
  /// and an undefined negation.
  PartialBooleanAlgebra(std::vector<std::string> labels, ElementId zero,
                        ElementId one);

  std::size_t size() const { return labels_.size(); }
  ElementId zero() const { return zero_; }
  ElementId one() const { return one_; }

  const std::string& label(ElementId a) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Like find(), throwing UnknownElement.
  ElementId id(std::string_view name) const;

  bool compatible(ElementId a, ElementId b) const;
  /// kNoElement when undefined.
  ElementId meet(ElementId a, ElementId b) const;
  ElementId join(ElementId a, ElementId b) const;
  ElementId neg(ElementId a) const;

  void set_compatible(ElementId a, ElementId b, bool value = true);
  void set_meet(ElementId a, ElementId b, ElementId r);
  void set_join(ElementId a, ElementId b, ElementId r);
  void set_neg(ElementId a, ElementId r);

  /// Throws UnknownElement for ids outside [0, size()).
  void check(ElementId a) const;

  bool operator==(const PartialBooleanAlgebra& other) const;

 private:
  std::size_t at(ElementId a, ElementId b) const {
    return static_cast<std::size_t>(a) * labels_.size() +
           static_cast<std::size_t>(b);
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> index_;
  ElementId zero_ = kNoElement;
  ElementId one_ = kNoElement;
  std::vector<std::uint8_t> compat_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  std::vector<ElementId> neg_;
};

using Algebra = PartialBooleanAlgebra;

struct Violation {
  std::string axiom;
  std::vector<ElementId> witnesses;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

struct ValidationOptions {
  std::size_t element_cap = 4096;
  std::size_t clique_cap = 1'000'000;
  std::size_t max_violations = 100;
};

/// Checks every structural invariant plus the Boolean-subalgebra condition,
/// which is decided on the maximal pairwise-compatible sets: each must be
/// closed under the operations and isomorphic, via its atoms, to a power set.
/// Throws MalformedTable when meet/join are defined off the compatibility
/// relation and CapExceeded past the element cap.
ValidationReport validate_pba(const PartialBooleanAlgebra& b,
                              const ValidationOptions& options = {});

/// a <= b iff a, b are compatible and meet(a, b) = a.
bool leq(const PartialBooleanAlgebra& b, ElementId x, ElementId y);

/// Some c with x <= c and y <= neg(c); the least such id.
std::optional<ElementId> exclusivity_witness(const PartialBooleanAlgebra& b,
                                             ElementId x, ElementId y);
bool exclusive(const PartialBooleanAlgebra& b, ElementId x, ElementId y);

/// Every exclusive pair is compatible.
bool satisfies_lep(const PartialBooleanAlgebra& b);
bool is_transitive(const PartialBooleanAlgebra& b);

/// up[a] holds every c with a <= c.
std::vector<Bitset> upsets(const PartialBooleanAlgebra& b);

/// Nonzero elements with nothing strictly between them and zero, ascending.
std::vector<ElementId> atoms(const PartialBooleanAlgebra& b);

struct Context {
  std::vector<ElementId> members;  // ascending
  std::vector<ElementId> atoms;    // atoms of the context itself
  bool is_maximal = false;
};

/// Atoms of the Boolean algebra formed by `members` (no check that it is one).
std::vector<ElementId> context_atoms(const PartialBooleanAlgebra& b,
                                     std::span<const ElementId> members);

/// Maximal pairwise-compatible sets; on a validated algebra these are exactly
/// the maximal Boolean subalgebras. Sorted by member list.
std::vector<Context> maximal_contexts(const PartialBooleanAlgebra& b,
                                      const ValidationOptions& options = {});

struct AlgebraIsomorphismOptions {
  std::size_t element_cap = 2048;
  std::uint64_t node_budget = 5'000'000;
};

/// Bijection from b1's ids to b2's ids preserving compat, meet, join, neg,
/// zero and one; nullopt when none exists.
std::optional<std::vector<ElementId>> are_isomorphic(
    const PartialBooleanAlgebra& b1, const PartialBooleanAlgebra& b2,
    const AlgebraIsomorphismOptions& options = {});

/// Copy with ids permuted: element `order[k]` of `b` becomes element k.
PartialBooleanAlgebra permute(const PartialBooleanAlgebra& b,
                              std::span<const ElementId> order);

}  // namespace epba
