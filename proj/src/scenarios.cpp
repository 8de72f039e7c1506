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

#include "epba/scenarios.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "epba/error.hpp"

namespace epba {

namespace {

std::string negated(const std::string& name) {
  return name.rfind("~", 0) == 0 ? name.substr(1) : "~" + name;
}

std::string subset_label(const std::vector<std::string>& atoms,
                         std::uint32_t mask) {
  const std::size_t k = atoms.size();
  const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1u);
  const int count = __builtin_popcount(mask);
  if (mask == 0) return "0";
  if (mask == full) return "1";
  if (count == 1) return atoms[static_cast<std::size_t>(__builtin_ctz(mask))];
  if (static_cast<std::size_t>(count) + 1 == k)
    return negated(atoms[static_cast<std::size_t>(__builtin_ctz(full & ~mask))]);
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < k; ++i)
    if (mask & (1u << i)) parts.push_back(atoms[i]);
  std::sort(parts.begin(), parts.end());
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "|" + parts[i];
  return out;
}

void assign(ElementId current, ElementId value, const std::string& what) {
  if (current != kNoElement && current != value)
    throw MalformedTable("conflicting " + what + " while gluing contexts");
}

}  // namespace

PartialBooleanAlgebra from_contexts(
    const std::vector<std::vector<std::string>>& contexts) {
  if (contexts.empty()) throw InvalidInput("no contexts given");
  std::vector<std::string> labels{"0", "1"};
  std::map<std::string, ElementId> index{{"0", 0}, {"1", 1}};
  std::vector<std::vector<ElementId>> ids(contexts.size());
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    const auto& atoms = contexts[c];
    if (atoms.empty() || atoms.size() > 16)
      throw InvalidInput("context must have between 1 and 16 atoms");
    if (std::set<std::string>(atoms.begin(), atoms.end()).size() != atoms.size())
      throw InvalidInput("repeated atom in context");
    const std::uint32_t subsets = 1u << atoms.size();
    std::set<std::string> seen;
    for (std::uint32_t m = 0; m < subsets; ++m) {
      std::string label = subset_label(atoms, m);
      if (!seen.insert(label).second)
        throw MalformedTable("label " + label + " names two subsets of one context");
      auto [it, inserted] =
          index.emplace(label, static_cast<ElementId>(labels.size()));
      if (inserted) labels.push_back(label);
      ids[c].push_back(it->second);
    }
  }

  PartialBooleanAlgebra b(labels, 0, 1);
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    const auto& id = ids[c];
    const std::uint32_t subsets = static_cast<std::uint32_t>(id.size());
    const std::uint32_t full = subsets - 1;
    for (std::uint32_t m = 0; m < subsets; ++m) {
      assign(b.neg(id[m]), id[full & ~m], "negation of " + labels[id[m]]);
      b.set_neg(id[m], id[full & ~m]);
      for (std::uint32_t n = m + 1; n < subsets; ++n) {
        const ElementId x = id[m], y = id[n];
        assign(b.compatible(x, y) ? b.meet(x, y) : kNoElement, id[m & n],
               "meet of " + labels[x] + " and " + labels[y]);
        assign(b.compatible(x, y) ? b.join(x, y) : kNoElement, id[m | n],
               "join of " + labels[x] + " and " + labels[y]);
        b.set_compatible(x, y);
        b.set_meet(x, y, id[m & n]);
        b.set_join(x, y, id[m | n]);
      }
    }
  }
  return b;
}

PartialBooleanAlgebra b1() {
  return from_contexts({{"a1", "b1", "c"}, {"a2", "b2", "c"}});
}

PartialBooleanAlgebra b2() {
  return from_contexts({{"a1", "b1", "~c"}, {"a2", "b2", "c"}});
}

PartialBooleanAlgebra b2_prime() {
  return from_contexts({{"a1", "b1"}, {"a2", "b2"}});
}

PartialBooleanAlgebra boolean_algebra(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 1; i <= n; ++i) atoms.push_back("x" + std::to_string(i));
  return from_contexts({atoms});
}

}  // namespace epba
