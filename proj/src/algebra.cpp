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

#include "epba/algebra.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_set>

#include "epba/error.hpp"

namespace epba {

PartialBooleanAlgebra::PartialBooleanAlgebra(std::vector<std::string> labels,
                                             ElementId zero, ElementId one)
    : labels_(std::move(labels)), zero_(zero), one_(one) {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], static_cast<ElementId>(i)).second)
      throw InvalidInput("duplicate element name '" + labels_[i] + "'");
  }
  check(zero);
  check(one);
  compat_.assign(n * n, 0);
  meet_.assign(n * n, kNoElement);
  join_.assign(n * n, kNoElement);
  neg_.assign(n, kNoElement);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<ElementId>(i);
    compat_[at(a, a)] = 1;
    meet_[at(a, a)] = a;
    join_[at(a, a)] = a;
  }
}

void PartialBooleanAlgebra::check(ElementId a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= labels_.size())
    throw UnknownElement("element id " + std::to_string(a) + " out of range");
}

const std::string& PartialBooleanAlgebra::label(ElementId a) const {
  check(a);
  return labels_[a];
}

std::optional<ElementId> PartialBooleanAlgebra::find(
    std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId PartialBooleanAlgebra::id(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw UnknownElement("unknown element '" + std::string(name) + "'");
}

bool PartialBooleanAlgebra::compatible(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return compat_[at(a, b)] != 0;
}

ElementId PartialBooleanAlgebra::meet(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return meet_[at(a, b)];
}

ElementId PartialBooleanAlgebra::join(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return join_[at(a, b)];
}

ElementId PartialBooleanAlgebra::neg(ElementId a) const {
  check(a);
  return neg_[a];
}

void PartialBooleanAlgebra::set_compatible(ElementId a, ElementId b,
                                           bool value) {
  check(a);
  check(b);
  compat_[at(a, b)] = compat_[at(b, a)] = value ? 1 : 0;
}

void PartialBooleanAlgebra::set_meet(ElementId a, ElementId b, ElementId r) {
  check(a);
  check(b);
  if (r != kNoElement) check(r);
  meet_[at(a, b)] = meet_[at(b, a)] = r;
}

void PartialBooleanAlgebra::set_join(ElementId a, ElementId b, ElementId r) {
  check(a);
  check(b);
  if (r != kNoElement) check(r);
  join_[at(a, b)] = join_[at(b, a)] = r;
}

void PartialBooleanAlgebra::set_neg(ElementId a, ElementId r) {
  check(a);
  if (r != kNoElement) check(r);
  neg_[a] = r;
}

bool PartialBooleanAlgebra::operator==(
    const PartialBooleanAlgebra& other) const {
  return labels_ == other.labels_ && zero_ == other.zero_ &&
         one_ == other.one_ && compat_ == other.compat_ &&
         meet_ == other.meet_ && join_ == other.join_ && neg_ == other.neg_;
}

namespace {

std::vector<Bitset> compat_adjacency(const PartialBooleanAlgebra& b) {
  const std::size_t n = b.size();
  std::vector<Bitset> adj(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && b.compatible(static_cast<ElementId>(i),
                                 static_cast<ElementId>(j)))
        adj[i].set(j);
  return adj;
}

class Reporter {
 public:
  explicit Reporter(std::size_t limit) : limit_(limit) {}

  void add(std::string axiom, std::vector<ElementId> witnesses) {
    if (report_.violations.size() < limit_)
      report_.violations.push_back({std::move(axiom), std::move(witnesses)});
    report_.ok = false;
  }
  bool ok() const { return report_.ok; }
  ValidationReport take() { return std::move(report_); }

 private:
  std::size_t limit_;
  ValidationReport report_;
};

// Decides whether a pairwise-compatible, operation-closed set is a Boolean
// algebra by matching it against the power set of its atoms.
void check_boolean(const PartialBooleanAlgebra& b,
                   const std::vector<ElementId>& members, Reporter& report) {
  std::unordered_set<ElementId> in(members.begin(), members.end());
  for (ElementId x : members) {
    if (!in.contains(b.neg(x))) {
      report.add("closure:neg", {x});
      return;
    }
    for (ElementId y : members) {
      if (y < x) continue;
      if (!in.contains(b.meet(x, y))) {
        report.add("closure:meet", {x, y});
        return;
      }
      if (!in.contains(b.join(x, y))) {
        report.add("closure:join", {x, y});
        return;
      }
    }
  }
  for (ElementId x : members) {
    if (b.meet(x, b.neg(x)) != b.zero() || b.join(x, b.neg(x)) != b.one()) {
      report.add("boolean:complement", {x});
      return;
    }
  }
  const auto ctx_atoms = context_atoms(b, members);
  if (ctx_atoms.size() > 20 ||
      (std::size_t{1} << ctx_atoms.size()) != members.size()) {
    report.add("boolean:atom-count", members);
    return;
  }
  std::map<ElementId, std::uint32_t> mask;
  std::vector<bool> seen(std::size_t{1} << ctx_atoms.size(), false);
  for (ElementId x : members) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < ctx_atoms.size(); ++k)
      if (b.meet(ctx_atoms[k], x) == ctx_atoms[k]) m |= 1u << k;
    if (seen[m]) {
      report.add("boolean:atom-representation", {x});
      return;
    }
    seen[m] = true;
    mask[x] = m;
  }
  const std::uint32_t full = (1u << ctx_atoms.size()) - 1;
  if (mask[b.zero()] != 0 || mask[b.one()] != full) {
    report.add("boolean:bounds", {b.zero(), b.one()});
    return;
  }
  for (ElementId x : members) {
    if (mask[b.neg(x)] != (full & ~mask[x])) {
      report.add("boolean:negation", {x});
      return;
    }
    for (ElementId y : members) {
      if (mask[b.meet(x, y)] != (mask[x] & mask[y])) {
        report.add("boolean:distributivity", {x, y});
        return;
      }
      if (mask[b.join(x, y)] != (mask[x] | mask[y])) {
        report.add("boolean:distributivity", {x, y});
        return;
      }
    }
  }
}

}  // namespace

ValidationReport validate_pba(const PartialBooleanAlgebra& b,
                              const ValidationOptions& options) {
  const std::size_t n = b.size();
  if (n > options.element_cap) {
    throw CapExceeded("algebra has " + std::to_string(n) +
                      " elements, cap is " +
                      std::to_string(options.element_cap));
  }
  if (n == 0) throw InvalidInput("algebra has no elements");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = static_cast<ElementId>(i), c = static_cast<ElementId>(j);
      if (!b.compatible(a, c) &&
          (b.meet(a, c) != kNoElement || b.join(a, c) != kNoElement)) {
        throw MalformedTable("meet/join defined on incompatible pair (" +
                             b.label(a) + ", " + b.label(c) + ")");
      }
    }
  }

  Reporter report(options.max_violations);
  if (b.zero() == b.one()) report.add("zero-one-distinct", {b.zero()});
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<ElementId>(i);
    if (!b.compatible(a, a)) report.add("compat-reflexive", {a});
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = static_cast<ElementId>(j);
      if (!b.compatible(a, c)) continue;
      if (b.meet(a, c) == kNoElement) report.add("meet-domain", {a, c});
      if (b.join(a, c) == kNoElement) report.add("join-domain", {a, c});
    }
    const ElementId na = b.neg(a);
    if (na == kNoElement) {
      report.add("neg-total", {a});
    } else if (b.neg(na) != a) {
      report.add("neg-involution", {a});
    }
    if (!b.compatible(a, b.zero()) || !b.compatible(a, b.one()))
      report.add("bounds-compatible", {a});
  }
  if (!report.ok()) return report.take();

  const auto cliques =
      enumerate_maximal_cliques(compat_adjacency(b), options.clique_cap);
  for (const auto& clique : cliques) {
    std::vector<ElementId> members(clique.begin(), clique.end());
    check_boolean(b, members, report);
  }
  return report.take();
}

bool leq(const PartialBooleanAlgebra& b, ElementId x, ElementId y) {
  return b.compatible(x, y) && b.meet(x, y) == x;
}

std::optional<ElementId> exclusivity_witness(const PartialBooleanAlgebra& b,
                                             ElementId x, ElementId y) {
  b.check(x);
  b.check(y);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto c = static_cast<ElementId>(i);
    const ElementId nc = b.neg(c);
    if (nc == kNoElement) continue;
    if (leq(b, x, c) && leq(b, y, nc)) return c;
  }
  return std::nullopt;
}

bool exclusive(const PartialBooleanAlgebra& b, ElementId x, ElementId y) {
  return exclusivity_witness(b, x, y).has_value();
}

std::vector<Bitset> upsets(const PartialBooleanAlgebra& b) {
  const std::size_t n = b.size();
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(b, static_cast<ElementId>(i), static_cast<ElementId>(j)))
        up[i].set(j);
  return up;
}

bool satisfies_lep(const PartialBooleanAlgebra& b) {
  const std::size_t n = b.size();
  const auto up = upsets(b);
  // neg_up[y] = { neg(d) : y <= d }, so x ⊥ y iff up[x] meets neg_up[y].
  std::vector<Bitset> neg_up(n, Bitset(n));
  for (std::size_t y = 0; y < n; ++y)
    for (auto d = up[y].find_first(); d != Bitset::npos; d = up[y].find_next(d))
      if (ElementId nd = b.neg(static_cast<ElementId>(d)); nd != kNoElement)
        neg_up[y].set(static_cast<std::size_t>(nd));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!b.compatible(static_cast<ElementId>(x), static_cast<ElementId>(y)) &&
          up[x].intersects(neg_up[y]))
        return false;
  return true;
}

bool is_transitive(const PartialBooleanAlgebra& b) {
  const auto up = upsets(b);
  for (std::size_t x = 0; x < up.size(); ++x)
    for (auto y = up[x].find_first(); y != Bitset::npos; y = up[x].find_next(y))
      if (!up[y].is_subset_of(up[x])) return false;
  return true;
}

std::vector<ElementId> atoms(const PartialBooleanAlgebra& b) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto a = static_cast<ElementId>(i);
    if (a == b.zero()) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < b.size() && minimal; ++j) {
      const auto x = static_cast<ElementId>(j);
      if (x != a && x != b.zero() && leq(b, x, a)) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<ElementId> context_atoms(const PartialBooleanAlgebra& b,
                                     std::span<const ElementId> members) {
  std::vector<ElementId> out;
  for (ElementId a : members) {
    if (a == b.zero()) continue;
    bool minimal = true;
    for (ElementId x : members) {
      if (x != a && x != b.zero() && b.meet(x, a) == x) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Context> maximal_contexts(const PartialBooleanAlgebra& b,
                                      const ValidationOptions& options) {
  if (b.size() > options.element_cap)
    throw CapExceeded("algebra exceeds element cap");
  std::vector<Context> out;
  for (auto& clique :
       enumerate_maximal_cliques(compat_adjacency(b), options.clique_cap)) {
    Context c;
    c.members.assign(clique.begin(), clique.end());
    c.atoms = context_atoms(b, c.members);
    c.is_maximal = true;
    out.push_back(std::move(c));
  }
  return out;
}

PartialBooleanAlgebra permute(const PartialBooleanAlgebra& b,
                              std::span<const ElementId> order) {
  const std::size_t n = b.size();
  if (order.size() != n) throw InvalidInput("permutation has wrong length");
  std::vector<ElementId> inv(n, kNoElement);
  for (std::size_t k = 0; k < n; ++k) {
    b.check(order[k]);
    if (inv[order[k]] != kNoElement)
      throw InvalidInput("order is not a permutation");
    inv[order[k]] = static_cast<ElementId>(k);
  }
  auto img = [&](ElementId a) { return a == kNoElement ? kNoElement : inv[a]; };
  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < n; ++k) labels[k] = b.label(order[k]);
  PartialBooleanAlgebra out(std::move(labels), inv[b.zero()], inv[b.one()]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<ElementId>(i);
    out.set_neg(inv[a], img(b.neg(a)));
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = static_cast<ElementId>(j);
      out.set_compatible(inv[a], inv[c], b.compatible(a, c));
      out.set_meet(inv[a], inv[c], img(b.meet(a, c)));
      out.set_join(inv[a], inv[c], img(b.join(a, c)));
    }
  }
  return out;
}

namespace {

using Signature = std::tuple<int, std::size_t, std::size_t, std::size_t, bool>;

std::vector<Signature> signatures(const PartialBooleanAlgebra& b) {
  const std::size_t n = b.size();
  const auto up = upsets(b);
  std::vector<std::size_t> down(n, 0), degree(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = up[x].find_first(); y != Bitset::npos; y = up[x].find_next(y))
      ++down[y];
    for (std::size_t y = 0; y < n; ++y)
      if (b.compatible(static_cast<ElementId>(x), static_cast<ElementId>(y)))
        ++degree[x];
  }
  std::vector<Signature> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto a = static_cast<ElementId>(x);
    const int role = a == b.zero() ? 0 : a == b.one() ? 1 : 2;
    out[x] = {role, degree[x], down[x], up[x].count(), b.neg(a) == a};
  }
  return out;
}

class AlgebraMatcher {
 public:
  AlgebraMatcher(const PartialBooleanAlgebra& b1,
                 const PartialBooleanAlgebra& b2, std::uint64_t budget)
      : b1_(b1), b2_(b2), sig1_(signatures(b1)), sig2_(signatures(b2)),
        budget_(budget) {
    const std::size_t n = b1.size();
    map12_.assign(n, kNoElement);
    map21_.assign(n, kNoElement);
    // Branch on elements with small down-sets first: atoms fix most of the
    // rest through meet/join propagation.
    for (std::size_t x = 0; x < n; ++x) order_.push_back(static_cast<ElementId>(x));
    std::stable_sort(order_.begin(), order_.end(), [&](ElementId a, ElementId c) {
      return std::get<2>(sig1_[a]) < std::get<2>(sig1_[c]);
    });
  }

  bool sizes_match() const {
    auto s1 = sig1_, s2 = sig2_;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    return s1 == s2;
  }

  std::optional<std::vector<ElementId>> run() {
    if (!assign(b1_.zero(), b2_.zero()) || !assign(b1_.one(), b2_.one()))
      return std::nullopt;
    if (search()) return map12_;
    return std::nullopt;
  }

 private:
  bool assign(ElementId x, ElementId y) {
    std::deque<std::pair<ElementId, ElementId>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, c] = queue.front();
      queue.pop_front();
      if (a == kNoElement || c == kNoElement) {
        if (a != c) return false;
        continue;
      }
      if (map12_[a] == c) continue;
      if (map12_[a] != kNoElement || map21_[c] != kNoElement) return false;
      if (sig1_[a] != sig2_[c]) return false;
      map12_[a] = c;
      map21_[c] = a;
      trail_.push_back(a);
      queue.emplace_back(b1_.neg(a), b2_.neg(c));
      for (ElementId a2 : trail_) {
        const ElementId c2 = map12_[a2];
        const bool k1 = b1_.compatible(a, a2), k2 = b2_.compatible(c, c2);
        if (k1 != k2) return false;
        if (!k1) continue;
        queue.emplace_back(b1_.meet(a, a2), b2_.meet(c, c2));
        queue.emplace_back(b1_.join(a, a2), b2_.join(c, c2));
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const ElementId a = trail_.back();
      trail_.pop_back();
      map21_[map12_[a]] = kNoElement;
      map12_[a] = kNoElement;
    }
  }

  bool search() {
    if (++nodes_ > budget_) {
      throw SearchBudgetExceeded("algebra isomorphism exceeded " +
                                 std::to_string(budget_) + " nodes");
    }
    auto next = std::find_if(order_.begin(), order_.end(), [&](ElementId a) {
      return map12_[a] == kNoElement;
    });
    if (next == order_.end()) return true;
    const ElementId x = *next;
    for (std::size_t j = 0; j < b2_.size(); ++j) {
      const auto y = static_cast<ElementId>(j);
      if (map21_[y] != kNoElement || sig2_[y] != sig1_[x]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, y) && search()) return true;
      undo(mark);
    }
    return false;
  }

  const PartialBooleanAlgebra& b1_;
  const PartialBooleanAlgebra& b2_;
  std::vector<Signature> sig1_, sig2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<ElementId> order_;
  std::vector<ElementId> map12_, map21_;
  std::vector<ElementId> trail_;
};

}  // namespace

std::optional<std::vector<ElementId>> are_isomorphic(
    const PartialBooleanAlgebra& b1, const PartialBooleanAlgebra& b2,
    const AlgebraIsomorphismOptions& options) {
  if (b1.size() > options.element_cap || b2.size() > options.element_cap)
    throw CapExceeded("algebra isomorphism is limited to " +
                      std::to_string(options.element_cap) + " elements");
  if (b1.size() != b2.size()) return std::nullopt;
  AlgebraMatcher matcher(b1, b2, options.node_budget);
  if (!matcher.sizes_match()) return std::nullopt;
  return matcher.run();
}

}  // namespace epba
