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

#include "epba/atom_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "epba/error.hpp"

namespace epba {

AtomGraph atom_graph(const PartialBooleanAlgebra& b) {
  const auto at = atoms(b);
  std::vector<std::string> names;
  names.reserve(at.size());
  for (ElementId a : at) names.push_back(b.label(a));
  AtomGraph g(std::move(names));
  for (std::size_t i = 0; i < at.size(); ++i)
    for (std::size_t j = i + 1; j < at.size(); ++j)
      if (b.compatible(at[i], at[j]))
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

namespace {

using Mask = std::uint64_t;

struct Pair {
  std::size_t clique;
  Mask subset;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

NotRealizable fail(std::string condition, std::string detail) {
  return NotRealizable{std::move(condition), std::move(detail)};
}

std::string subset_names(const Graph& g, Mask m) {
  std::string out;
  for (Mask r = m; r != 0; r &= r - 1) {
    if (!out.empty()) out += "|";
    out += g.name(std::countr_zero(r));
  }
  return out;
}

class Reconstructor {
 public:
  Reconstructor(const Graph& g, const ReconstructOptions& options)
      : g_(g), options_(options) {}

  ReconstructionResult run() {
    if (g_.empty()) return {fail("graph:empty", "graph has no vertices")};
    if (g_.size() > options_.vertex_cap || g_.size() > 64) {
      throw CapExceeded("reconstruction is limited to " +
                        std::to_string(std::min<std::size_t>(
                            options_.vertex_cap, 64)) +
                        " vertices");
    }
    CliqueOptions copts;
    copts.clique_cap = options_.clique_cap;
    for (const auto& c : maximal_cliques(g_, copts).cliques) {
      Mask m = 0;
      for (VertexId v : c) m |= Mask{1} << v;
      cliques_.push_back(m);
      clique_set_.insert(m);
    }
    enumerate_pairs();
    if (auto bad = build_classes()) return {*bad};
    label_classes();
    return assemble();
  }

 private:
  void enumerate_pairs() {
    std::size_t total = 0;
    for (Mask c : cliques_) {
      const int k = std::popcount(c);
      if (k >= 63 || (total += std::size_t{1} << k) > options_.pair_cap) {
        throw CapExceeded("more than " + std::to_string(options_.pair_cap) +
                          " (clique, subset) pairs");
      }
    }
    for (std::size_t k = 0; k < cliques_.size(); ++k) {
      // Ascending submasks of the clique.
      std::vector<Mask> subs;
      for (Mask s = cliques_[k];; s = (s - 1) & cliques_[k]) {
        subs.push_back(s);
        if (s == 0) break;
      }
      std::reverse(subs.begin(), subs.end());
      for (Mask s : subs) {
        pair_index_[{k, s}] = pairs_.size();
        pairs_.push_back({k, s});
      }
    }
  }

  std::size_t pair_of(std::size_t clique, Mask subset) const {
    return pair_index_.at({clique, subset});
  }

  bool related(const Pair& p, const Pair& q) const {
    const Mask cp = cliques_[p.clique], cq = cliques_[q.clique];
    return clique_set_.contains((cp & ~p.subset) | q.subset) &&
           clique_set_.contains(p.subset | (cq & ~q.subset));
  }

  std::optional<NotRealizable> build_classes() {
    const std::size_t n = pairs_.size();
    DisjointSets sets(n);
    std::vector<std::vector<std::size_t>> adjacency(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!related(pairs_[i], pairs_[j])) continue;
        if (!related(pairs_[j], pairs_[i])) {
          return fail("equivalence:symmetry",
                      describe(pairs_[i]) + " relates to " +
                          describe(pairs_[j]) + " but not conversely");
        }
        sets.unite(i, j);
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
    // Group by root; roots are the least pair index, which is the
    // lexicographically least (clique, subset) representative.
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[sets.find(i)].push_back(i);
    for (const auto& [root, members] : groups) {
      for (std::size_t i : members) {
        if (adjacency[i].size() + 1 != members.size()) {
          for (std::size_t j : members) {
            if (j != i && !related(pairs_[i], pairs_[j])) {
              return fail("equivalence:transitivity",
                          describe(pairs_[i]) + " and " + describe(pairs_[j]) +
                              " are linked through a chain but not related");
            }
          }
        }
      }
    }
    class_of_.assign(n, 0);
    for (const auto& [root, members] : groups) {
      for (std::size_t i : members) class_of_[i] = classes_.size();
      classes_.push_back(members);
    }
    return std::nullopt;
  }

  std::string describe(const Pair& p) const {
    return "({" + subset_names(g_, cliques_[p.clique]) + "}, {" +
           subset_names(g_, p.subset) + "})";
  }

  void label_classes() {
    labels_.resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      std::string singleton, co_singleton;
      bool empty = false, full = false;
      for (std::size_t i : classes_[c]) {
        const Pair& p = pairs_[i];
        const Mask rest = cliques_[p.clique] & ~p.subset;
        if (p.subset == 0) empty = true;
        if (rest == 0) full = true;
        if (std::popcount(p.subset) == 1 && singleton.empty())
          singleton = g_.name(std::countr_zero(p.subset));
        if (std::popcount(rest) == 1 && co_singleton.empty())
          co_singleton = "~" + g_.name(std::countr_zero(rest));
      }
      std::string label;
      if (empty) {
        label = "0";
      } else if (!singleton.empty()) {
        label = singleton;
      } else if (full) {
        label = "1";
      } else if (!co_singleton.empty()) {
        label = co_singleton;
      } else {
        label = subset_names(g_, pairs_[classes_[c].front()].subset);
      }
      while (used_labels_.contains(label)) label += "'";
      used_labels_.insert(label);
      labels_[c] = label;
    }
  }

  ReconstructionResult assemble() {
    const std::size_t n = classes_.size();
    const std::size_t zero = class_of_[pair_of(0, 0)];
    const std::size_t one = class_of_[pair_of(0, cliques_[0])];
    if (zero == one) return {fail("algebra:zero-one", "zero equals one")};

    PartialBooleanAlgebra b(labels_, static_cast<ElementId>(zero),
                            static_cast<ElementId>(one));
    std::vector<ElementId> neg(n, kNoElement);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const Pair& p = pairs_[i];
      const auto x = static_cast<ElementId>(class_of_[i]);
      const auto nx = static_cast<ElementId>(
          class_of_[pair_of(p.clique, cliques_[p.clique] & ~p.subset)]);
      if (neg[x] != kNoElement && neg[x] != nx) {
        return {fail("negation:well-defined",
                     "complement of " + labels_[x] + " depends on the clique")};
      }
      neg[x] = nx;
      b.set_neg(x, nx);
    }

    for (std::size_t k = 0; k < cliques_.size(); ++k) {
      std::vector<std::size_t> local;
      for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i].clique == k) local.push_back(i);
      for (std::size_t i : local) {
        for (std::size_t j : local) {
          const Mask a = pairs_[i].subset, c = pairs_[j].subset;
          const auto x = static_cast<ElementId>(class_of_[i]);
          const auto y = static_cast<ElementId>(class_of_[j]);
          const auto m = static_cast<ElementId>(class_of_[pair_of(k, a & c)]);
          const auto jn = static_cast<ElementId>(class_of_[pair_of(k, a | c)]);
          if (b.compatible(x, y) && x != y) {
            if (b.meet(x, y) != m || b.join(x, y) != jn) {
              return {fail("operations:well-defined",
                           "meet/join of " + labels_[x] + " and " +
                               labels_[y] + " depend on the clique")};
            }
            continue;
          }
          if (x == y && (m != x || jn != x)) {
            return {fail("operations:well-defined",
                         "element " + labels_[x] + " is not idempotent")};
          }
          b.set_compatible(x, y);
          b.set_meet(x, y, m);
          b.set_join(x, y, jn);
        }
      }
    }

    const auto report = validate_pba(b);
    if (!report.ok) {
      const auto& v = report.violations.front();
      std::string where;
      for (ElementId e : v.witnesses) where += (where.empty() ? "" : ", ") + b.label(e);
      return {fail("validation:" + v.axiom, "witnesses: " + where)};
    }
    if (!satisfies_lep(b))
      return {fail("lep", "reconstructed algebra violates exclusivity")};

    std::vector<ElementId> atom_map(g_.size(), kNoElement);
    for (std::size_t v = 0; v < g_.size(); ++v) {
      const Mask bit = Mask{1} << v;
      auto host = std::find_if(cliques_.begin(), cliques_.end(),
                               [&](Mask c) { return (c & bit) != 0; });
      const auto k = static_cast<std::size_t>(host - cliques_.begin());
      atom_map[v] = static_cast<ElementId>(class_of_[pair_of(k, bit)]);
    }
    for (std::size_t u = 0; u < g_.size(); ++u) {
      for (std::size_t v = u + 1; v < g_.size(); ++v) {
        if (atom_map[u] == atom_map[v]) {
          return {fail("atom-graph:vertices",
                       "vertices " + g_.name(static_cast<VertexId>(u)) +
                           " and " + g_.name(static_cast<VertexId>(v)) +
                           " collapse to one element")};
        }
      }
    }
    auto sorted = atom_map;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != atoms(b)) {
      return {fail("atom-graph:vertices",
                   "atoms of the reconstruction differ from the vertex set")};
    }
    for (std::size_t u = 0; u < g_.size(); ++u) {
      for (std::size_t v = u + 1; v < g_.size(); ++v) {
        const auto uu = static_cast<VertexId>(u), vv = static_cast<VertexId>(v);
        if (b.compatible(atom_map[u], atom_map[v]) != g_.adjacent(uu, vv)) {
          return {fail("atom-graph:edges",
                       "compatibility of " + g_.name(uu) + " and " +
                           g_.name(vv) + " disagrees with the graph")};
        }
      }
    }
    return {Realization{std::move(b), std::move(atom_map)}};
  }

  const Graph& g_;
  ReconstructOptions options_;
  std::vector<Mask> cliques_;
  std::unordered_set<Mask> clique_set_;
  std::vector<Pair> pairs_;
  std::map<std::pair<std::size_t, Mask>, std::size_t> pair_index_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::string> labels_;
  std::set<std::string> used_labels_;
};

}  // namespace

ReconstructionResult reconstruct(const Graph& g,
                                 const ReconstructOptions& options) {
  return Reconstructor(g, options).run();
}

}  // namespace epba
