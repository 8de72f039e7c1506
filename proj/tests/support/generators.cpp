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

#include "support/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "epba/atom_graph.hpp"

namespace gen {

using epba::ElementId;
using epba::VertexId;

epba::Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  epba::Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return g;
}

epba::Graph clique_union_graph(std::size_t n, std::size_t cliques,
                               std::size_t max_clique, Rng& rng) {
  epba::Graph g(n);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::uniform_int_distribution<std::size_t> size(2, max_clique);
  std::vector<bool> covered(n, false);
  auto add = [&](const std::vector<VertexId>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      covered[c[i]] = true;
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!g.adjacent(c[i], c[j])) g.add_edge(c[i], c[j]);
    }
  };
  for (std::size_t k = 0; k < cliques; ++k) {
    std::shuffle(order.begin(), order.end(), rng);
    add({order.begin(), order.begin() + std::min(n, size(rng))});
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (covered[v]) continue;
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    std::size_t u = any(rng);
    if (u == v) u = (v + 1) % n;
    if (n > 1) add({static_cast<VertexId>(v), static_cast<VertexId>(u)});
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::optional<epba::PartialBooleanAlgebra> random_glued_pba(
    Rng& rng, std::size_t max_elements) {
  std::uniform_int_distribution<int> context_count(1, 3), atom_count(1, 3),
      glue_count(0, 3);
  const int k = context_count(rng);
  std::vector<int> atoms(k);
  std::vector<std::size_t> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    atoms[i] = atom_count(rng);
    offset[i + 1] = offset[i] + (std::size_t{1} << atoms[i]);
  }
  auto full = [&](int i) { return (std::size_t{1} << atoms[i]) - 1; };
  UnionFind uf(offset[k]);
  for (int i = 1; i < k; ++i) {
    uf.unite(offset[0], offset[i]);
    uf.unite(offset[0] + full(0), offset[i] + full(i));
  }
  if (k > 1) {
    const int glues = glue_count(rng);
    std::uniform_int_distribution<int> pick_context(0, k - 1);
    for (int g = 0; g < glues; ++g) {
      const int i = pick_context(rng), j = pick_context(rng);
      if (i == j) continue;
      std::uniform_int_distribution<std::size_t> mi(1, full(i) - (full(i) > 1));
      std::uniform_int_distribution<std::size_t> mj(1, full(j) - (full(j) > 1));
      if (full(i) == 1 || full(j) == 1) continue;  // only 0 and 1 present
      const std::size_t x = mi(rng), y = mj(rng);
      uf.unite(offset[i] + x, offset[j] + y);
      uf.unite(offset[i] + (full(i) & ~x), offset[j] + (full(j) & ~y));
    }
  }
  // Identifications may not merge two elements of one context.
  for (int i = 0; i < k; ++i) {
    std::vector<std::size_t> roots;
    for (std::size_t m = 0; m <= full(i); ++m) roots.push_back(uf.find(offset[i] + m));
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
      return std::nullopt;
  }
  std::map<std::size_t, ElementId> id;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < offset[k]; ++x) {
    const std::size_t r = uf.find(x);
    if (id.count(r)) continue;
    id[r] = static_cast<ElementId>(labels.size());
    labels.push_back("e" + std::to_string(labels.size()));
  }
  if (labels.size() > max_elements) return std::nullopt;
  auto el = [&](int i, std::size_t m) { return id.at(uf.find(offset[i] + m)); };
  epba::PartialBooleanAlgebra b(labels, el(0, 0), el(0, full(0)));
  for (int i = 0; i < k; ++i) {
    for (std::size_t m = 0; m <= full(i); ++m) {
      const ElementId x = el(i, m), nx = el(i, full(i) & ~m);
      if (b.neg(x) != epba::kNoElement && b.neg(x) != nx) return std::nullopt;
      b.set_neg(x, nx);
      for (std::size_t n = 0; n <= full(i); ++n) {
        const ElementId y = el(i, n);
        if (x == y) continue;
        const ElementId meet = el(i, m & n), join = el(i, m | n);
        if (b.compatible(x, y) && (b.meet(x, y) != meet || b.join(x, y) != join))
          return std::nullopt;
        b.set_compatible(x, y);
        b.set_meet(x, y, meet);
        b.set_join(x, y, join);
      }
    }
  }
  if (!epba::validate_pba(b).ok) return std::nullopt;
  return shuffled(b, rng);
}

epba::PartialBooleanAlgebra shuffled(const epba::PartialBooleanAlgebra& b,
                                     Rng& rng) {
  std::vector<ElementId> order(b.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return epba::permute(b, order);
}

std::vector<epba::Graph> all_graphs_up_to_iso(std::size_t max_n) {
  std::vector<epba::Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::pair<VertexId, VertexId>> slots;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        slots.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    const std::size_t first = out.size();
    for (std::uint32_t m = 0; m < (1u << slots.size()); ++m) {
      epba::Graph g(n);
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (m >> s & 1) g.add_edge(slots[s].first, slots[s].second);
      bool fresh = true;
      for (std::size_t i = first; i < out.size() && fresh; ++i)
        fresh = !epba::graphs_isomorphic(out[i], g).has_value();
      if (fresh) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<epba::PartialBooleanAlgebra> epba_catalog(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<epba::PartialBooleanAlgebra> out;
  auto add = [&](epba::PartialBooleanAlgebra b) {
    for (const auto& existing : out)
      if (existing == b) return;
    out.push_back(std::move(b));
  };
  auto try_graph = [&](const epba::Graph& g) {
    const auto r = epba::reconstruct(g);
    if (r.realizable()) add(r.realization().algebra);
  };
  for (const auto& g : all_graphs_up_to_iso(5)) try_graph(g);
  for (std::size_t n = 6; n <= 9; ++n) {
    const std::size_t target = out.size() + 12;
    for (int attempt = 0; attempt < 400 && out.size() < target; ++attempt) {
      std::uniform_int_distribution<std::size_t> cliques(2, n / 2 + 1);
      try_graph(clique_union_graph(n, cliques(rng), 4, rng));
    }
  }
  const std::size_t originals = out.size();
  for (std::size_t i = 0; i < originals; i += 3) add(shuffled(out[i], rng));
  return out;
}

std::vector<double> random_weights(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.1, 2.0);
  std::vector<double> w(n);
  for (auto& x : w) x = u(rng);
  return w;
}

std::vector<double> random_mixture(const std::vector<std::vector<double>>& points,
                                   Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> c(points.size());
  double total = 0.0;
  for (auto& x : c) total += (x = e(rng));
  std::vector<double> out(points.front().size(), 0.0);
  for (std::size_t k = 0; k < points.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[k] / total * points[k][i];
  return out;
}

}  // namespace gen
