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

#include "epba/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "epba/error.hpp"

namespace epba {

Graph::Graph(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  *this = Graph(std::move(names));
}

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)) {
  adj_.assign(names_.size(), Bitset(names_.size()));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<VertexId>(i)).second) {
      throw InvalidInput("duplicate vertex name '" + names_[i] + "'");
    }
  }
}

void Graph::check(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= names_.size()) {
    throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
  }
}

const std::string& Graph::name(VertexId v) const {
  check(v);
  return names_[v];
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Graph::add_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v) throw InvalidInput("self-loop on vertex '" + names_[u] + "'");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  adj_[u].reset(v);
  adj_[v].reset(u);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  check(u);
  check(v);
  return adj_[u].test(v);
}

const Bitset& Graph::neighbors(VertexId v) const {
  check(v);
  return adj_[v];
}

std::size_t Graph::degree(VertexId v) const { return neighbors(v).count(); }

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.count();
  return total / 2;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (auto v = adj_[u].find_next(u); v != Bitset::npos;
         v = adj_[u].find_next(v)) {
      out.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return out;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (VertexId v : keep) names.push_back(name(v));
  Graph sub(std::move(names));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) {
        sub.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return sub;
}

bool Graph::operator==(const Graph& other) const {
  return names_ == other.names_ && adj_ == other.adj_;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i)
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  return g;
}

namespace {

class CliqueEnumerator {
 public:
  CliqueEnumerator(const std::vector<Bitset>& adj, std::size_t cap)
      : adj_(adj), cap_(cap) {}

  std::vector<std::vector<VertexId>> run() {
    const std::size_t n = adj_.size();
    Bitset p(n), x(n);
    p.set();
    std::vector<VertexId> r;
    if (n > 0) expand(r, p, x);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(std::vector<VertexId>& r, Bitset p, Bitset x) {
    if (p.none()) {
      if (x.none()) {
        if (out_.size() >= cap_) {
          throw CapExceeded("more than " + std::to_string(cap_) +
                            " maximal cliques");
        }
        auto clique = r;
        std::sort(clique.begin(), clique.end());
        out_.push_back(std::move(clique));
      }
      return;
    }
    // Tomita pivot: the vertex of P | X with most neighbours in P.
    std::size_t pivot = Bitset::npos, best = 0;
    Bitset px = p | x;
    for (auto u = px.find_first(); u != Bitset::npos; u = px.find_next(u)) {
      std::size_t c = (p & adj_[u]).count();
      if (pivot == Bitset::npos || c > best) {
        pivot = u;
        best = c;
      }
    }
    Bitset candidates = p - adj_[pivot];
    for (auto v = candidates.find_first(); v != Bitset::npos;
         v = candidates.find_next(v)) {
      r.push_back(static_cast<VertexId>(v));
      expand(r, p & adj_[v], x & adj_[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  const std::vector<Bitset>& adj_;
  std::size_t cap_;
  std::vector<std::vector<VertexId>> out_;
};

}  // namespace

std::vector<std::vector<VertexId>> enumerate_maximal_cliques(
    const std::vector<Bitset>& adjacency, std::size_t clique_cap) {
  return CliqueEnumerator(adjacency, clique_cap).run();
}

CliqueCover maximal_cliques(const Graph& g, const CliqueOptions& options) {
  if (g.size() > options.vertex_cap) {
    throw CapExceeded("graph has " + std::to_string(g.size()) +
                      " vertices, cap is " +
                      std::to_string(options.vertex_cap));
  }
  std::vector<Bitset> adj;
  adj.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    adj.push_back(g.neighbors(static_cast<VertexId>(v)));
  return CliqueCover{enumerate_maximal_cliques(adj, options.clique_cap)};
}

namespace {

// Colour refinement run on the disjoint union so colours are comparable
// across both graphs.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const Graph& g1,
                                                             const Graph& g2) {
  const std::size_t n = g1.size();
  std::vector<int> c1(n), c2(n);
  for (std::size_t v = 0; v < n; ++v) {
    c1[v] = static_cast<int>(g1.degree(static_cast<VertexId>(v)));
    c2[v] = static_cast<int>(g2.degree(static_cast<VertexId>(v)));
  }
  std::size_t classes = 0;
  for (;;) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& g, const std::vector<int>& c,
                        std::size_t v) {
      Signature s{c[v], {}};
      const auto& nb = g.neighbors(static_cast<VertexId>(v));
      for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u))
        s.second.push_back(c[u]);
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::map<Signature, int> ids;
    std::vector<Signature> s1(n), s2(n);
    for (std::size_t v = 0; v < n; ++v) {
      s1[v] = signature(g1, c1, v);
      s2[v] = signature(g2, c2, v);
      ids.emplace(s1[v], 0);
      ids.emplace(s2[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      c1[v] = ids[s1[v]];
      c2[v] = ids[s2[v]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {c1, c2};
}

class GraphMatcher {
 public:
  GraphMatcher(const Graph& g1, const Graph& g2, std::vector<int> c1,
               std::vector<int> c2, std::uint64_t budget)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)),
        budget_(budget) {
    const std::size_t n = g1.size();
    map_.assign(n, -1);
    used_.assign(n, false);
    // Rarest colour first, then prefer vertices adjacent to earlier ones.
    std::map<int, int> freq;
    for (int c : c1_) ++freq[c];
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      int best = -1;
      std::pair<int, int> best_key{0, 0};
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : order_)
          if (g1.adjacent(static_cast<VertexId>(v), u)) ++links;
        std::pair<int, int> key{freq[c1_[v]], -links};
        if (best < 0 || key < best_key) {
          best = static_cast<int>(v);
          best_key = key;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  std::optional<std::vector<VertexId>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > budget_) {
      throw SearchBudgetExceeded("graph isomorphism exceeded " +
                                 std::to_string(budget_) + " nodes");
    }
    const VertexId v = order_[depth];
    for (std::size_t w = 0; w < g2_.size(); ++w) {
      if (used_[w] || c2_[w] != c1_[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const VertexId u = order_[d];
        ok = g1_.adjacent(v, u) ==
             g2_.adjacent(static_cast<VertexId>(w), map_[u]);
      }
      if (!ok) continue;
      map_[v] = static_cast<VertexId>(w);
      used_[w] = true;
      if (search(depth + 1)) return true;
      used_[w] = false;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::vector<int> c1_, c2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexId> order_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<VertexId>> graphs_isomorphic(
    const Graph& g1, const Graph& g2, const IsomorphismOptions& options) {
  if (g1.size() > options.vertex_cap || g2.size() > options.vertex_cap) {
    throw CapExceeded("graph isomorphism is limited to " +
                      std::to_string(options.vertex_cap) + " vertices");
  }
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  auto [c1, c2] = refine_colours(g1, g2);
  auto h1 = c1, h2 = c2;
  std::sort(h1.begin(), h1.end());
  std::sort(h2.begin(), h2.end());
  if (h1 != h2) return std::nullopt;
  return GraphMatcher(g1, g2, std::move(c1), std::move(c2),
                      options.node_budget)
      .run();
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g, const CliqueCover* cover) {
  std::vector<std::vector<std::size_t>> membership(g.size());
  if (cover != nullptr) {
    for (std::size_t k = 0; k < cover->cliques.size(); ++k)
      for (VertexId v : cover->cliques[k]) membership[v].push_back(k);
  }
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << "  " << dot_quote(g.name(static_cast<VertexId>(v)));
    if (cover != nullptr) {
      os << " [cliques=\"";
      for (std::size_t i = 0; i < membership[v].size(); ++i)
        os << (i ? "," : "") << membership[v][i];
      os << "\"]";
    }
    os << ";\n";
  }
  for (auto [u, v] : g.edges())
    os << "  " << dot_quote(g.name(u)) << " -- " << dot_quote(g.name(v))
       << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace epba
