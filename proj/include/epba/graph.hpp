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
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace epba {

using VertexId = std::int32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph with named vertices. Vertex ids are dense,
/// assigned in insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  explicit Graph(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(VertexId v) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;

  /// Loops are rejected; adding an existing edge is a no-op.
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  bool adjacent(VertexId u, VertexId v) const;
  const Bitset& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::size_t edge_count() const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// Induced subgraph on `keep` (in the given order).
  Graph induced(std::span<const VertexId> keep) const;

  bool operator==(const Graph& other) const;

 private:
  void check(VertexId v) const;

  std::vector<std::string> names_;
  std::vector<Bitset> adj_;
  std::unordered_map<std::string, VertexId> index_;
};

using AtomGraph = Graph;

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

struct CliqueOptions {
  std::size_t vertex_cap = 512;
  std::size_t clique_cap = 1'000'000;
};

/// All maximal cliques, each sorted ascending, the list sorted lexicographically.
struct CliqueCover {
  std::vector<std::vector<VertexId>> cliques;
};

/// Pivoting Bron-Kerbosch over an arbitrary adjacency matrix given as rows.
/// Throws CapExceeded once more than `clique_cap` cliques are found.
std::vector<std::vector<VertexId>> enumerate_maximal_cliques(
    const std::vector<Bitset>& adjacency, std::size_t clique_cap);

CliqueCover maximal_cliques(const Graph& g, const CliqueOptions& options = {});

struct IsomorphismOptions {
  std::size_t vertex_cap = 64;
  std::uint64_t node_budget = 10'000'000;
};

/// Adjacency-preserving bijection g1 -> g2 (indexed by g1 vertex), if any.
std::optional<std::vector<VertexId>> graphs_isomorphic(
    const Graph& g1, const Graph& g2, const IsomorphismOptions& options = {});

/// Graphviz rendering. When `cover` is given each vertex carries the
/// indices of the maximal cliques it belongs to as a `cliques` attribute.
std::string to_dot(const Graph& g, const CliqueCover* cover = nullptr);

}  // namespace epba
