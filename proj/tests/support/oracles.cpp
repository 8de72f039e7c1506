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

#include "support/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

using epba::ElementId;
using epba::VertexId;

bool is_clique(const epba::Graph& g, std::uint32_t mask) {
  const int n = static_cast<int>(g.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) return false;
  return true;
}

bool is_independent(const epba::Graph& g, std::uint32_t mask) {
  const int n = static_cast<int>(g.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) return false;
  return true;
}

void require_small(std::size_t n, std::size_t limit) {
  if (n > limit) throw std::invalid_argument("oracle input too large");
}

}  // namespace

std::vector<std::vector<VertexId>> maximal_cliques(const epba::Graph& g) {
  const std::size_t n = g.size();
  require_small(n, 20);
  std::vector<std::vector<VertexId>> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (!is_clique(g, m)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!(m >> v & 1) && is_clique(g, m | (1u << v))) maximal = false;
    if (!maximal) continue;
    std::vector<VertexId> c;
    for (std::size_t v = 0; v < n; ++v)
      if (m >> v & 1) c.push_back(static_cast<VertexId>(v));
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double alpha(const epba::Graph& g, const std::vector<double>& w) {
  const std::size_t n = g.size();
  require_small(n, 20);
  double best = 0.0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (!is_independent(g, m)) continue;
    double s = 0.0;
    for (std::size_t v = 0; v < n; ++v)
      if (m >> v & 1) s += w[v];
    best = std::max(best, s);
  }
  return best;
}

std::vector<std::vector<int>> zero_one_states(const epba::Graph& g) {
  const std::size_t n = g.size();
  const auto cliques = oracle::maximal_cliques(g);
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (const auto& c : cliques) {
      int count = 0;
      for (VertexId v : c) count += (m >> v) & 1;
      if (count != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> s(n);
    for (std::size_t v = 0; v < n; ++v) s[v] = (m >> v) & 1;
    out.push_back(s);
  }
  return out;
}

std::optional<Rational> lp_max(const std::vector<std::vector<Rational>>& a,
                               const std::vector<Rational>& b,
                               const std::vector<Rational>& c) {
  // Dense tableau over the slack basis; Bland's rule guarantees termination.
  const std::size_t m = a.size(), n = c.size();
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(n + m + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) throw std::invalid_argument("lp_max needs b >= 0");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];
  for (;;) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) return t[m][n + m];
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) return std::nullopt;
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
}

Rational alpha_star(const epba::Graph& g, const std::vector<double>& w) {
  const std::size_t n = g.size();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& clique : oracle::maximal_cliques(g)) {
    std::vector<Rational> row(n, 0);
    for (VertexId v : clique) row[v] = 1;
    a.push_back(row);
    b.push_back(1);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> row(n, 0);
    row[v] = 1;
    a.push_back(row);
    b.push_back(1);
  }
  std::vector<Rational> c;
  for (double x : w) c.emplace_back(x);  // exact binary value of the double
  return *lp_max(a, b, c);
}

bool graphs_isomorphic(const epba::Graph& g1, const epba::Graph& g2) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return false;
  const std::size_t n = g1.size();
  require_small(n, 9);
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        ok = g1.adjacent(static_cast<VertexId>(u), static_cast<VertexId>(v)) ==
             g2.adjacent(p[u], p[v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool algebras_isomorphic(const epba::PartialBooleanAlgebra& b1,
                         const epba::PartialBooleanAlgebra& b2) {
  if (b1.size() != b2.size()) return false;
  const std::size_t n = b1.size();
  require_small(n, 9);
  std::vector<ElementId> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto map = [&](ElementId x) { return x == epba::kNoElement ? x : p[x]; };
  do {
    if (p[b1.zero()] != b2.zero() || p[b1.one()] != b2.one()) continue;
    bool ok = true;
    for (ElementId x = 0; x < static_cast<ElementId>(n) && ok; ++x) {
      ok = map(b1.neg(x)) == b2.neg(p[x]);
      for (ElementId y = 0; y < static_cast<ElementId>(n) && ok; ++y) {
        const bool c = b1.compatible(x, y);
        ok = c == b2.compatible(p[x], p[y]);
        if (ok && c)
          ok = map(b1.meet(x, y)) == b2.meet(p[x], p[y]) &&
               map(b1.join(x, y)) == b2.join(p[x], p[y]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool leq(const epba::PartialBooleanAlgebra& b, ElementId x, ElementId y) {
  return b.compatible(x, y) && b.meet(x, y) == x;
}

bool exclusive(const epba::PartialBooleanAlgebra& b, ElementId x, ElementId y) {
  for (ElementId c = 0; c < static_cast<ElementId>(b.size()); ++c)
    if (oracle::leq(b, x, c) && oracle::leq(b, y, b.neg(c))) return true;
  return false;
}

bool lep(const epba::PartialBooleanAlgebra& b) {
  const auto n = static_cast<ElementId>(b.size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (oracle::exclusive(b, x, y) && !b.compatible(x, y)) return false;
  return true;
}

bool transitive(const epba::PartialBooleanAlgebra& b) {
  const auto n = static_cast<ElementId>(b.size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (oracle::leq(b, x, y))
        for (ElementId z = 0; z < n; ++z)
          if (oracle::leq(b, y, z) && !oracle::leq(b, x, z)) return false;
  return true;
}

std::vector<ElementId> atoms(const epba::PartialBooleanAlgebra& b) {
  std::vector<ElementId> out;
  const auto n = static_cast<ElementId>(b.size());
  for (ElementId a = 0; a < n; ++a) {
    if (a == b.zero()) continue;
    bool atom = true;
    for (ElementId x = 0; x < n && atom; ++x)
      if (x != a && x != b.zero() && oracle::leq(b, x, a)) atom = false;
    if (atom) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<double>> zero_one_algebra_states(
    const epba::PartialBooleanAlgebra& b) {
  const std::size_t n = b.size();
  require_small(n, 20);
  std::vector<std::vector<double>> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    auto p = [&](ElementId x) { return static_cast<int>((m >> x) & 1); };
    bool ok = p(b.zero()) == 0;
    for (ElementId x = 0; x < static_cast<ElementId>(n) && ok; ++x) {
      ok = p(b.neg(x)) == 1 - p(x);
      for (ElementId y = 0; y < static_cast<ElementId>(n) && ok; ++y)
        if (b.compatible(x, y))
          ok = p(b.join(x, y)) + p(b.meet(x, y)) == p(x) + p(y);
    }
    if (!ok) continue;
    std::vector<double> s(n);
    for (std::size_t x = 0; x < n; ++x) s[x] = p(static_cast<ElementId>(x));
    out.push_back(s);
  }
  return out;
}

}  // namespace oracle
