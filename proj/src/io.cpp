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

#include "epba/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "epba/error.hpp"

namespace epba::io {

double round10(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::strtod(buf, nullptr);
}

namespace {

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("malformed ") + what + ": " + j.dump());
  }
}

Json rounded(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(round10(x));
  return out;
}

Json names_of(const PartialBooleanAlgebra& b, const std::vector<ElementId>& ids) {
  Json out = Json::array();
  for (ElementId e : ids) out.push_back(b.label(e));
  return out;
}

Json names_of(const Graph& g, const std::vector<VertexId>& ids) {
  Json out = Json::array();
  for (VertexId v : ids) out.push_back(g.name(v));
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(source + ":" + position(text, e.byte > 0 ? e.byte - 1 : 0) +
                       ": " + e.what());
  }
}

Json load_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput(path + ": cannot open file");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json(text, path == "-" ? "<stdin>" : path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const PartialBooleanAlgebra& b) {
  const auto n = static_cast<ElementId>(b.size());
  Json compat = Json::array(), meet = Json::array(), join = Json::array(),
       neg = Json::array();
  for (ElementId x = 0; x < n; ++x) {
    if (b.neg(x) != kNoElement) neg.push_back({b.label(x), b.label(b.neg(x))});
    for (ElementId y = x + 1; y < n; ++y) {
      if (!b.compatible(x, y)) continue;
      compat.push_back({b.label(x), b.label(y)});
      if (b.meet(x, y) != kNoElement)
        meet.push_back({b.label(x), b.label(y), b.label(b.meet(x, y))});
      if (b.join(x, y) != kNoElement)
        join.push_back({b.label(x), b.label(y), b.label(b.join(x, y))});
    }
  }
  return Json{{"elements", b.labels()},
              {"zero", b.label(b.zero())},
              {"one", b.label(b.one())},
              {"compat", compat},
              {"meet", meet},
              {"join", join},
              {"neg", neg}};
}

PartialBooleanAlgebra algebra_from_json(const Json& j) {
  auto labels = as<std::vector<std::string>>(field(j, "elements"), "elements");
  if (labels.empty()) throw InvalidInput("algebra has no elements");
  std::unordered_map<std::string, ElementId> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    index.emplace(labels[i], static_cast<ElementId>(i));
  auto id = [&](const Json& name) {
    const auto s = as<std::string>(name, "element name");
    auto it = index.find(s);
    if (it == index.end()) throw UnknownElement("unknown element \"" + s + "\"");
    return it->second;
  };
  const ElementId zero = id(field(j, "zero"));
  const ElementId one = id(field(j, "one"));
  PartialBooleanAlgebra b(std::move(labels), zero, one);

  auto list = [&](const char* key) {
    if (!j.contains(key)) return Json::array();
    const Json& l = j.at(key);
    if (!l.is_array()) throw InvalidInput(std::string("\"") + key + "\" must be a list");
    return l;
  };
  for (const auto& p : list("compat")) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput("malformed compat pair");
    b.set_compatible(id(p[0]), id(p[1]));
  }
  // Operation entries are recorded before the domain check so that
  // validate_pba can report the offending pair as MalformedTable.
  for (const char* key : {"meet", "join"}) {
    const bool is_meet = key[0] == 'm';
    for (const auto& t : list(key)) {
      if (!t.is_array() || t.size() != 3)
        throw InvalidInput(std::string("malformed ") + key + " triple");
      const ElementId x = id(t[0]), y = id(t[1]), r = id(t[2]);
      if (is_meet)
        b.set_meet(x, y, r);
      else
        b.set_join(x, y, r);
    }
  }
  for (const auto& t : list("neg")) {
    if (!t.is_array() || t.size() != 2) throw InvalidInput("malformed neg pair");
    b.set_neg(id(t[0]), id(t[1]));
  }
  return b;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return Json{{"vertices", g.names()}, {"edges", edges}};
}

Json to_json(const Graph& g, const CliqueCover& cover) {
  Json j = to_json(g);
  Json cliques = Json::array();
  for (const auto& c : cover.cliques) cliques.push_back(names_of(g, c));
  j["cliques"] = cliques;
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g(as<std::vector<std::string>>(field(j, "vertices"), "vertices"));
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("malformed edge");
      auto find = [&](const Json& name) {
        const auto s = as<std::string>(name, "vertex name");
        auto v = g.find(s);
        if (!v) throw UnknownElement("unknown vertex \"" + s + "\"");
        return *v;
      };
      g.add_edge(find(e[0]), find(e[1]));
    }
  }
  return g;
}

Json state_to_json(const std::vector<std::string>& names,
                   const std::vector<double>& values) {
  Json v = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = round10(values[i]);
  return Json{{"values", v}};
}

std::vector<double> state_from_json(const Json& j,
                                    const std::vector<std::string>& names) {
  const Json& v = field(j, "values");
  if (!v.is_object()) throw InvalidInput("\"values\" must be an object");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<double> out(names.size(), 0.0);
  std::vector<bool> seen(names.size(), false);
  for (const auto& [key, value] : v.items()) {
    auto it = index.find(key);
    if (it == index.end()) throw UnknownElement("unknown name \"" + key + "\"");
    out[it->second] = as<double>(value, "state value");
    seen[it->second] = true;
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!seen[i]) throw InvalidInput("state has no value for \"" + names[i] + "\"");
  return out;
}

WeightFunction weights_from_json(const Json& j, const Graph& g) {
  const Json& v = field(j, "weights");
  if (!v.is_object()) throw InvalidInput("\"weights\" must be an object");
  std::vector<double> w(g.size(), 1.0);
  for (const auto& [key, value] : v.items()) {
    auto id = g.find(key);
    if (!id) throw UnknownElement("unknown vertex \"" + key + "\"");
    w[static_cast<std::size_t>(*id)] = as<double>(value, "weight");
  }
  return WeightFunction(std::move(w));
}

Json weights_to_json(const Graph& g, const WeightFunction& w) {
  Json v = Json::object();
  for (std::size_t i = 0; i < g.size(); ++i)
    v[g.name(static_cast<VertexId>(i))] = round10(w.values()[i]);
  return Json{{"weights", v}};
}

Json to_json(const ComplexMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array(), c = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      r.push_back(round10(m(i, k).real()));
      c.push_back(round10(m(i, k).imag()));
    }
    re.push_back(r);
    im.push_back(c);
  }
  return Json{{"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const Json& j, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  auto read = [&](const char* key, bool imag) {
    if (!j.contains(key)) {
      if (imag) return;
      throw InvalidInput(std::string("missing field \"") + key + "\"");
    }
    auto rows = as<std::vector<std::vector<double>>>(j.at(key), key);
    if (rows.size() != dim) throw DimensionMismatch("matrix row count differs from dim");
    for (std::size_t i = 0; i < dim; ++i) {
      if (rows[i].size() != dim)
        throw DimensionMismatch("matrix column count differs from dim");
      for (std::size_t k = 0; k < dim; ++k) {
        auto& entry = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
        entry += imag ? std::complex<double>(0.0, rows[i][k])
                      : std::complex<double>(rows[i][k], 0.0);
      }
    }
  };
  read("re", false);
  read("im", true);
  return m;
}

Json projectors_to_json(const std::vector<Projector>& projectors,
                        const std::vector<std::string>& names) {
  Json list = Json::array();
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    Json p = to_json(projectors[i].matrix());
    p["name"] = i < names.size() ? names[i] : "P" + std::to_string(i);
    list.push_back(p);
  }
  const std::size_t dim = projectors.empty() ? 0 : projectors.front().dim();
  return Json{{"dim", dim}, {"projectors", list}};
}

std::vector<Projector> projectors_from_json(const Json& j,
                                            std::vector<std::string>* names) {
  const auto dim = as<std::size_t>(field(j, "dim"), "dim");
  if (dim == 0) throw InvalidInput("dim must be positive");
  std::vector<Projector> out;
  std::size_t k = 0;
  for (const auto& p : field(j, "projectors")) {
    out.emplace_back(matrix_from_json(p, dim));
    if (names)
      names->push_back(p.contains("name") ? as<std::string>(p.at("name"), "name")
                                          : "P" + std::to_string(k));
    ++k;
  }
  return out;
}

Json to_json(const DensityMatrix& rho) {
  Json j = to_json(rho.matrix());
  j["dim"] = rho.dim();
  return j;
}

DensityMatrix density_from_json(const Json& j) {
  const auto dim = as<std::size_t>(field(j, "dim"), "dim");
  if (dim == 0) throw InvalidInput("dim must be positive");
  return DensityMatrix(matrix_from_json(j, dim));
}

Json to_json(const PartialBooleanAlgebra& b, const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& viol : r.violations)
    v.push_back({{"axiom", viol.axiom}, {"witnesses", names_of(b, viol.witnesses)}});
  return Json{{"ok", r.ok}, {"elements", b.size()}, {"violations", v}};
}

Json to_json(const Graph& g, const WitnessReport& r) {
  return Json{
      {"alpha",
       {{"value", round10(r.alpha.value)},
        {"independent_set", names_of(g, r.alpha.independent_set)}}},
      {"theta",
       {{"value", round10(r.theta.value)},
        {"primal", round10(r.theta.primal)},
        {"dual", round10(r.theta.dual)},
        {"gap", round10(r.theta.gap)},
        {"iterations", r.theta.iterations}}},
      {"alpha_star", {{"value", round10(r.alpha_star.value)}, {"x", rounded(r.alpha_star.x)}}},
      {"gap_found", r.gap_found},
      {"tolerances",
       {{"theta", r.tolerances.theta}, {"gap_found", r.tolerances.gap_found}}}};
}

Json to_json(const Graph& g, const ReconstructionResult& r) {
  if (!r.realizable()) {
    return Json{{"realizable", false},
                {"condition", r.failure().condition},
                {"detail", r.failure().detail}};
  }
  const auto& real = r.realization();
  Json map = Json::object();
  for (std::size_t v = 0; v < real.atom_map.size(); ++v)
    map[g.name(static_cast<VertexId>(v))] = real.algebra.label(real.atom_map[v]);
  return Json{{"realizable", true}, {"algebra", to_json(real.algebra)}, {"atom_map", map}};
}

Json to_json(const QuantumSystem& q) {
  std::vector<std::string> names;
  for (ElementId e : q.generator_ids) names.push_back(q.algebra.label(e));
  std::vector<Projector> gens;
  for (ElementId e : q.generator_ids) gens.push_back(q.projectors[e]);
  return Json{{"algebra", to_json(q.algebra)},
              {"generators", projectors_to_json(gens, names)}};
}

}  // namespace epba::io
