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

// Command-line front end for the epba library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epba/algebra.hpp"
#include "epba/atom_graph.hpp"
#include "epba/error.hpp"
#include "epba/graph.hpp"
#include "epba/io.hpp"
#include "epba/quantum.hpp"
#include "epba/scenarios.hpp"
#include "epba/states.hpp"
#include "epba/witnesses.hpp"

namespace {

using epba::io::Json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Options {
  std::string input = "-";
  std::string output;
  std::string format = "json";
  std::string weights = "ones";
  std::string state;
  std::string direction = "restrict";
  std::string scenario;
  std::size_t cap = 0;
  double tolerance = epba::kStateTolerance;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};

// An input document is an algebra, a graph, a quantum system as emitted by
// `scenario`, or a projector set.
struct Loaded {
  std::optional<epba::PartialBooleanAlgebra> algebra;
  std::optional<epba::Graph> graph;
};

void warn_near_collisions(const epba::QuantumSystem& q) {
  for (const auto& [x, y] : epba::near_collisions(q))
    std::cerr << "warning: projectors " << q.algebra.label(x) << " and "
              << q.algebra.label(y) << " are within 1e-6 of each other\n";
}

Loaded load(const Options& o) {
  const Json j = epba::io::load_json(o.input);
  Loaded out;
  if (j.contains("elements")) {
    out.algebra = epba::io::algebra_from_json(j);
  } else if (j.contains("algebra")) {
    out.algebra = epba::io::algebra_from_json(j.at("algebra"));
  } else if (j.contains("projectors")) {
    std::vector<std::string> names;
    const auto projectors = epba::io::projectors_from_json(j, &names);
    epba::QuantumOptions qo;
    if (o.cap) qo.cap = o.cap;
    auto q = epba::generate_system(projectors, names, qo);
    warn_near_collisions(q);
    out.algebra = std::move(q.algebra);
  } else if (j.contains("vertices")) {
    out.graph = epba::io::graph_from_json(j);
  } else {
    throw epba::InvalidInput(o.input +
                             ": expected an algebra, a graph or a projector set");
  }
  return out;
}

const epba::PartialBooleanAlgebra& need_algebra(const Loaded& l) {
  if (!l.algebra) throw epba::InvalidInput("this command needs an algebra");
  return *l.algebra;
}

// Graph inputs are used as given; algebras are replaced by their atom graph.
epba::Graph need_graph(const Loaded& l) {
  if (l.graph) return *l.graph;
  const auto report = epba::validate_pba(*l.algebra);
  if (!report.ok)
    throw epba::InvalidInput("algebra fails validation (" +
                             report.violations.front().axiom + ")");
  return epba::atom_graph(*l.algebra);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw epba::InvalidInput(o.output + ": cannot write file");
  out << text;
}

void emit(const Options& o, const Json& j) { emit(o, epba::io::dump(j)); }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw epba::InvalidInput("format \"" + o.format + "\" is not available here");
}

std::string names_line(const epba::PartialBooleanAlgebra& b,
                       const std::vector<epba::ElementId>& ids) {
  std::string s;
  for (auto e : ids) s += (s.empty() ? "" : " ") + b.label(e);
  return s;
}

int cmd_validate(const Options& o) {
  require_format(o, {"json", "table"});
  const auto b = need_algebra(load(o));
  epba::ValidationOptions vo;
  if (o.cap) vo.element_cap = o.cap;
  const auto report = epba::validate_pba(b, vo);
  Json j = epba::io::to_json(b, report);
  if (report.ok) {
    j["lep"] = epba::satisfies_lep(b);
    j["transitive"] = epba::is_transitive(b);
  }
  if (o.format == "table") {
    std::ostringstream s;
    s << "elements  " << b.size() << "\nvalid     " << (report.ok ? "yes" : "no")
      << "\n";
    if (report.ok)
      s << "lep       " << (j["lep"].get<bool>() ? "yes" : "no") << "\ntransitive "
        << (j["transitive"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& v : report.violations)
      s << "violation " << v.axiom << ": " << names_line(b, v.witnesses) << "\n";
    emit(o, s.str());
  } else {
    emit(o, j);
  }
  return report.ok ? kOk : kNegative;
}

int cmd_atoms(const Options& o) {
  require_format(o, {"json", "table"});
  const auto b = need_algebra(load(o));
  const auto a = epba::atoms(b);
  if (o.format == "table") {
    emit(o, std::to_string(a.size()) + "\n" + names_line(b, a) + "\n");
  } else {
    Json names = Json::array();
    for (auto e : a) names.push_back(b.label(e));
    emit(o, Json{{"count", a.size()}, {"atoms", names}});
  }
  return kOk;
}

int cmd_atom_graph(const Options& o) {
  require_format(o, {"json", "dot"});
  const auto g = need_graph(load(o));
  const auto cover = epba::maximal_cliques(g);
  if (o.format == "dot")
    emit(o, epba::to_dot(g, &cover));
  else
    emit(o, epba::io::to_json(g, cover));
  return kOk;
}

int cmd_reconstruct(const Options& o) {
  require_format(o, {"json"});
  const auto g = need_graph(load(o));
  const auto result = epba::reconstruct(g);
  emit(o, epba::io::to_json(g, result));
  if (!result.realizable()) {
    std::cerr << "not realizable: " << result.failure().condition << " ("
              << result.failure().detail << ")\n";
    return kNegative;
  }
  return kOk;
}

Json graph_states_json(const epba::Graph& g,
                       const std::vector<epba::GraphState>& states) {
  Json list = Json::array();
  for (const auto& s : states)
    list.push_back(epba::io::state_to_json(g.names(), s.values));
  return list;
}

int cmd_states(const Options& o) {
  require_format(o, {"json", "table"});
  const auto g = need_graph(load(o));
  epba::EnumerationOptions eo;
  if (o.cap) eo.state_cap = o.cap;
  const auto zero_one = epba::zero_one_states(g, eo);
  const auto feasible = epba::state_feasible(g);
  std::vector<epba::GraphState> sampled;
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.samples; ++i)
    if (auto s = epba::sample_graph_state(g, rng)) sampled.push_back(*s);

  if (o.format == "table") {
    std::ostringstream s;
    s << "0-1 states: " << zero_one.size() << "\n";
    for (const auto& st : zero_one) {
      std::string line;
      for (std::size_t v = 0; v < g.size(); ++v)
        if (st.values[v] > 0.5) line += (line.empty() ? "" : " ") + g.name(static_cast<epba::VertexId>(v));
      s << "  {" << line << "}\n";
    }
    s << "feasible:   " << (feasible ? "yes" : "no") << "\n";
    if (feasible)
      for (std::size_t v = 0; v < g.size(); ++v)
        s << "  " << g.name(static_cast<epba::VertexId>(v)) << " "
          << epba::io::round10(feasible->values[v]) << "\n";
    emit(o, s.str());
  } else {
    Json j{{"zero_one_count", zero_one.size()},
           {"zero_one_states", graph_states_json(g, zero_one)},
           {"feasible", feasible ? epba::io::state_to_json(g.names(), feasible->values)
                                 : Json(nullptr)}};
    if (o.samples) j["samples"] = graph_states_json(g, sampled);
    emit(o, j);
  }
  return kOk;
}

int cmd_ks_check(const Options& o) {
  require_format(o, {"json", "table"});
  const auto g = need_graph(load(o));
  epba::EnumerationOptions eo;
  if (o.cap) eo.state_cap = o.cap;
  const bool ks = epba::has_ks_property(g, eo);
  if (o.format == "table")
    emit(o, std::string(ks ? "true" : "false") + "\n");
  else
    emit(o, Json{{"ks_property", ks}});
  return kOk;
}

int cmd_witness(const Options& o) {
  require_format(o, {"json", "table"});
  const auto g = need_graph(load(o));
  const auto w = o.weights == "ones"
                     ? epba::WeightFunction::ones(g.size())
                     : epba::io::weights_from_json(epba::io::load_json(o.weights), g);
  const auto report = epba::nc_inequality_report(g, w);
  if (o.format == "table") {
    std::ostringstream s;
    s.precision(10);
    s << "alpha       " << report.alpha.value << "\n"
      << "theta       " << report.theta.value << "  (gap " << report.theta.gap
      << ")\n"
      << "alpha_star  " << report.alpha_star.value << "\n"
      << "gap_found   " << (report.gap_found ? "yes" : "no") << "\n";
    emit(o, s.str());
  } else {
    emit(o, epba::io::to_json(g, report));
  }
  return kOk;
}

int cmd_scenario(const Options& o) {
  require_format(o, {"json"});
  const std::string& s = o.scenario;
  if (s == "b1") return emit(o, epba::io::to_json(epba::b1())), kOk;
  if (s == "b2") return emit(o, epba::io::to_json(epba::b2())), kOk;
  if (s == "b2p") return emit(o, epba::io::to_json(epba::b2_prime())), kOk;
  epba::QuantumSystem q;
  if (s == "kcbs")
    q = epba::scenario_kcbs();
  else if (s == "chsh")
    q = epba::scenario_chsh();
  else
    q = epba::scenario_fig2();
  warn_near_collisions(q);
  emit(o, epba::io::to_json(q));
  return kOk;
}

int cmd_state_transfer(const Options& o) {
  require_format(o, {"json"});
  const auto b = need_algebra(load(o));
  if (o.state.empty()) throw epba::InvalidInput("--state is required");
  const Json sj = epba::io::load_json(o.state);
  const auto g = epba::atom_graph(b);
  if (o.direction == "restrict") {
    epba::AlgebraState p{epba::io::state_from_json(sj, b.labels())};
    const auto check = epba::is_state(b, p.values, o.tolerance);
    if (!check.ok)
      throw epba::InvalidInput("input is not a state: " + check.violations.front());
    const auto q = epba::restrict_state(b, p);
    emit(o, epba::io::state_to_json(g.names(), q.values));
  } else {
    epba::GraphState q{epba::io::state_from_json(sj, g.names())};
    const auto check = epba::is_graph_state(g, q.values, o.tolerance);
    if (!check.ok)
      throw epba::InvalidInput("input is not a graph state: " +
                               check.violations.front());
    const auto p = epba::extend_state(b, q);
    emit(o, epba::io::state_to_json(b.labels(), p.values));
  }
  return kOk;
}

void add_common(CLI::App* app, Options& o, bool with_input = true) {
  if (with_input)
    app->add_option("-i,--input,--graph,--algebra", o.input,
                    "input JSON file, '-' for stdin");
  app->add_option("-o,--output", o.output, "output file (default stdout)");
  app->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "table"}));
  app->add_option("--cap", o.cap, "element, state or closure cap");
  app->add_option("--tolerance", o.tolerance, "state tolerance");
  app->add_option("--seed", o.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exclusive partial Boolean algebras, atom graphs and witnesses"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Verb verbs[] = {
      {"validate", "check the partial Boolean algebra axioms", cmd_validate},
      {"atoms", "list the atoms of an algebra", cmd_atoms},
      {"atom-graph", "atom graph with maximal cliques", cmd_atom_graph},
      {"reconstruct", "rebuild an algebra from a graph", cmd_reconstruct},
      {"states", "0-1 states and a feasible graph state", cmd_states},
      {"ks-check", "decide the Kochen-Specker property", cmd_ks_check},
      {"witness", "alpha, theta and alpha* of a weighted graph", cmd_witness},
      {"state-transfer", "restrict or extend a state", cmd_state_transfer},
  };
  int (*selected)(const Options&) = nullptr;
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    add_common(sub, o);
    sub->final_callback([&selected, run = v.run] { selected = run; });
    if (std::string(v.name) == "witness")
      sub->add_option("--weights", o.weights, "'ones' or a weights JSON file");
    if (std::string(v.name) == "states")
      sub->add_option("--sample", o.samples, "number of random graph states");
    if (std::string(v.name) == "state-transfer") {
      sub->add_option("--state", o.state, "state JSON file")->required();
      sub->add_option("--direction", o.direction, "restrict or extend")
          ->check(CLI::IsMember({"restrict", "extend"}));
    }
  }
  auto* scenario = app.add_subcommand("scenario", "emit a built-in object");
  add_common(scenario, o, false);
  scenario->add_option("name", o.scenario, "kcbs, chsh, fig2, b1, b2 or b2p")
      ->required()
      ->check(CLI::IsMember({"kcbs", "chsh", "fig2", "b1", "b2", "b2p"}));
  scenario->final_callback([&selected] { selected = cmd_scenario; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }
  try {
    return selected(o);
  } catch (const epba::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
