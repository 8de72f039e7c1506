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

#include <doctest.h>

#include "epba/error.hpp"
#include "epba/io.hpp"
#include "epba/scenarios.hpp"

using namespace epba;

TEST_CASE("algebra JSON round trip") {
  for (const Algebra& b : {b1(), b2(), b2_prime(), scenario_kcbs().algebra}) {
    const auto j = io::to_json(b);
    CHECK(io::algebra_from_json(j) == b);
    CHECK(io::dump(io::to_json(io::algebra_from_json(io::parse_json(io::dump(j))))) ==
          io::dump(j));
  }
}

TEST_CASE("algebra JSON with a table entry outside compat") {
  auto j = io::to_json(b2_prime());
  j["join"].push_back({"a1", "a2", "1"});
  CHECK_THROWS_AS(validate_pba(io::algebra_from_json(j)), MalformedTable);
  j["neg"].push_back({"a1", "zzz"});
  CHECK_THROWS_AS(io::algebra_from_json(j), UnknownElement);
}

TEST_CASE("graph JSON") {
  const auto j = io::parse_json(
      R"({"vertices":["x","y","z"],"edges":[["x","y"],["y","z"]]})");
  const Graph g = io::graph_from_json(j);
  CHECK(g.edge_count() == 2);
  CHECK(io::graph_from_json(io::to_json(g)) == g);
  CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"vertices":["x"],"edges":[["x","q"]]})")),
                  UnknownElement);
  const auto with_cliques = io::to_json(g, maximal_cliques(g));
  CHECK(with_cliques["cliques"].size() == 2);
}

TEST_CASE("state and weight JSON") {
  const Graph g = cycle_graph(3);
  const auto j = io::state_to_json(g.names(), {0.1, 0.2, 1.0 / 3.0});
  CHECK(j["values"]["v2"].get<double>() == 0.3333333333);
  CHECK(io::state_from_json(j, g.names())[0] == 0.1);
  CHECK_THROWS_AS(io::state_from_json(j, {"v0", "v1"}), UnknownElement);
  CHECK_THROWS_AS(io::state_from_json(io::parse_json(R"({"values":{"v0":1}})"), g.names()),
                  InvalidInput);
  const auto w = io::weights_from_json(io::parse_json(R"({"weights":{"v1":2.5}})"), g);
  CHECK(w.values() == std::vector<double>{1.0, 2.5, 1.0});
  CHECK(io::weights_from_json(io::weights_to_json(g, w), g).values() == w.values());
}

TEST_CASE("projector and density JSON") {
  const auto gens = fig2_generators();
  const std::vector<std::string> names{"c", "a1", "b1", "a2", "b2"};
  const auto j = io::projectors_to_json(gens, names);
  std::vector<std::string> back_names;
  const auto back = io::projectors_from_json(io::parse_json(io::dump(j)), &back_names);
  CHECK(back_names == names);
  for (std::size_t i = 0; i < gens.size(); ++i)
    CHECK((back[i].matrix() - gens[i].matrix()).norm() < 1e-9);

  const auto rho = DensityMatrix::maximally_mixed(2);
  const auto r = io::density_from_json(io::to_json(rho));
  CHECK((r.matrix() - rho.matrix()).norm() == 0.0);
  CHECK_THROWS_AS(io::density_from_json(io::parse_json(R"({"dim":2,"re":[[1,0]]})")),
                  DimensionMismatch);
}

TEST_CASE("parse errors carry line and column") {
  try {
    io::parse_json("{\n  \"a\": ,\n}", "doc.json");
    FAIL("expected a parse error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).rfind("doc.json:2:", 0) == 0);
  }
  CHECK_THROWS_AS(io::load_json("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("rounding to ten significant digits") {
  CHECK(io::round10(2.23606797749979) == 2.236067977);
  CHECK(io::round10(0.0) == 0.0);
  CHECK(io::round10(1e-20 / 3) == 3.333333333e-21);
}

TEST_CASE("reports are deterministic") {
  const Graph c5 = cycle_graph(5);
  const auto a = io::dump(io::to_json(c5, nc_inequality_report(c5, WeightFunction::ones(5))));
  const auto b = io::dump(io::to_json(c5, nc_inequality_report(c5, WeightFunction::ones(5))));
  CHECK(a == b);
  const auto rec = io::to_json(path_graph(3), reconstruct(path_graph(3)));
  CHECK(rec["realizable"] == false);
  const auto q = io::to_json(scenario_fig2());
  CHECK(io::algebra_from_json(q["algebra"]) == scenario_fig2().algebra);
}
