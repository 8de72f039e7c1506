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

#include <algorithm>

#include "epba/algebra.hpp"
#include "epba/error.hpp"
#include "epba/scenarios.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace epba;

namespace {

std::vector<std::string> names(const Algebra& b, const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (auto e : ids) out.push_back(b.label(e));
  std::sort(out.begin(), out.end());
  return out;
}

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

}  // namespace

TEST_CASE("validate_pba accepts the reference algebras") {
  CHECK(validate_pba(b1()).ok);
  CHECK(b1().size() == 12);
  CHECK(validate_pba(b2()).ok);
  CHECK(validate_pba(b2_prime()).ok);
  CHECK_FALSE(validate_pba(Algebra({"0", "1"}, 0, 1)).ok);  // neg undefined
  Algebra minimal({"0", "1"}, 0, 1);
  minimal.set_neg(0, 1);
  minimal.set_neg(1, 0);
  minimal.set_compatible(0, 1);
  minimal.set_meet(0, 1, 0);
  minimal.set_join(0, 1, 1);
  const auto r = validate_pba(minimal);
  CHECK(r.ok);
  CHECK(r.violations.empty());
  CHECK(validate_pba(boolean_algebra(1)).ok);
}

TEST_CASE("validate_pba rejects operations outside the compatibility relation") {
  Algebra b = b2_prime();
  const auto a1 = b.id("a1"), a2 = b.id("a2");
  REQUIRE_FALSE(b.compatible(a1, a2));
  b.set_join(a1, a2, b.one());
  CHECK_THROWS_AS(validate_pba(b), MalformedTable);
}

TEST_CASE("validate_pba reports broken axioms") {
  Algebra b = boolean_algebra(2);
  b.set_neg(b.id("x1"), b.id("x1"));
  const auto r = validate_pba(b);
  CHECK_FALSE(r.ok);
  CHECK(has_axiom(r, "neg-involution"));

  Algebra c = boolean_algebra(2);
  c.set_meet(c.id("x1"), c.id("x2"), c.id("x1"));
  CHECK_FALSE(validate_pba(c).ok);

  ValidationOptions tight;
  tight.element_cap = 4;
  CHECK_THROWS_AS(validate_pba(b1(), tight), CapExceeded);
}

TEST_CASE("leq follows the tables") {
  const Algebra b = b1();
  CHECK(leq(b, b.id("a1"), b.id("~b1")));
  for (ElementId x = 0; x < static_cast<ElementId>(b.size()); ++x)
    CHECK(leq(b, b.zero(), x));
  const Algebra c = b2();
  CHECK_FALSE(leq(c, c.id("a1"), c.id("~b2")));
  CHECK(leq(c, c.id("a1"), c.id("c")));
  CHECK(leq(c, c.id("c"), c.id("~b2")));
  CHECK_THROWS_AS(leq(b, 0, 99), UnknownElement);
}

TEST_CASE("exclusivity") {
  const Algebra c = b2();
  const auto w = exclusivity_witness(c, c.id("a1"), c.id("a2"));
  REQUIRE(w.has_value());
  CHECK(leq(c, c.id("a1"), *w));
  CHECK(leq(c, c.id("a2"), c.neg(*w)));
  CHECK_FALSE(c.compatible(c.id("a1"), c.id("a2")));
  for (const Algebra& b : {b1(), b2(), b2_prime()})
    for (ElementId x = 0; x < static_cast<ElementId>(b.size()); ++x)
      CHECK(exclusive(b, x, b.neg(x)));
  const Algebra ba = boolean_algebra(3);
  for (ElementId x = 0; x < 8; ++x)
    for (ElementId y = 0; y < 8; ++y)
      CHECK(exclusive(ba, x, y) == (ba.meet(x, y) == ba.zero()));
}

TEST_CASE("LEP and transitivity on the reference algebras") {
  CHECK(satisfies_lep(b1()));
  CHECK(is_transitive(b1()));
  CHECK_FALSE(satisfies_lep(b2()));
  CHECK_FALSE(is_transitive(b2()));
  CHECK(satisfies_lep(boolean_algebra(3)));
  CHECK(is_transitive(boolean_algebra(1)));
}

TEST_CASE("atoms") {
  CHECK(names(b1(), atoms(b1())) ==
        std::vector<std::string>{"a1", "a2", "b1", "b2", "c"});
  CHECK(names(b2(), atoms(b2())) == std::vector<std::string>{"a1", "a2", "b1", "b2"});
  CHECK(names(boolean_algebra(4), atoms(boolean_algebra(4))) ==
        std::vector<std::string>{"x1", "x2", "x3", "x4"});
}

TEST_CASE("maximal contexts") {
  const auto ctx1 = maximal_contexts(b1());
  REQUIRE(ctx1.size() == 2);
  for (const auto& c : ctx1) {
    CHECK(c.members.size() == 8);
    CHECK(c.is_maximal);
  }
  const auto ba = maximal_contexts(boolean_algebra(3));
  REQUIRE(ba.size() == 1);
  CHECK(ba[0].members.size() == 8);

  const Algebra b = b2();
  std::vector<std::vector<std::string>> ctx_atoms;
  for (const auto& c : maximal_contexts(b)) ctx_atoms.push_back(names(b, c.atoms));
  std::sort(ctx_atoms.begin(), ctx_atoms.end());
  CHECK(ctx_atoms == std::vector<std::vector<std::string>>{{"a1", "b1", "~c"},
                                                           {"a2", "b2", "c"}});
}

TEST_CASE("atoms of maximal contexts are atoms exactly when LEP holds here") {
  for (const Algebra& b : {b1(), b2_prime(), boolean_algebra(3)}) {
    const auto all = atoms(b);
    for (const auto& c : maximal_contexts(b))
      for (auto a : c.atoms) CHECK(std::count(all.begin(), all.end(), a) == 1);
  }
  const Algebra b = b2();
  const auto all = atoms(b);
  bool contained = true;
  for (const auto& c : maximal_contexts(b))
    for (auto a : c.atoms) contained &= std::count(all.begin(), all.end(), a) == 1;
  CHECK_FALSE(contained);
}

TEST_CASE("isomorphism search") {
  gen::Rng rng(7);
  const Algebra b = b1();
  const Algebra p = gen::shuffled(b, rng);
  const auto iso = are_isomorphic(b, p);
  REQUIRE(iso.has_value());
  for (ElementId x = 0; x < 12; ++x) {
    CHECK(p.neg((*iso)[x]) == (*iso)[b.neg(x)]);
    for (ElementId y = 0; y < 12; ++y) {
      CHECK(p.compatible((*iso)[x], (*iso)[y]) == b.compatible(x, y));
      if (b.compatible(x, y)) CHECK(p.meet((*iso)[x], (*iso)[y]) == (*iso)[b.meet(x, y)]);
    }
  }
  CHECK_FALSE(are_isomorphic(b2(), b2_prime()).has_value());
  CHECK_FALSE(are_isomorphic(boolean_algebra(3), boolean_algebra(4)).has_value());
  CHECK_FALSE(are_isomorphic(b1(), b2()).has_value());
  CHECK(are_isomorphic(b2(), b1()).has_value() == are_isomorphic(b1(), b2()).has_value());
}

TEST_CASE("isomorphism agrees with the permutation oracle on small algebras") {
  gen::Rng rng(11);
  std::vector<Algebra> small;
  while (small.size() < 25) {
    auto b = gen::random_glued_pba(rng, 8);
    if (b) small.push_back(*b);
  }
  for (const auto& x : small)
    for (const auto& y : small)
      CHECK(are_isomorphic(x, y).has_value() == oracle::algebras_isomorphic(x, y));
}

TEST_CASE("order facts on random algebras") {
  gen::Rng rng(3);
  int seen = 0;
  while (seen < 80) {
    auto maybe = gen::random_glued_pba(rng);
    if (!maybe) continue;
    ++seen;
    const Algebra& b = *maybe;
    CHECK(satisfies_lep(b) == oracle::lep(b));
    CHECK(is_transitive(b) == oracle::transitive(b));
    CHECK(atoms(b) == oracle::atoms(b));
    const auto n = static_cast<ElementId>(b.size());
    for (ElementId x = 0; x < n; ++x) {
      CHECK(b.neg(b.neg(x)) == x);
      for (ElementId y = 0; y < n; ++y) {
        CHECK(exclusive(b, x, y) == oracle::exclusive(b, x, y));
        if (leq(b, x, y) && leq(b, y, x)) CHECK(x == y);
      }
    }
  }
}

TEST_CASE("permute relabels elements") {
  const Algebra b = b2_prime();
  std::vector<ElementId> order{5, 4, 3, 2, 1, 0};
  const Algebra p = permute(b, order);
  CHECK(p.label(0) == b.label(5));
  CHECK(p.zero() == 5 - b.zero());
  CHECK(are_isomorphic(b, p).has_value());
}

TEST_CASE("unknown labels") {
  CHECK_THROWS_AS(b1().id("nope"), UnknownElement);
  CHECK_THROWS_AS(Algebra({"0", "0"}, 0, 1), InvalidInput);
}
