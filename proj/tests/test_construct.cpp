// Copyright 2026 The prepea authors
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

#include "prepea/canonical.hpp"
#include "prepea/construct.hpp"
#include "prepea/enumerate.hpp"
#include "prepea/fixtures.hpp"

using namespace prepea;

namespace {

GppeaModel one_element() {
  GppeaModel g;
  g.carrier = make_carrier(1, 0);
  g.plus = PartialBinTable::from_rows({{0}});
  g.rminus = g.plus;
  g.lminus = g.plus;
  return g;
}

Poset vee_poset() {
  Relation r = Relation::identity(3);
  r.set(0, 1, true);
  r.set(0, 2, true);
  return Poset::unchecked(r);
}

bool plus_definedness_symmetric(const GppeaModel& m) {
  for (int a = 0; a < m.size(); ++a) {
    for (int b = 0; b < m.size(); ++b) {
      if (m.plus.defined(a, b) != m.plus.defined(b, a)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("unitizing the one-element model gives the two-element chain") {
  UnitizeResult u = unitize(one_element());
  CHECK(u.self_check.pass());
  CHECK(u.model.size() == 2);
  CHECK(isomorphic(u.model, *find_fixture("two-chain-wppea")->wppea));
}

TEST_CASE("unitizing the trivial vee model follows the starred rules") {
  GppeaModel g = trivial_gppea_from_poset(vee_poset());
  UnitizeResult u = unitize(g);
  CHECK(u.model.size() == 6);
  CHECK(u.model.unit() == 3);          // 0*
  CHECK(u.model.rsupp.at(1) == 4);     // a^R = a*
  CHECK(u.model.lsupp.at(1) == 4);
  CHECK(u.model.plus.at(1, 4) == 3);   // a + a* = (a \ a)* = 0*
  CHECK(u.model.plus.at(4, 1) == 3);
  CHECK(!u.model.plus.defined(4, 5));  // starred elements never sum
  CHECK(u.self_check.pass());
}

TEST_CASE("unitization needs a conformant input") {
  CHECK_THROWS_AS(unitize(*find_fixture("ex-4-3-triple")->gppea), Error);
}

// The doubling rules force the order clauses of the third axiom to compare
// a+b against b+a definedness on mixed pairs, so a model whose sum is
// defined one-sidedly cannot unitize to a conformant structure.
TEST_CASE("unitizing the strict four-element model breaks the order axiom") {
  const GppeaModel& g = *find_fixture("strict-gwppea-4")->gppea;
  CHECK(!plus_definedness_symmetric(g));   // b+a defined, a+b not
  UnitizeResult u = unitize(g);
  CHECK(!u.self_check.pass());
  const Verdict* v = u.self_check.find("WPPEA3");
  REQUIRE(v);
  CHECK(!v->pass);
  CHECK(v->witness == Witness{1, 6});  // the pair (a, b*)
  // every other axiom of the doubled structure still holds
  for (const char* axiom : {"WPPEA1", "WPPEA2", "WPPEA4", "WPPEA5"}) {
    CHECK(u.self_check.find(axiom)->pass);
  }
}

TEST_CASE("unitization self-check tracks sum-definedness symmetry at n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : enumerate_posets_with_bottom(n)) {
      for (const GppeaModel& m : enumerate_gppea(p)) {
        UnitizeResult u = unitize(m);
        CHECK(u.self_check.pass() == plus_definedness_symmetric(m));
        if (u.self_check.pass()) {
          // the doubled order restricted to the base equals the base order
          Poset ord = derived_order(u.model);
          for (int a = 0; a < m.size(); ++a) {
            for (int b = 0; b < m.size(); ++b) {
              CHECK(ord.leq(a, b) == m.rminus.defined(b, a));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("square docposet builds the jump-to-top model") {
  const DocPoset& dp = *find_fixture("square-docposet")->docposet;
  WppeaModel m = wppea_from_docposet(dp);
  CHECK(m.plus.at(1, 2) == 3);
  CHECK(m.plus.at(2, 1) == 3);
  CHECK(!m.plus.defined(1, 1));
  CHECK(m.plus.at(1, 0) == 1);
  CHECK(derived_order(m) == dp.order);
}

TEST_CASE("two-element chain docposet builds the two-element chain") {
  DocPoset dp;
  dp.carrier = make_carrier(2, 0, 1, {"0", "1"});
  Relation r = Relation::identity(2);
  r.set(0, 1, true);
  dp.order = Poset::unchecked(r);
  dp.lcompl = UnaryMap{2, {1, 0}};
  dp.rcompl = UnaryMap{2, {1, 0}};
  WppeaModel m = wppea_from_docposet(dp);
  CHECK(m == *find_fixture("two-chain-wppea")->wppea);
  DocPoset back = docposet_reduct(m);
  CHECK(back.order == dp.order);
  CHECK(back.lcompl == dp.lcompl);
}

TEST_CASE("building from a docposet then taking the reduct is the identity "
          "up to n = 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const Poset& p : enumerate_bounded_posets(n)) {
      for (const DocPoset& dp : enumerate_docposets(p)) {
        WppeaModel m = wppea_from_docposet(dp);
        DocPoset back = docposet_reduct(m);
        CHECK(back.order == dp.order);
        CHECK(back.lcompl == dp.lcompl);
        CHECK(back.rcompl == dp.rcompl);
      }
    }
  }
}

TEST_CASE("reducts of all enumerated models satisfy the docposet "
          "invariants up to n = 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const Poset& p : enumerate_bounded_posets(n)) {
      for (const WppeaModel& m : enumerate_wppea(p)) {
        CHECK(check_docposet(docposet_reduct(m)).pass());
      }
    }
  }
}

TEST_CASE("broken complement maps are rejected before construction") {
  DocPoset dp = *find_fixture("square-docposet")->docposet;
  dp.rcompl.image[1] = 1;
  CHECK_THROWS_AS(wppea_from_docposet(dp), Error);
}

TEST_CASE("trivial model on an antichain over a bottom") {
  GppeaModel g = trivial_gppea_from_poset(vee_poset());
  CHECK(check_gppea(g).pass());
  CHECK(g.lminus == g.rminus);
  CHECK(g.rminus.at(1, 0) == 1);  // a \ 0 = a
  CHECK(g.rminus.at(1, 1) == 0);
  CHECK(!g.plus.defined(1, 2));
}

TEST_CASE("trivial model on the square keeps its top as a plain element") {
  GppeaModel g =
      trivial_gppea_from_poset(*find_fixture("square-poset")->poset);
  CHECK(check_gppea(g).pass());
  CHECK(!g.carrier.unit.has_value());
  CHECK(g.lminus.at(3, 1) == 0);
  CHECK(!g.plus.defined(1, 2));
}

TEST_CASE("trivial model on one element") {
  Relation r = Relation::identity(1);
  GppeaModel g = trivial_gppea_from_poset(Poset::unchecked(r));
  CHECK(g.size() == 1);
  CHECK(check_gppea(g).pass());
}

TEST_CASE("posets without a least element are rejected") {
  CHECK_THROWS_AS(trivial_gppea_from_poset(
                      validate_poset(Relation::identity(2))),
                  Error);
}

TEST_CASE("restricting the chain gives the expected differences") {
  GppeaModel g =
      restrict_wppea_to_gppea(*find_fixture("two-chain-wppea")->wppea);
  CHECK(check_gppea(g).pass());
  CHECK(g.rminus.at(1, 1) == 0);
  CHECK(g.rminus.at(1, 0) == 1);
  CHECK(g.lminus.at(1, 1) == 0);
}

TEST_CASE("restriction succeeds on every enumerated model up to n = 5 and "
          "its output is conformant") {
  for (int n = 2; n <= 5; ++n) {
    for (const Poset& p : enumerate_bounded_posets(n)) {
      for (const WppeaModel& m : enumerate_wppea(p)) {
        GppeaModel g = restrict_wppea_to_gppea(m);
        CHECK(check_gppea(g).pass());
        CHECK(g.plus == m.plus);
      }
    }
  }
}

TEST_CASE("restriction requires a conformant input") {
  WppeaModel m = *find_fixture("two-chain-wppea")->wppea;
  m.plus.set(1, 1, 1);
  CHECK_THROWS_AS(restrict_wppea_to_gppea(m), Error);
}
