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

#include <random>

#include "prepea/checks.hpp"
#include "prepea/construct.hpp"
#include "prepea/fixtures.hpp"

using namespace prepea;

namespace {

const WppeaModel& two_chain() {
  return *find_fixture("two-chain-wppea")->wppea;
}

WppeaModel square_model() {
  return wppea_from_docposet(*find_fixture("square-docposet")->docposet);
}

// All failed verdicts must re-fail when their axiom is evaluated at the
// witness tuple alone.
void check_witnesses_refail(const WppeaModel& m, const CheckReport& r) {
  for (const Verdict& v : r.verdicts) {
    if (!v.pass) CHECK(recheck::wppea_axiom_at(m, v.axiom, v.witness));
  }
}

void check_witnesses_refail(const GppeaModel& m, const CheckReport& r) {
  for (const Verdict& v : r.verdicts) {
    if (!v.pass) CHECK(recheck::gppea_axiom_at(m, v.axiom, v.witness));
  }
}

}  // namespace

TEST_CASE("two-element chain passes every axiom") {
  CheckReport r = check_wppea(two_chain());
  CHECK(r.pass());
  CHECK(r.find("WPPEA1'") != nullptr);
}

TEST_CASE("unit absorbing itself breaks the fourth axiom with witness (1)") {
  WppeaModel m = two_chain();
  m.plus.set(1, 1, 1);
  CheckReport r = check_wppea(m);
  const Verdict* v = r.find("WPPEA4");
  REQUIRE(v != nullptr);
  CHECK(!v->pass);
  CHECK(v->witness == Witness{1});
  check_witnesses_refail(m, r);
}

TEST_CASE("square docposet model passes and recovers the square order") {
  WppeaModel m = square_model();
  CHECK(check_wppea(m).pass());
  CHECK(derived_order(m) == *find_fixture("square-poset")->poset);
  CHECK(m.plus.at(1, 2) == 3);
  CHECK(!m.plus.defined(1, 1));
}

TEST_CASE("derived order of the chain is the standard one") {
  Poset p = derived_order(two_chain());
  CHECK(p.leq(0, 1));
  CHECK(!p.leq(1, 0));
}

TEST_CASE("editing one supplement makes the two order clauses disagree") {
  WppeaModel m = square_model();
  m.rsupp.image[1] = 1;  // a^R = a instead of b
  OrderDerivation od = derive_order(m);
  CHECK(od.status == OrderDerivation::Status::DefinednessDisagree);
  // confirm by direct scan at the reported pair
  const auto [a, b] = std::pair(od.witness[0], od.witness[1]);
  CHECK(m.plus.defined(a, m.rsupp.at(b)) !=
        m.plus.defined(m.lsupp.at(b), a));
  CHECK_THROWS_AS(derived_order(m), Error);
}

TEST_CASE("summand relations coincide on commutative models") {
  SqOrders sq = sq_orders(two_chain());
  CHECK(sq.equal);
  CHECK(!sq.left_violation);
  CHECK(!sq.right_violation);
}

TEST_CASE("exchange condition holds on the chain and the square model") {
  CHECK(check_pea(two_chain().plus).pass());
  CHECK(check_pea(square_model().plus).pass());
}

TEST_CASE("commutativity and cancellativity on the chain") {
  CHECK(check_commutative(two_chain().plus).pass());
  CheckReport r = check_cancellative(two_chain().plus);
  CHECK(r.pass());
  CHECK(r.find("left-cancellative") != nullptr);
  CHECK(r.find("right-cancellative") != nullptr);
}

TEST_CASE("square model is commutative hence passes the exchange condition") {
  WppeaModel m = square_model();
  CHECK(check_commutative(m.plus).pass());
  CHECK(check_pea(m.plus).pass());
}

TEST_CASE("candidate triple fails the right residuation law at (a,a,a)") {
  const GppeaModel& g = *find_fixture("ex-4-3-triple")->gppea;
  CheckReport r = check_gppea(g);
  CHECK(r.find("GPPEA1")->pass);
  CHECK(r.find("GPPEA2-definedness")->pass);
  CHECK(r.find("GPPEA2-order")->pass);
  const Verdict* v3 = r.find("GPPEA3");
  REQUIRE(v3);
  CHECK(!v3->pass);
  CHECK(v3->witness == Witness{1, 1, 1});
  check_witnesses_refail(g, r);
}

TEST_CASE("reference generalized models pass their axioms") {
  for (const char* name : {"strict-gwppea-4", "ex-6-1", "ex-6-2",
                           "ex-6-3-rip-not-rdp", "ex-6-4-lmodrip",
                           "ex-6-5-rmodrip"}) {
    CAPTURE(name);
    CHECK(check_gppea(*find_fixture(name)->gppea).pass());
  }
}

TEST_CASE("mismatched minus definedness gets its own verdict") {
  GppeaModel g = *find_fixture("ex-6-1")->gppea;
  g.lminus.clear(3, 1);
  CheckReport r = check_gppea(g);
  const Verdict* v = r.find("GPPEA2-definedness");
  REQUIRE(v);
  CHECK(!v->pass);
  CHECK(v->witness == Witness{1, 3});
  check_witnesses_refail(g, r);
}

TEST_CASE("chain supplements swap the bounds") {
  CheckReport r = verify_derived_props(two_chain());
  CHECK(r.pass());
  CHECK(r.find("unit-supplements")->pass);
  CHECK(r.find("zero-supplements")->pass);
}

TEST_CASE("derived-property scan refuses non-conformant models") {
  WppeaModel m = two_chain();
  m.plus.set(1, 1, 1);
  CHECK_THROWS_AS(verify_derived_props(m), Error);
  GppeaModel g = *find_fixture("ex-4-3-triple")->gppea;
  CHECK_THROWS_AS(verify_derived_props(g), Error);
}

TEST_CASE("derived-property scan passes on the reference models") {
  CHECK(verify_derived_props(square_model()).pass());
  for (const char* name : {"strict-gwppea-4", "ex-6-1", "ex-6-2",
                           "ex-6-3-rip-not-rdp", "ex-6-4-lmodrip"}) {
    CAPTURE(name);
    CHECK(verify_derived_props(*find_fixture(name)->gppea).pass());
  }
}

TEST_CASE("checker reports are idempotent") {
  const GppeaModel& g = *find_fixture("ex-4-3-triple")->gppea;
  CHECK(check_gppea(g).summary() == check_gppea(g).summary());
  WppeaModel m = two_chain();
  m.plus.set(1, 1, 1);
  CHECK(check_wppea(m).summary() == check_wppea(m).summary());
}

TEST_CASE("docposet invariants catch a broken complement") {
  DocPoset dp = *find_fixture("square-docposet")->docposet;
  CHECK(check_docposet(dp).pass());
  dp.lcompl.image[1] = 1;
  CHECK(!check_docposet(dp).pass());
}

// Exhaustive candidate sweep at n = 2: the monoid-style reformulation
// (associativity + neutral zero) together with axioms 2-4 accepts exactly
// the models accepted by the five-axiom form, conformant or not.
TEST_CASE("the two axiomatizations agree on every two-element candidate") {
  const int n = 2;
  std::vector<int> cell_values{kUndefined, 0, 1};
  for (int mask = 0; mask < 81; ++mask) {
    PartialBinTable plus(n);
    int rest = mask;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        plus.set(a, b, cell_values[rest % 3]);
        rest /= 3;
      }
    }
    for (int lmask = 0; lmask < 4; ++lmask) {
      for (int rmask = 0; rmask < 4; ++rmask) {
        WppeaModel m;
        m.carrier = make_carrier(2, 0, 1);
        m.plus = plus;
        m.lsupp = UnaryMap{2, {lmask & 1, (lmask >> 1) & 1}};
        m.rsupp = UnaryMap{2, {rmask & 1, (rmask >> 1) & 1}};
        CheckReport r = check_wppea(m);  // throws on internal inconsistency
        const bool alt = r.find("WPPEA1'")->pass && r.find("WPPEA2")->pass &&
                         r.find("WPPEA3")->pass && r.find("WPPEA4")->pass;
        const bool orig = r.find("WPPEA1")->pass && r.find("WPPEA2")->pass &&
                          r.find("WPPEA3")->pass && r.find("WPPEA4")->pass &&
                          r.find("WPPEA5")->pass;
        CHECK(alt == orig);
        // conformance forces bijective supplements
        if (r.pass()) {
          CHECK(m.lsupp.is_bijection());
          CHECK(m.rsupp.is_bijection());
        }
        check_witnesses_refail(m, r);
      }
    }
  }
}

TEST_CASE("the two axiomatizations agree on random larger candidates") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    WppeaModel m;
    m.carrier = make_carrier(n, 0, n - 1);
    m.plus = PartialBinTable(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (rng() % 2) m.plus.set(a, b, static_cast<int>(rng() % n));
      }
    }
    std::vector<int> li(n), ri(n);
    for (int a = 0; a < n; ++a) {
      li[a] = static_cast<int>(rng() % n);
      ri[a] = static_cast<int>(rng() % n);
    }
    m.lsupp = UnaryMap{n, li};
    m.rsupp = UnaryMap{n, ri};
    CheckReport r = check_wppea(m);
    const bool alt = r.find("WPPEA1'")->pass && r.find("WPPEA2")->pass &&
                     r.find("WPPEA3")->pass && r.find("WPPEA4")->pass;
    const bool orig = r.find("WPPEA1")->pass && r.find("WPPEA2")->pass &&
                      r.find("WPPEA3")->pass && r.find("WPPEA4")->pass &&
                      r.find("WPPEA5")->pass;
    CHECK(alt == orig);
    check_witnesses_refail(m, r);
  }
}

TEST_CASE("random generalized candidates carry valid witnesses") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    GppeaModel g;
    g.carrier = make_carrier(n, 0);
    for (PartialBinTable* t : {&g.plus, &g.rminus, &g.lminus}) {
      *t = PartialBinTable(n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (rng() % 2) t->set(a, b, static_cast<int>(rng() % n));
        }
      }
    }
    check_witnesses_refail(g, check_gppea(g));
  }
}
