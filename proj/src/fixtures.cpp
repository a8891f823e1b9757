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

#include "prepea/fixtures.hpp"

namespace prepea {
namespace {

constexpr int U = kUndefined;

using Rows = std::vector<std::vector<int>>;

Poset poset_from_pairs(int n, const std::vector<std::pair<int, int>>& lt) {
  Relation r = Relation::identity(n);
  for (auto [a, b] : lt) r.set(a, b, true);
  return validate_poset(r);
}

// 0 < a,b < 1 with a, b incomparable.
Poset square_poset() {
  return poset_from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  const std::vector<std::string> labels4{"0", "a", "b", "1"};

  {
    Fixture f;
    f.name = "square-poset";
    f.kind = "poset";
    f.description = "four-element bounded order with an incomparable pair";
    f.poset = square_poset();
    f.labels = labels4;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "square-docposet";
    f.kind = "docposet";
    f.description = "square order with a <-> b, 0 <-> 1 complements";
    DocPoset dp;
    dp.carrier = make_carrier(4, 0, 3, labels4);
    dp.order = square_poset();
    dp.lcompl = UnaryMap{4, {3, 2, 1, 0}};
    dp.rcompl = UnaryMap{4, {3, 2, 1, 0}};
    f.docposet = dp;
    f.labels = labels4;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "two-chain-wppea";
    f.kind = "wppea";
    f.description = "the two-element chain";
    WppeaModel m;
    m.carrier = make_carrier(2, 0, 1, {"0", "1"});
    m.plus = PartialBinTable::from_rows({{0, 1}, {1, U}});
    m.lsupp = UnaryMap{2, {1, 0}};
    m.rsupp = UnaryMap{2, {1, 0}};
    f.wppea = m;
    f.labels = {"0", "1"};
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex-4-1-lminus";
    f.kind = "lminus";
    f.description =
        "left-minus candidate on the square order; its derived sum admits no "
        "right minus at (1,a)";
    f.table = PartialBinTable::from_rows(
        {{0, U, U, U}, {1, 0, U, U}, {2, U, 0, U}, {3, 1, 1, 0}});
    f.labels = labels4;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex-4-1-plus";
    f.kind = "plus";
    f.description = "the sum derived from ex-4-1-lminus, with its order";
    f.table = PartialBinTable::from_rows(
        {{0, 1, 2, 3}, {1, 3, U, U}, {2, 3, U, U}, {3, U, U, U}});
    f.table_order = square_poset();
    f.labels = labels4;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex-4-2-lminus";
    f.kind = "lminus";
    f.description =
        "left-minus candidate whose sum derivation hits a set without infimum";
    f.table = PartialBinTable::from_rows({{0, U, U, U, U},
                                          {1, 0, U, U, U},
                                          {2, U, 0, U, U},
                                          {3, 0, 1, 0, U},
                                          {4, 0, 1, U, 0}});
    f.labels = {"0", "a", "b", "c", "d"};
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex-4-3-triple";
    f.kind = "gppea";
    f.description =
        "candidate triple (left minus with computed sum and right minus) that "
        "violates the right residuation law";
    GppeaModel g;
    g.carrier = make_carrier(4, 0, std::nullopt, {"0", "a", "b", "c"});
    g.lminus = PartialBinTable::from_rows(
        {{0, U, U, U}, {1, 0, U, U}, {2, 1, 0, U}, {3, 1, U, 0}});
    g.plus = PartialBinTable::from_rows(
        {{0, 1, 2, 3}, {1, 1, U, U}, {2, U, U, U}, {3, U, U, U}});
    g.rminus = PartialBinTable::from_rows(
        {{0, U, U, U}, {1, 0, U, U}, {2, 1, 0, U}, {3, 1, U, 0}});
    f.gppea = g;
    f.labels = {"0", "a", "b", "c"};
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "strict-gwppea-4";
    f.kind = "gppea";
    f.description =
        "smallest generalized model admitting no unit: b+a = 1 is the only "
        "nonzero sum";
    GppeaModel g;
    g.carrier = make_carrier(4, 0, std::nullopt, labels4);
    g.plus = PartialBinTable::from_rows(
        {{0, 1, 2, 3}, {1, U, U, U}, {2, 3, U, U}, {3, U, U, U}});
    g.lminus = PartialBinTable::from_rows(
        {{0, U, U, U}, {1, 0, U, U}, {2, U, 0, U}, {3, 0, 1, 0}});
    g.rminus = PartialBinTable::from_rows(
        {{0, U, U, U}, {1, 0, U, U}, {2, U, 0, U}, {3, 2, 0, 0}});
    f.gppea = g;
    f.labels = labels4;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex-6-1";
    f.kind = "gppea";
    f.description = "decomposition holds, interpolation fails at 1 <= 2+2";
    GppeaModel g;
    g.carrier = make_carrier(4, 0);
    g.plus = PartialBinTable::from_rows(
        {{0, 1, 2, 3}, {1, U, U, U}, {2, U, 3, U}, {3, U, U, U}});
    g.lminus = PartialBinTable::from_rows(
        {{0, U, U, U}, {1, 0, U, U}, {2, U, 0, U}, {3, 0, 2, 0}});
    g.rminus = g.lminus;
    f.gppea = g;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex-6-2";
    f.kind = "gppea";
    f.description = "linear order; interpolation fails at 2 <= 1+1";
    GppeaModel g;
    g.carrier = make_carrier(4, 0);
    g.plus = PartialBinTable::from_rows(
        {{0, 1, 2, 3}, {1, 3, U, U}, {2, U, U, U}, {3, U, U, U}});
    g.lminus = PartialBinTable::from_rows(
        {{0, U, U, U}, {1, 0, U, U}, {2, 0, 0, U}, {3, 1, 0, 0}});
    g.rminus = g.lminus;
    f.gppea = g;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex-6-3-rip-not-rdp";
    f.kind = "gppea";
    f.description = "interpolation holds, decomposition fails";
    GppeaModel g;
    g.carrier = make_carrier(5, 0);
    g.plus = PartialBinTable::from_rows({{0, 1, 2, 3, 4},
                                         {1, 3, 4, U, U},
                                         {2, 4, 4, U, U},
                                         {3, U, U, U, U},
                                         {4, U, U, U, U}});
    g.lminus = PartialBinTable::from_rows({{0, U, U, U, U},
                                           {1, 0, U, U, U},
                                           {2, 0, 0, U, U},
                                           {3, 1, U, 0, U},
                                           {4, 2, 2, 0, 0}});
    g.rminus = g.lminus;
    f.gppea = g;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex-6-4-lmodrip";
    f.kind = "gppea";
    f.description =
        "seven elements: left modified interpolation holds, the right and "
        "mixed variants fail";
    GppeaModel g;
    g.carrier = make_carrier(7, 0);
    g.plus = PartialBinTable::from_rows({{0, 1, 2, 3, 4, 5, 6},
                                         {1, U, 5, 6, 6, U, U},
                                         {2, U, 4, 4, U, U, U},
                                         {3, U, U, U, U, U, U},
                                         {4, U, U, U, U, U, U},
                                         {5, U, 6, 6, U, U, U},
                                         {6, U, U, U, U, U, U}});
    g.lminus = PartialBinTable::from_rows({{0, U, U, U, U, U, U},
                                           {1, 0, U, U, U, U, U},
                                           {2, U, 0, U, U, U, U},
                                           {3, U, 0, 0, U, U, U},
                                           {4, U, 3, 0, 0, U, U},
                                           {5, 2, 0, U, U, 0, U},
                                           {6, 4, 3, 0, 0, 3, 0}});
    g.rminus = PartialBinTable::from_rows({{0, U, U, U, U, U, U},
                                           {1, 0, U, U, U, U, U},
                                           {2, U, 0, U, U, U, U},
                                           {3, U, 0, 0, U, U, U},
                                           {4, U, 2, 2, 0, U, U},
                                           {5, 0, 1, U, U, 0, U},
                                           {6, 0, 5, 5, 1, 0, 0}});
    f.gppea = g;
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "ex-6-5-rmodrip";
    f.kind = "gppea";
    f.description = "transpose of ex-6-4: the right variant holds instead";
    const GppeaModel& base = *out.back().gppea;
    GppeaModel g;
    g.carrier = base.carrier;
    g.plus = PartialBinTable(7);
    for (int a = 0; a < 7; ++a) {
      for (int b = 0; b < 7; ++b) {
        if (base.plus.defined(b, a)) g.plus.set(a, b, base.plus.at(b, a));
      }
    }
    g.lminus = base.rminus;
    g.rminus = base.lminus;
    f.gppea = g;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

}  // namespace prepea
