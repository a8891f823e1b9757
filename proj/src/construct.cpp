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

#include "prepea/construct.hpp"

#include <sstream>

namespace prepea {
namespace {

std::vector<std::string> starred_labels(const Carrier& c) {
  std::vector<std::string> out;
  out.reserve(2 * c.size);
  for (int a = 0; a < c.size; ++a) out.push_back(c.label(a));
  for (int a = 0; a < c.size; ++a) out.push_back(c.label(a) + "*");
  return out;
}

}  // namespace

UnitizeResult unitize(const GppeaModel& g) {
  CheckReport pre = check_gppea(g);
  if (!pre.pass()) {
    throw Error("PreconditionFailed", {},
                "unitize needs a conformant model:\n" + pre.summary());
  }
  const int n = g.size();
  const int N = 2 * n;
  auto leq = [&](int a, int b) { return g.rminus.defined(b, a); };

  WppeaModel m;
  m.carrier = make_carrier(N, g.zero(), g.zero() + n, starred_labels(g.carrier));
  m.plus = PartialBinTable(N);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.plus.defined(a, b)) m.plus.set(a, b, g.plus.at(a, b));
      if (leq(a, b)) {
        m.plus.set(a, b + n, g.rminus.at(b, a) + n);  // a + b* = (b \ a)*
        m.plus.set(b + n, a, g.lminus.at(b, a) + n);  // b* + a = (b / a)*
      }
    }
  }
  m.lsupp = UnaryMap{N, std::vector<int>(N)};
  m.rsupp = UnaryMap{N, std::vector<int>(N)};
  for (int a = 0; a < n; ++a) {
    m.lsupp.image[a] = a + n;
    m.rsupp.image[a] = a + n;
    m.lsupp.image[a + n] = a;
    m.rsupp.image[a + n] = a;
  }
  return UnitizeResult{m, check_wppea(m)};
}

WppeaModel wppea_from_docposet(const DocPoset& dp) {
  CheckReport pre = check_docposet(dp);
  if (!pre.pass()) {
    for (const auto& v : pre.verdicts) {
      if (!v.pass) {
        throw Error("InvalidDocPoset", v.witness,
                    "docposet invariant " + v.axiom + " fails at " +
                        format_witness(v.witness, dp.carrier));
      }
    }
  }
  const int n = dp.size();
  const int zero = dp.zero();
  const int unit = dp.unit();

  WppeaModel m;
  m.carrier = dp.carrier;
  m.plus = PartialBinTable(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!dp.order.leq(x, dp.lcompl.at(y))) continue;
      if (x == zero) {
        m.plus.set(x, y, y);
      } else if (y == zero) {
        m.plus.set(x, y, x);
      } else {
        m.plus.set(x, y, unit);
      }
    }
  }
  m.lsupp = dp.lcompl;
  m.rsupp = dp.rcompl;

  CheckReport self = check_wppea(m);
  if (!self.pass()) {
    throw Error("ConstructionSelfCheck", {},
                "docposet construction failed its own axioms:\n" +
                    self.summary());
  }
  return m;
}

DocPoset docposet_reduct(const WppeaModel& m) {
  CheckReport pre = check_wppea(m);
  if (!pre.pass()) {
    throw Error("PreconditionFailed", {},
                "reduct needs a conformant model:\n" + pre.summary());
  }
  DocPoset dp;
  dp.carrier = m.carrier;
  dp.order = derived_order(m);
  dp.lcompl = m.lsupp;
  dp.rcompl = m.rsupp;
  CheckReport self = check_docposet(dp);
  if (!self.pass()) {
    throw Error("ConstructionSelfCheck", {},
                "reduct failed the docposet invariants:\n" + self.summary());
  }
  return dp;
}

GppeaModel trivial_gppea_from_poset(const Poset& p) {
  const auto bottom = p.bottom();
  if (!bottom) {
    throw Error("NoBottom", {}, "poset has no least element");
  }
  const int n = p.size();
  const int zero = *bottom;

  GppeaModel g;
  g.carrier = make_carrier(n, zero);
  g.plus = PartialBinTable(n);
  g.rminus = PartialBinTable(n);
  g.lminus = PartialBinTable(n);
  for (int x = 0; x < n; ++x) {
    g.plus.set(zero, x, x);
    g.plus.set(x, zero, x);
    for (int y = 0; y < n; ++y) {
      if (!p.leq(y, x)) continue;
      const int v = (y == zero) ? x : zero;
      g.rminus.set(x, y, v);
      g.lminus.set(x, y, v);
    }
  }
  CheckReport self = check_gppea(g);
  if (!self.pass()) {
    throw Error("ConstructionSelfCheck", {},
                "trivial construction failed the axioms:\n" + self.summary());
  }
  return g;
}

GppeaModel restrict_wppea_to_gppea(const WppeaModel& m) {
  CheckReport pre = check_wppea(m);
  if (!pre.pass()) {
    throw Error("PreconditionFailed", {},
                "restriction needs a conformant model:\n" + pre.summary());
  }
  const Poset ord = derived_order(m);
  const int n = m.size();

  GppeaModel g;
  g.carrier = make_carrier(n, m.zero(), std::nullopt, m.carrier.labels);
  g.plus = m.plus;
  g.rminus = PartialBinTable(n);
  g.lminus = PartialBinTable(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!ord.leq(b, a)) continue;
      std::vector<int> left_set;   // k with b + k <= a
      std::vector<int> right_set;  // k with k + b <= a
      for (int k = 0; k < n; ++k) {
        if (m.plus.defined(b, k) && ord.leq(m.plus.at(b, k), a)) {
          left_set.push_back(k);
        }
        if (m.plus.defined(k, b) && ord.leq(m.plus.at(k, b), a)) {
          right_set.push_back(k);
        }
      }
      auto fail = [&](char side, const std::vector<int>& set) -> Error {
        std::ostringstream os;
        os << "no supremum for " << side << " at (" << m.carrier.label(a)
           << "," << m.carrier.label(b) << "): tied elements {";
        auto maxima = ord.maximal_in(set);
        for (std::size_t i = 0; i < maxima.size(); ++i) {
          if (i) os << ",";
          os << m.carrier.label(maxima[i]);
        }
        os << "}";
        return Error("NoSupremum", {a, b}, os.str());
      };
      const auto l = ord.maximum_of(left_set);
      if (!l) throw fail('/', left_set);
      const auto r = ord.maximum_of(right_set);
      if (!r) throw fail('\\', right_set);
      g.lminus.set(a, b, *l);
      g.rminus.set(a, b, *r);
    }
  }
  CheckReport self = check_gppea(g);
  if (!self.pass()) {
    throw Error("ConstructionSelfCheck", {},
                "restriction failed the axioms:\n" + self.summary());
  }
  return g;
}

}  // namespace prepea
