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

#include "prepea/derive.hpp"

#include <sstream>

#include "prepea/checks.hpp"

namespace prepea {

std::string DerivationFailure::describe(const Carrier& carrier) const {
  std::ostringstream os;
  os << (reason == Reason::NoSupremum ? "no supremum" : "no infimum")
     << " for " << table << " at (" << carrier.label(a) << ","
     << carrier.label(b) << "): tied elements {";
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (i) os << ",";
    os << carrier.label(candidates[i]);
  }
  os << "}";
  return os.str();
}

MinusDerivation minus_from_plus(const PartialBinTable& plus,
                                const Poset& order) {
  const int n = plus.size();
  if (order.size() != n) {
    throw Error("InvalidModel", {}, "order size mismatch");
  }
  if (!plus.values_in_range()) {
    throw Error("InvalidModel", {}, "sum cell out of range");
  }
  MinusDerivation out;
  out.rminus = PartialBinTable(n);
  out.lminus = PartialBinTable(n);
  const auto zero = order.bottom();

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!order.leq(b, a)) continue;
      std::vector<int> right_set;  // z with z + b <= a
      std::vector<int> left_set;   // z with b + z <= a
      for (int z = 0; z < n; ++z) {
        if (plus.defined(z, b) && order.leq(plus.at(z, b), a)) {
          right_set.push_back(z);
        }
        if (plus.defined(b, z) && order.leq(plus.at(b, z), a)) {
          left_set.push_back(z);
        }
      }
      // Diagonal cells restate a \ a = 0 = a / a rather than taking the
      // extremum; on conformant inputs the set is {0} anyway, and on
      // candidates like a + a = a this keeps the residuation failure visible
      // to the checker instead of burying it in the derived table.
      if (a == b && zero) {
        if (!right_set.empty()) out.rminus.set(a, a, *zero);
        if (!left_set.empty()) out.lminus.set(a, a, *zero);
        continue;
      }
      if (!right_set.empty()) {
        if (auto top = order.maximum_of(right_set)) {
          out.rminus.set(a, b, *top);
        } else {
          out.failures.push_back({a, b, DerivationFailure::Reason::NoSupremum,
                                  '\\', order.maximal_in(right_set)});
        }
      }
      if (!left_set.empty()) {
        if (auto top = order.maximum_of(left_set)) {
          out.lminus.set(a, b, *top);
        } else {
          out.failures.push_back({a, b, DerivationFailure::Reason::NoSupremum,
                                  '/', order.maximal_in(left_set)});
        }
      }
    }
  }
  return out;
}

namespace {

PlusDerivation plus_from_minus(const PartialBinTable& minus, bool left) {
  const int n = minus.size();
  if (!minus.values_in_range()) {
    throw Error("InvalidModel", {}, "minus cell out of range");
  }
  Relation rel(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rel.set(a, b, minus.defined(b, a));
    }
  }
  if (auto v = find_order_violation(rel)) {
    throw Error("OrderInvalid", v->witness,
                "minus definedness is not a partial order: " + v->code() +
                    " at " + format_witness(v->witness));
  }
  PlusDerivation out;
  out.order = Poset::unchecked(rel);
  out.plus = PartialBinTable(n);

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // right minus: P_{a,b} = { z : a <= z \ b }
      // left minus: P^l_{a,b} = { z : b <= z / a }
      std::vector<int> set;
      for (int z = 0; z < n; ++z) {
        if (left) {
          if (minus.defined(z, a) && out.order.leq(b, minus.at(z, a))) {
            set.push_back(z);
          }
        } else {
          if (minus.defined(z, b) && out.order.leq(a, minus.at(z, b))) {
            set.push_back(z);
          }
        }
      }
      if (set.empty()) continue;  // a + b undefined
      if (auto inf = out.order.glb_of(set)) {
        out.plus.set(a, b, *inf);
      } else {
        out.failures.push_back({a, b, DerivationFailure::Reason::NoInfimum,
                                '+', out.order.minimal_in(set)});
      }
    }
  }
  return out;
}

GppeaDerivation derive_gppea(const PartialBinTable& input, bool left) {
  GppeaDerivation out;
  PlusDerivation pd = plus_from_minus(input, left);
  if (!pd.ok()) {
    out.stage = "plus";
    out.failures = pd.failures;
    out.detail = "sum derivation failed";
    return out;
  }
  out.plus_stage = pd;
  const auto zero = pd.order.bottom();
  if (!zero) {
    out.stage = "order";
    out.detail = "induced order has no bottom element";
    return out;
  }
  MinusDerivation md = minus_from_plus(pd.plus, pd.order);
  if (!md.ok()) {
    out.stage = "minus";
    out.failures = md.failures;
    out.detail = "minus derivation failed";
    return out;
  }
  out.assembled = true;
  out.model.carrier = make_carrier(input.size(), *zero);
  out.model.plus = pd.plus;
  out.model.rminus = left ? md.rminus : input;
  out.model.lminus = left ? input : md.lminus;
  out.report = check_gppea(out.model);
  return out;
}

}  // namespace

PlusDerivation plus_from_rminus(const PartialBinTable& rminus) {
  return plus_from_minus(rminus, /*left=*/false);
}

PlusDerivation plus_from_lminus(const PartialBinTable& lminus) {
  return plus_from_minus(lminus, /*left=*/true);
}

GppeaDerivation derive_gppea_from_lminus(const PartialBinTable& lminus) {
  return derive_gppea(lminus, /*left=*/true);
}

GppeaDerivation derive_gppea_from_rminus(const PartialBinTable& rminus) {
  return derive_gppea(rminus, /*left=*/false);
}

ExplicitMinus explicit_minus(const WppeaModel& m) {
  CheckReport base = check_wppea(m);
  if (!base.pass()) {
    throw Error("PreconditionFailed", {},
                "explicit minus needs a conformant model:\n" + base.summary());
  }
  const Poset ord = derived_order(m);
  const int n = m.size();
  ExplicitMinus out;
  out.rminus = PartialBinTable(n);
  out.lminus = PartialBinTable(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!ord.leq(b, a)) continue;
      const int la = m.lsupp.at(a);
      if (!m.plus.defined(la, b)) {
        throw Error("FormulaUndefined", {a, b},
                    "a^L + b undefined at " + format_witness({a, b}));
      }
      out.lminus.set(a, b, m.rsupp.at(m.plus.at(la, b)));
      const int ra = m.rsupp.at(a);
      if (!m.plus.defined(b, ra)) {
        throw Error("FormulaUndefined", {a, b},
                    "b + a^R undefined at " + format_witness({a, b}));
      }
      out.rminus.set(a, b, m.lsupp.at(m.plus.at(b, ra)));
    }
  }
  return out;
}

}  // namespace prepea
