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

#include "prepea/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prepea {

std::string Carrier::label(int e) const {
  if (e >= 0 && e < static_cast<int>(labels.size()) && !labels[e].empty()) {
    return labels[e];
  }
  return std::to_string(e);
}

Carrier make_carrier(int size, int zero, std::optional<int> unit,
                     std::vector<std::string> labels) {
  if (size <= 0) {
    throw Error("InvalidCarrier", {}, "carrier size must be positive");
  }
  if (zero < 0 || zero >= size) {
    throw Error("InvalidCarrier", {zero}, "zero element out of range");
  }
  if (unit) {
    if (*unit < 0 || *unit >= size) {
      throw Error("InvalidCarrier", {*unit}, "unit element out of range");
    }
    if (*unit == zero && size > 1) {
      throw Error("InvalidCarrier", {zero}, "unit equals zero");
    }
  }
  return Carrier{size, zero, unit, std::move(labels)};
}

PartialBinTable PartialBinTable::from_rows(
    const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  PartialBinTable t(n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n) {
      throw Error("InvalidModel", {a}, "table row has wrong length");
    }
    for (int b = 0; b < n; ++b) t.set(a, b, rows[a][b]);
  }
  return t;
}

bool PartialBinTable::values_in_range() const {
  for (int v : cells_) {
    if (v != kUndefined && (v < 0 || v >= n_)) return false;
  }
  return true;
}

UnaryMap UnaryMap::from_image(std::vector<int> image) {
  UnaryMap m{static_cast<int>(image.size()), std::move(image)};
  if (!m.values_in_range()) {
    throw Error("InvalidModel", {}, "unary map value out of range");
  }
  return m;
}

bool UnaryMap::values_in_range() const {
  for (int v : image) {
    if (v < 0 || v >= size) return false;
  }
  return true;
}

bool UnaryMap::is_bijection() const {
  std::vector<char> seen(size, 0);
  for (int v : image) {
    if (v < 0 || v >= size || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

UnaryMap UnaryMap::inverse() const {
  UnaryMap inv{size, std::vector<int>(size, 0)};
  for (int a = 0; a < size; ++a) inv.image[image[a]] = a;
  return inv;
}

Relation Relation::identity(int n) {
  Relation r(n);
  for (int a = 0; a < n; ++a) r.set(a, a, true);
  return r;
}

std::string OrderViolation::code() const {
  switch (kind) {
    case Kind::NotReflexive: return "NotReflexive";
    case Kind::NotAntisymmetric: return "NotAntisymmetric";
    case Kind::NotTransitive: return "NotTransitive";
  }
  return "?";
}

std::optional<OrderViolation> find_order_violation(const Relation& r) {
  const int n = r.size();
  for (int a = 0; a < n; ++a) {
    if (!r.at(a, a)) {
      return OrderViolation{OrderViolation::Kind::NotReflexive, {a}};
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && r.at(a, b) && r.at(b, a)) {
        return OrderViolation{OrderViolation::Kind::NotAntisymmetric, {a, b}};
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!r.at(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (r.at(b, c) && !r.at(a, c)) {
          return OrderViolation{OrderViolation::Kind::NotTransitive, {a, b, c}};
        }
      }
    }
  }
  return std::nullopt;
}

Poset validate_poset(const Relation& leq) {
  if (auto v = find_order_violation(leq)) {
    throw Error(v->code(), v->witness,
                "relation is not a partial order: " + v->code() + " at " +
                    format_witness(v->witness));
  }
  return Poset::unchecked(leq);
}

std::vector<int> Poset::up_set(int a) const {
  std::vector<int> out;
  for (int b = 0; b < size(); ++b) {
    if (leq(a, b)) out.push_back(b);
  }
  return out;
}

std::vector<int> Poset::down_set(int a) const {
  std::vector<int> out;
  for (int b = 0; b < size(); ++b) {
    if (leq(b, a)) out.push_back(b);
  }
  return out;
}

std::vector<int> Poset::maximal_in(std::span<const int> subset) const {
  std::vector<int> out;
  for (int a : subset) {
    bool maximal = true;
    for (int b : subset) {
      if (b != a && lt(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<int> Poset::minimal_in(std::span<const int> subset) const {
  std::vector<int> out;
  for (int a : subset) {
    bool minimal = true;
    for (int b : subset) {
      if (b != a && lt(b, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::optional<int> Poset::maximum_of(std::span<const int> subset) const {
  if (subset.empty()) return std::nullopt;
  auto maxima = maximal_in(subset);
  if (maxima.size() != 1) return std::nullopt;
  return maxima.front();
}

std::optional<int> Poset::minimum_of(std::span<const int> subset) const {
  if (subset.empty()) return std::nullopt;
  auto minima = minimal_in(subset);
  if (minima.size() != 1) return std::nullopt;
  return minima.front();
}

std::optional<int> Poset::glb_of(std::span<const int> subset) const {
  if (subset.empty()) return std::nullopt;
  std::vector<int> lower;
  for (int x = 0; x < size(); ++x) {
    bool ok = true;
    for (int s : subset) {
      if (!leq(x, s)) {
        ok = false;
        break;
      }
    }
    if (ok) lower.push_back(x);
  }
  return maximum_of(lower);
}

std::optional<int> Poset::lub_of(std::span<const int> subset) const {
  if (subset.empty()) return std::nullopt;
  std::vector<int> upper;
  for (int x = 0; x < size(); ++x) {
    bool ok = true;
    for (int s : subset) {
      if (!leq(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) upper.push_back(x);
  }
  return minimum_of(upper);
}

std::optional<int> Poset::bottom() const {
  for (int a = 0; a < size(); ++a) {
    bool least = true;
    for (int b = 0; b < size(); ++b) {
      if (!leq(a, b)) {
        least = false;
        break;
      }
    }
    if (least) return a;
  }
  return std::nullopt;
}

std::optional<int> Poset::top() const {
  for (int a = 0; a < size(); ++a) {
    bool greatest = true;
    for (int b = 0; b < size(); ++b) {
      if (!leq(b, a)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return a;
  }
  return std::nullopt;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("InvalidModel", {}, what);
}

}  // namespace

void validate_fields(const WppeaModel& m) {
  require(m.carrier.size > 0, "empty carrier");
  require(m.carrier.unit.has_value(), "wppea carrier needs a unit");
  require(m.plus.size() == m.size(), "plus table size mismatch");
  require(m.lsupp.size == m.size() && m.rsupp.size == m.size(),
          "supplement map size mismatch");
  require(m.plus.values_in_range(), "plus cell out of range");
  require(m.lsupp.values_in_range() && m.rsupp.values_in_range(),
          "supplement value out of range");
}

void validate_fields(const GppeaModel& m) {
  require(m.carrier.size > 0, "empty carrier");
  require(m.plus.size() == m.size(), "plus table size mismatch");
  require(m.rminus.size() == m.size() && m.lminus.size() == m.size(),
          "minus table size mismatch");
  require(m.plus.values_in_range() && m.rminus.values_in_range() &&
              m.lminus.values_in_range(),
          "cell out of range");
}

void validate_fields(const DocPoset& dp) {
  require(dp.carrier.size > 0, "empty carrier");
  require(dp.carrier.unit.has_value(), "docposet carrier needs a unit");
  require(dp.order.size() == dp.size(), "order size mismatch");
  require(dp.lcompl.size == dp.size() && dp.rcompl.size == dp.size(),
          "complement map size mismatch");
  require(dp.lcompl.values_in_range() && dp.rcompl.values_in_range(),
          "complement value out of range");
}

bool CheckReport::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.pass; });
}

const Verdict* CheckReport::find(std::string_view axiom) const {
  for (const auto& v : verdicts) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& v : verdicts) {
    os << (v.pass ? "pass" : "FAIL") << "  " << v.axiom;
    if (!v.pass && !v.witness.empty()) {
      os << "  witness " << format_witness(v.witness);
    }
    if (!v.note.empty()) os << "  (" << v.note << ")";
    os << '\n';
  }
  return os.str();
}

std::string format_witness(const Witness& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

std::string format_witness(const Witness& w, const Carrier& carrier) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    if (w[i] >= 0 && w[i] < carrier.size) {
      os << carrier.label(w[i]);
    } else {
      os << w[i];
    }
  }
  os << ')';
  return os.str();
}

}  // namespace prepea
