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

#include "prepea/checks.hpp"

#include <stdexcept>

namespace prepea {
namespace {

// a <= b iff a + b^R is defined.
Relation wppea_relation(const WppeaModel& m) {
  const int n = m.size();
  Relation rel(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rel.set(a, b, m.plus.defined(a, m.rsupp.at(b)));
    }
  }
  return rel;
}

// a <= b iff b \ a is defined.
Relation gppea_relation(const GppeaModel& m) {
  const int n = m.size();
  Relation rel(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rel.set(a, b, m.rminus.defined(b, a));
    }
  }
  return rel;
}

bool strong_assoc_at(const PartialBinTable& t, int a, int b, int c) {
  const bool lhs = t.defined(a, b) && t.defined(t.at(a, b), c);
  const bool rhs = t.defined(b, c) && t.defined(a, t.at(b, c));
  if (lhs != rhs) return false;
  if (lhs && t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) return false;
  return true;
}

bool wppea2_at(const WppeaModel& m, int a) {
  const int u = m.unit();
  return m.plus.defined(a, m.rsupp.at(a)) &&
         m.plus.at(a, m.rsupp.at(a)) == u &&
         m.plus.defined(m.lsupp.at(a), a) && m.plus.at(m.lsupp.at(a), a) == u;
}

bool wppea3_definedness_at(const WppeaModel& m, int a, int b) {
  return m.plus.defined(a, m.rsupp.at(b)) ==
         m.plus.defined(m.lsupp.at(b), a);
}

bool wppea4_at(const WppeaModel& m, int a) {
  const int u = m.unit();
  if (m.plus.defined(u, a) || m.plus.defined(a, u)) return a == m.zero();
  return true;
}

bool wppea5_at(const WppeaModel& m, const Relation& rel, int a) {
  const int z = m.zero();
  const int u = m.unit();
  return (rel.at(z, a) || rel.at(a, z)) && (rel.at(u, a) || rel.at(a, u));
}

bool zero_neutral_at(const PartialBinTable& t, int zero, int a) {
  return t.defined(a, zero) && t.at(a, zero) == a && t.defined(zero, a) &&
         t.at(zero, a) == a;
}

bool gppea1_at(const GppeaModel& m, int a) {
  return m.rminus.defined(a, a) && m.rminus.at(a, a) == m.zero() &&
         m.lminus.defined(a, a) && m.lminus.at(a, a) == m.zero();
}

bool gppea2_definedness_at(const GppeaModel& m, int a, int b) {
  return m.rminus.defined(b, a) == m.lminus.defined(b, a);
}

// a \ b defined and a \ b >= c, iff c + b defined and a >= c + b; and
// (a \ b) \ c = a \ (c + b) whenever both sides are defined.
bool gppea3_at(const GppeaModel& m, const Relation& leq, int a, int b, int c) {
  const bool lhs = m.rminus.defined(a, b) && leq.at(c, m.rminus.at(a, b));
  const bool rhs =
      m.plus.defined(c, b) && leq.at(m.plus.at(c, b), a);
  if (lhs != rhs) return false;
  const bool lv = m.rminus.defined(a, b) &&
                  m.rminus.defined(m.rminus.at(a, b), c);
  const bool rv =
      m.plus.defined(c, b) && m.rminus.defined(a, m.plus.at(c, b));
  if (lv && rv && m.rminus.at(m.rminus.at(a, b), c) !=
                      m.rminus.at(a, m.plus.at(c, b))) {
    return false;
  }
  return true;
}

bool gppea4_at(const GppeaModel& m, const Relation& leq, int a, int b, int c) {
  const bool lhs = m.lminus.defined(a, b) && leq.at(c, m.lminus.at(a, b));
  const bool rhs =
      m.plus.defined(b, c) && leq.at(m.plus.at(b, c), a);
  if (lhs != rhs) return false;
  const bool lv = m.lminus.defined(a, b) &&
                  m.lminus.defined(m.lminus.at(a, b), c);
  const bool rv =
      m.plus.defined(b, c) && m.lminus.defined(a, m.plus.at(b, c));
  if (lv && rv && m.lminus.at(m.lminus.at(a, b), c) !=
                      m.lminus.at(a, m.plus.at(b, c))) {
    return false;
  }
  return true;
}

// First failing tuple in row-major scan, arities 1..3.
template <typename Pred>
Verdict scan1(const std::string& axiom, int n, Pred&& pred) {
  for (int a = 0; a < n; ++a) {
    if (!pred(a)) return {axiom, false, {a}, ""};
  }
  return {axiom, true, {}, ""};
}

template <typename Pred>
Verdict scan2(const std::string& axiom, int n, Pred&& pred) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!pred(a, b)) return {axiom, false, {a, b}, ""};
    }
  }
  return {axiom, true, {}, ""};
}

template <typename Pred>
Verdict scan3(const std::string& axiom, int n, Pred&& pred) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (!pred(a, b, c)) return {axiom, false, {a, b, c}, ""};
      }
    }
  }
  return {axiom, true, {}, ""};
}

}  // namespace

OrderDerivation derive_order(const WppeaModel& m) {
  validate_fields(m);
  OrderDerivation out;
  out.relation = wppea_relation(m);
  const int n = m.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!wppea3_definedness_at(m, a, b)) {
        out.status = OrderDerivation::Status::DefinednessDisagree;
        out.witness = {a, b};
        out.detail = "a+b^R and b^L+a definedness disagree at " +
                     format_witness(out.witness, m.carrier);
        return out;
      }
    }
  }
  if (auto v = find_order_violation(out.relation)) {
    out.status = OrderDerivation::Status::NotPartialOrder;
    out.witness = v->witness;
    out.detail = v->code() + " at " + format_witness(v->witness, m.carrier);
    return out;
  }
  out.order = Poset::unchecked(out.relation);
  return out;
}

Poset derived_order(const WppeaModel& m) {
  OrderDerivation d = derive_order(m);
  switch (d.status) {
    case OrderDerivation::Status::Ok:
      return d.order;
    case OrderDerivation::Status::DefinednessDisagree:
      throw Error("TwoDefinitionsDisagree", d.witness, d.detail);
    case OrderDerivation::Status::NotPartialOrder:
      throw Error("NotPartialOrder", d.witness, d.detail);
  }
  throw std::logic_error("unreachable");
}

SqOrders sq_orders(const WppeaModel& m) {
  validate_fields(m);
  const int n = m.size();
  SqOrders out;
  out.left = Relation(n);
  out.right = Relation(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool right = false;   // a = b + c for some c
      bool left = false;    // a = d + b for some d
      for (int x = 0; x < n; ++x) {
        if (m.plus.defined(b, x) && m.plus.at(b, x) == a) right = true;
        if (m.plus.defined(x, b) && m.plus.at(x, b) == a) left = true;
      }
      out.right.set(a, b, right);
      out.left.set(a, b, left);
    }
  }
  out.left_violation = find_order_violation(out.left);
  out.right_violation = find_order_violation(out.right);
  out.equal = out.left == out.right;
  return out;
}

CheckReport check_wppea(const WppeaModel& m) {
  validate_fields(m);
  const int n = m.size();
  CheckReport report;

  Verdict v1 = scan3("WPPEA1", n, [&](int a, int b, int c) {
    return strong_assoc_at(m.plus, a, b, c);
  });
  v1.note = v1.pass ? "" : "partial associativity (both-ways definedness)";

  Verdict v2 =
      scan1("WPPEA2", n, [&](int a) { return wppea2_at(m, a); });

  OrderDerivation od = derive_order(m);
  Verdict v3{"WPPEA3", od.status == OrderDerivation::Status::Ok, od.witness,
             od.detail};

  Verdict v4 = scan1("WPPEA4", n, [&](int a) { return wppea4_at(m, a); });

  Verdict v5 = scan1("WPPEA5", n, [&](int a) {
    return wppea5_at(m, od.relation, a);
  });

  // WPPEA1': (A; +, 0) is a partial monoid with neutral element zero.
  Verdict v1p{"WPPEA1'", true, {}, ""};
  for (int a = 0; a < n && v1p.pass; ++a) {
    if (!zero_neutral_at(m.plus, m.zero(), a)) {
      v1p = {"WPPEA1'", false, {a}, "zero is not neutral"};
    }
  }
  if (v1p.pass) {
    Verdict assoc = scan3("WPPEA1'", n, [&](int a, int b, int c) {
      return strong_assoc_at(m.plus, a, b, c);
    });
    if (!assoc.pass) {
      v1p = {"WPPEA1'", false, assoc.witness, "not partially associative"};
    }
  }

  // Equivalence of the two axiomatizations, given WPPEA2-4.
  if (v2.pass && v3.pass && v4.pass &&
      v1p.pass != (v1.pass && v5.pass)) {
    throw std::logic_error(
        "checker inconsistency: WPPEA1' disagrees with WPPEA1 && WPPEA5");
  }

  report.verdicts = {v1, v2, v3, v4, v5, v1p};
  return report;
}

CheckReport check_pea(const PartialBinTable& plus) {
  const int n = plus.size();
  CheckReport report;
  report.verdicts.push_back(scan2("PEA", n, [&](int a, int b) {
    if (!plus.defined(a, b)) return true;
    const int s = plus.at(a, b);
    bool has_e = false;
    bool has_f = false;
    for (int x = 0; x < n; ++x) {
      if (plus.defined(x, a) && plus.at(x, a) == s) has_e = true;
      if (plus.defined(b, x) && plus.at(b, x) == s) has_f = true;
    }
    return has_e && has_f;
  }));
  return report;
}

CheckReport check_commutative(const PartialBinTable& plus) {
  const int n = plus.size();
  CheckReport report;
  report.verdicts.push_back(scan2("commutative", n, [&](int a, int b) {
    if (plus.defined(a, b) != plus.defined(b, a)) return false;
    return !plus.defined(a, b) || plus.at(a, b) == plus.at(b, a);
  }));
  return report;
}

CheckReport check_cancellative(const PartialBinTable& plus) {
  const int n = plus.size();
  CheckReport report;
  report.verdicts.push_back(
      scan3("left-cancellative", n, [&](int a, int b, int c) {
        if (!plus.defined(a, b) || !plus.defined(a, c)) return true;
        return plus.at(a, b) != plus.at(a, c) || b == c;
      }));
  report.verdicts.push_back(
      scan3("right-cancellative", n, [&](int a, int b, int c) {
        if (!plus.defined(b, a) || !plus.defined(c, a)) return true;
        return plus.at(b, a) != plus.at(c, a) || b == c;
      }));
  return report;
}

CheckReport check_gppea(const GppeaModel& m) {
  validate_fields(m);
  const int n = m.size();
  const Relation leq = gppea_relation(m);
  CheckReport report;

  report.verdicts.push_back(
      scan1("GPPEA1", n, [&](int a) { return gppea1_at(m, a); }));

  Verdict vdef = scan2("GPPEA2-definedness", n, [&](int a, int b) {
    return gppea2_definedness_at(m, a, b);
  });
  if (!vdef.pass) vdef.note = "the two minus tables disagree";
  report.verdicts.push_back(vdef);

  Verdict vord{"GPPEA2-order", true, {}, ""};
  if (auto v = find_order_violation(leq)) {
    vord = {"GPPEA2-order", false, v->witness, v->code()};
  }
  report.verdicts.push_back(vord);

  report.verdicts.push_back(scan3("GPPEA3", n, [&](int a, int b, int c) {
    return gppea3_at(m, leq, a, b, c);
  }));
  report.verdicts.push_back(scan3("GPPEA4", n, [&](int a, int b, int c) {
    return gppea4_at(m, leq, a, b, c);
  }));
  return report;
}

CheckReport check_docposet(const DocPoset& dp) {
  validate_fields(dp);
  const int n = dp.size();
  const Poset& p = dp.order;
  CheckReport report;

  report.verdicts.push_back(scan1("bounded", n, [&](int x) {
    return p.leq(dp.zero(), x) && p.leq(x, dp.unit());
  }));
  report.verdicts.push_back(scan1("complements-inverse", n, [&](int x) {
    return dp.rcompl.at(dp.lcompl.at(x)) == x &&
           dp.lcompl.at(dp.rcompl.at(x)) == x;
  }));
  report.verdicts.push_back(scan2("lcompl-antitone", n, [&](int x, int y) {
    return p.leq(x, y) == p.leq(dp.lcompl.at(y), dp.lcompl.at(x));
  }));
  report.verdicts.push_back(scan2("rcompl-antitone", n, [&](int x, int y) {
    return p.leq(x, y) == p.leq(dp.rcompl.at(y), dp.rcompl.at(x));
  }));
  report.verdicts.push_back(scan1("bounds-swap", n, [&](int x) {
    if (x == dp.zero()) {
      return dp.lcompl.at(x) == dp.unit() && dp.rcompl.at(x) == dp.unit();
    }
    if (x == dp.unit()) {
      return dp.lcompl.at(x) == dp.zero() && dp.rcompl.at(x) == dp.zero();
    }
    return true;
  }));
  return report;
}

CheckReport verify_derived_props(const WppeaModel& m) {
  CheckReport base = check_wppea(m);
  if (!base.pass()) {
    throw Error("AxiomPreconditionFailed", {},
                "model fails its base axioms:\n" + base.summary());
  }
  const int n = m.size();
  const int zero = m.zero();
  const int unit = m.unit();
  const Poset ord = derived_order(m);
  const auto& t = m.plus;
  auto L = [&](int a) { return m.lsupp.at(a); };
  auto R = [&](int a) { return m.rsupp.at(a); };

  CheckReport report;
  auto add = [&](Verdict v) { report.verdicts.push_back(std::move(v)); };

  add(scan1("unit-supplements", n, [&](int a) {
    return a != unit || (L(a) == zero && R(a) == zero);
  }));
  add(scan2("supp-injective", n, [&](int a, int b) {
    if (R(a) == R(b) && a != b) return false;
    if (L(a) == L(b) && a != b) return false;
    return true;
  }));
  add(scan1("top-unit", n, [&](int b) { return ord.leq(b, unit); }));
  add(scan1("zero-neutral", n,
            [&](int a) { return zero_neutral_at(t, zero, a); }));
  add(scan1("zero-supplements", n, [&](int a) {
    return a != zero || (L(a) == unit && R(a) == unit);
  }));
  add(scan1("bottom-zero", n, [&](int a) { return ord.leq(zero, a); }));
  add(scan1("supp-triple", n, [&](int a) {
    return L(R(L(a))) == L(a) && R(L(R(a))) == R(a);
  }));
  add(scan1("supp-involution", n,
            [&](int a) { return L(R(a)) == a && R(L(a)) == a; }));
  add(scan2("sum-upper-bound", n, [&](int a, int b) {
    if (!t.defined(a, b)) return true;
    return ord.leq(a, t.at(a, b)) && ord.leq(b, t.at(a, b));
  }));
  add(scan2("right-zero-forced", n, [&](int a, int b) {
    return !(t.defined(a, b) && t.at(a, b) == a) || b == zero;
  }));
  add(scan2("left-zero-forced", n, [&](int a, int b) {
    return !(t.defined(a, b) && t.at(a, b) == b) || a == zero;
  }));
  add(scan2("positivity", n, [&](int a, int b) {
    return !(t.defined(a, b) && t.at(a, b) == zero) ||
           (a == zero && b == zero);
  }));
  add(scan2("supp-antitone", n, [&](int a, int b) {
    const bool ab = ord.leq(a, b);
    return ab == ord.leq(R(b), R(a)) && ab == ord.leq(L(b), L(a));
  }));
  add(scan3("left-monotone", n, [&](int a, int b, int c) {
    if (!(ord.leq(b, c) && t.defined(a, c))) return true;
    return t.defined(a, b) && ord.leq(t.at(a, b), t.at(a, c));
  }));
  add(scan3("right-monotone", n, [&](int a, int b, int c) {
    if (!(ord.leq(b, c) && t.defined(c, a))) return true;
    return t.defined(b, a) && ord.leq(t.at(b, a), t.at(c, a));
  }));
  return report;
}

CheckReport verify_derived_props(const GppeaModel& m) {
  CheckReport base = check_gppea(m);
  if (!base.pass()) {
    throw Error("AxiomPreconditionFailed", {},
                "model fails its base axioms:\n" + base.summary());
  }
  const int n = m.size();
  const int zero = m.zero();
  const Poset ord = Poset::unchecked(gppea_relation(m));
  const auto& t = m.plus;
  const auto& rm = m.rminus;
  const auto& lm = m.lminus;

  CheckReport report;
  auto add = [&](Verdict v) { report.verdicts.push_back(std::move(v)); };

  add(scan1("zero-neutral", n,
            [&](int a) { return zero_neutral_at(t, zero, a); }));
  add(scan1("bottom-zero", n, [&](int a) { return ord.leq(zero, a); }));
  add(scan1("minus-zero", n, [&](int a) {
    return rm.defined(a, zero) && rm.at(a, zero) == a &&
           lm.defined(a, zero) && lm.at(a, zero) == a;
  }));
  add(scan2("sum-upper-bound", n, [&](int a, int b) {
    if (!t.defined(a, b)) return true;
    const int s = t.at(a, b);
    return ord.leq(a, s) && ord.leq(b, s) && rm.defined(s, b) &&
           ord.leq(a, rm.at(s, b)) && lm.defined(s, a) &&
           ord.leq(b, lm.at(s, a));
  }));
  add(scan2("rminus-bounds", n, [&](int a, int b) {
    if (!rm.defined(a, b)) return true;
    const int d = rm.at(a, b);
    return ord.leq(d, a) && lm.defined(a, d) && ord.leq(b, lm.at(a, d)) &&
           t.defined(d, b) && ord.leq(t.at(d, b), a);
  }));
  add(scan2("lminus-bounds", n, [&](int a, int b) {
    if (!lm.defined(a, b)) return true;
    const int d = lm.at(a, b);
    return ord.leq(d, a) && rm.defined(a, d) && ord.leq(b, rm.at(a, d)) &&
           t.defined(b, d) && ord.leq(t.at(b, d), a);
  }));
  add(scan2("zero-forced", n, [&](int a, int b) {
    if (t.defined(a, b) && t.at(a, b) == a && b != zero) return false;
    if (t.defined(a, b) && t.at(a, b) == b && a != zero) return false;
    return true;
  }));
  add(scan2("positivity", n, [&](int a, int b) {
    return !(t.defined(a, b) && t.at(a, b) == zero) ||
           (a == zero && b == zero);
  }));
  add(scan2("minus-fixpoint", n, [&](int a, int b) {
    const bool l_fix = lm.defined(a, b) && lm.at(a, b) == a;
    const bool r_fix = rm.defined(a, b) && rm.at(a, b) == a;
    return l_fix == (b == zero) && r_fix == (b == zero);
  }));
  add(scan3("plus-associative", n, [&](int a, int b, int c) {
    return strong_assoc_at(t, a, b, c);
  }));
  add(scan3("minus-monotone", n, [&](int a, int b, int c) {
    if (!(ord.leq(c, b) && ord.leq(b, a))) return true;
    return rm.defined(a, c) && rm.defined(b, c) &&
           ord.leq(rm.at(b, c), rm.at(a, c)) && lm.defined(a, c) &&
           lm.defined(b, c) && ord.leq(lm.at(b, c), lm.at(a, c));
  }));
  add(scan3("right-add-monotone", n, [&](int a, int b, int c) {
    if (!(ord.leq(b, a) && t.defined(a, c))) return true;
    if (!t.defined(b, c)) return false;
    const int ac = t.at(a, c);
    const int bc = t.at(b, c);
    return ord.leq(bc, ac) && rm.defined(ac, bc) && rm.defined(a, b) &&
           ord.leq(rm.at(a, b), rm.at(ac, bc));
  }));
  add(scan3("left-add-monotone", n, [&](int a, int b, int c) {
    if (!(ord.leq(b, a) && t.defined(c, a))) return true;
    if (!t.defined(c, b)) return false;
    const int ca = t.at(c, a);
    const int cb = t.at(c, b);
    return ord.leq(cb, ca) && lm.defined(ca, cb) && lm.defined(a, b) &&
           ord.leq(lm.at(a, b), lm.at(ca, cb));
  }));
  add(scan3("difference-triangle", n, [&](int a, int b, int c) {
    if (!(ord.leq(c, b) && ord.leq(b, a))) return true;
    if (!t.defined(rm.at(a, b), rm.at(b, c)) ||
        !ord.leq(t.at(rm.at(a, b), rm.at(b, c)), rm.at(a, c))) {
      return false;
    }
    if (!t.defined(lm.at(b, c), lm.at(a, b)) ||
        !ord.leq(t.at(lm.at(b, c), lm.at(a, b)), lm.at(a, c))) {
      return false;
    }
    return true;
  }));
  add(scan3("mixed-minus-exchange", n, [&](int a, int b, int c) {
    const bool lv = rm.defined(a, b) && lm.defined(rm.at(a, b), c);
    const bool rv = lm.defined(a, c) && rm.defined(lm.at(a, c), b);
    if (lv != rv) return false;
    if (lv && lm.at(rm.at(a, b), c) != rm.at(lm.at(a, c), b)) return false;
    return true;
  }));
  return report;
}

namespace recheck {

bool wppea_axiom_at(const WppeaModel& m, std::string_view axiom,
                    const Witness& w) {
  const Relation rel = wppea_relation(m);
  if (axiom == "WPPEA1") {
    return !strong_assoc_at(m.plus, w.at(0), w.at(1), w.at(2));
  }
  if (axiom == "WPPEA2") return !wppea2_at(m, w.at(0));
  if (axiom == "WPPEA3") {
    if (w.size() == 1) return !rel.at(w[0], w[0]);
    if (w.size() == 2) {
      if (!wppea3_definedness_at(m, w[0], w[1])) return true;
      return w[0] != w[1] && rel.at(w[0], w[1]) && rel.at(w[1], w[0]);
    }
    return rel.at(w.at(0), w.at(1)) && rel.at(w.at(1), w.at(2)) &&
           !rel.at(w.at(0), w.at(2));
  }
  if (axiom == "WPPEA4") return !wppea4_at(m, w.at(0));
  if (axiom == "WPPEA5") return !wppea5_at(m, rel, w.at(0));
  if (axiom == "WPPEA1'") {
    if (w.size() == 1) return !zero_neutral_at(m.plus, m.zero(), w[0]);
    return !strong_assoc_at(m.plus, w.at(0), w.at(1), w.at(2));
  }
  throw Error("UnknownAxiom", {}, std::string(axiom));
}

bool gppea_axiom_at(const GppeaModel& m, std::string_view axiom,
                    const Witness& w) {
  const Relation leq = gppea_relation(m);
  if (axiom == "GPPEA1") return !gppea1_at(m, w.at(0));
  if (axiom == "GPPEA2-definedness") {
    return !gppea2_definedness_at(m, w.at(0), w.at(1));
  }
  if (axiom == "GPPEA2-order") {
    if (w.size() == 1) return !leq.at(w[0], w[0]);
    if (w.size() == 2) {
      return w[0] != w[1] && leq.at(w[0], w[1]) && leq.at(w[1], w[0]);
    }
    return leq.at(w.at(0), w.at(1)) && leq.at(w.at(1), w.at(2)) &&
           !leq.at(w.at(0), w.at(2));
  }
  if (axiom == "GPPEA3") {
    return !gppea3_at(m, leq, w.at(0), w.at(1), w.at(2));
  }
  if (axiom == "GPPEA4") {
    return !gppea4_at(m, leq, w.at(0), w.at(1), w.at(2));
  }
  throw Error("UnknownAxiom", {}, std::string(axiom));
}

}  // namespace recheck

}  // namespace prepea
