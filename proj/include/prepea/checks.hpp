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

#ifndef PREPEA_CHECKS_HPP_
#define PREPEA_CHECKS_HPP_

#include <optional>
#include <string_view>

#include "prepea/core.hpp"

namespace prepea {

// The order relation of a WPPEA candidate: a <= b iff a + b^R is defined,
// which must agree with "b^L + a is defined" and be a partial order.
struct OrderDerivation {
  enum class Status { Ok, DefinednessDisagree, NotPartialOrder };

  Status status = Status::Ok;
  Relation relation;   // a + b^R definedness, always filled
  Poset order;         // valid iff status == Ok
  Witness witness;     // offending pair / order violation tuple
  std::string detail;
};

OrderDerivation derive_order(const WppeaModel& m);

// Throwing wrapper: Error("TwoDefinitionsDisagree") / Error("NotPartialOrder").
Poset derived_order(const WppeaModel& m);

// Summand relations: a [=_R b iff a = b + c for some c; a [=_L b iff
// a = d + b for some d.
struct SqOrders {
  Relation left;
  Relation right;
  std::optional<OrderViolation> left_violation;
  std::optional<OrderViolation> right_violation;
  bool equal = false;
};

SqOrders sq_orders(const WppeaModel& m);

// Verdict rows: WPPEA1..WPPEA5 plus the WPPEA1' reformulation (partial monoid
// with neutral zero). Given WPPEA2-4, the WPPEA1' verdict must equal
// WPPEA1 && WPPEA5; a mismatch means a checker bug and throws.
CheckReport check_wppea(const WppeaModel& m);

// Exchange condition on a partial sum: a+b defined implies a+b = e+a = b+f
// for some e, f. Applies to the sum of either model kind.
CheckReport check_pea(const PartialBinTable& plus);

CheckReport check_commutative(const PartialBinTable& plus);

// Rows: left-cancellative, right-cancellative.
CheckReport check_cancellative(const PartialBinTable& plus);

// Verdict rows: GPPEA1, GPPEA2-definedness (the two minus tables induce the
// same relation), GPPEA2-order, GPPEA3, GPPEA4. The residuation axioms are
// checked as full biconditionals plus the displayed equalities whenever both
// sides are defined.
CheckReport check_gppea(const GppeaModel& m);

// DocPoset invariants: both complements antitone, mutually inverse, and
// swapping the bounds.
CheckReport check_docposet(const DocPoset& dp);

// Universally quantified scans of the derived laws. Requires the base axioms
// to hold; throws Error("AxiomPreconditionFailed") otherwise. This is a
// consistency oracle for the checkers themselves: conformant models must
// pass every row.
CheckReport verify_derived_props(const WppeaModel& m);
CheckReport verify_derived_props(const GppeaModel& m);

namespace recheck {

// Re-evaluates one axiom at one witness tuple in isolation; used to validate
// that every failed verdict's witness re-fails.
bool wppea_axiom_at(const WppeaModel& m, std::string_view axiom,
                    const Witness& w);
bool gppea_axiom_at(const GppeaModel& m, std::string_view axiom,
                    const Witness& w);

}  // namespace recheck

}  // namespace prepea

#endif  // PREPEA_CHECKS_HPP_
