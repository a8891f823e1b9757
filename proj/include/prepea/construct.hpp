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

#ifndef PREPEA_CONSTRUCT_HPP_
#define PREPEA_CONSTRUCT_HPP_

#include "prepea/checks.hpp"
#include "prepea/core.hpp"

namespace prepea {

// Doubling construction on A and its disjoint copy A*: elements 0..n-1 are A,
// n..2n-1 are the starred copy (a* = a + n), zero stays, unit = zero*.
//   a + b* = (b \ a)*  and  b* + a = (b / a)*  when a <= b; a* + b* never.
//   a^L = a^R = a*, (a*)^L = (a*)^R = a.
// The construction follows the rules verbatim and returns the model together
// with its own check_wppea report: inputs whose + definedness is asymmetric
// (a+b defined, b+a not) make the two order clauses of WPPEA3 disagree at
// (a, b*), so the self-check does not always pass.
// Throws Error("PreconditionFailed") when the input fails check_gppea.
struct UnitizeResult {
  WppeaModel model;
  CheckReport self_check;
};

UnitizeResult unitize(const GppeaModel& g);

// x + y defined iff x <= y^L (equivalently y <= x^R); value 1 when both
// nonzero, the other argument otherwise. Result provably passes check_wppea;
// asserted internally. Throws Error("InvalidDocPoset") with the failing
// invariant otherwise.
WppeaModel wppea_from_docposet(const DocPoset& dp);

// (derived order, ^L, ^R) of a conformant model, packaged and validated.
// Throws Error("PreconditionFailed").
DocPoset docposet_reduct(const WppeaModel& m);

// x \ 0 = x / 0 = x, x \ y = x / y = 0 for 0 != y <= x, sums defined only
// with zero. Throws Error("NoBottom") when the poset has no least element.
GppeaModel trivial_gppea_from_poset(const Poset& p);

// Reuses + and the derived order; for a >= b,
//   a / b = max { k : b + k <= a }   a \ b = max { k : k + b <= a }.
// Throws Error("PreconditionFailed") or Error("NoSupremum") (witness (a, b),
// message names the side and the tied elements).
GppeaModel restrict_wppea_to_gppea(const WppeaModel& m);

}  // namespace prepea

#endif  // PREPEA_CONSTRUCT_HPP_
