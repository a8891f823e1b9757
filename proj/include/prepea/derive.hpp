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

#ifndef PREPEA_DERIVE_HPP_
#define PREPEA_DERIVE_HPP_

#include <string>
#include <vector>

#include "prepea/checks.hpp"
#include "prepea/core.hpp"

namespace prepea {

// A non-empty candidate set lacking the required extremum. `candidates`
// lists the tied maximal (NoSupremum) or minimal (NoInfimum) elements of the
// defining set.
struct DerivationFailure {
  enum class Reason { NoSupremum, NoInfimum };

  int a = 0;
  int b = 0;
  Reason reason = Reason::NoSupremum;
  char table = '+';               // which table the cell belongs to: \, /, +
  std::vector<int> candidates;

  std::string describe(const Carrier& carrier) const;
};

// Right and left minus from (+, <=). For b <= a,
//   a \ b = max { z : z + b defined, z + b <= a }
//   a / b = max { z : b + z defined, b + z <= a }
// (the value must lie in the set: the residuation law forces a\b + b <= a).
// Diagonal cells are 0 outright; on conformant inputs the sets give the same
// value. Pairs with a not >= b stay undefined; empty sets stay undefined;
// sets without a maximum are failures, ties never broken.
struct MinusDerivation {
  PartialBinTable rminus;
  PartialBinTable lminus;
  std::vector<DerivationFailure> failures;

  bool ok() const { return failures.empty(); }
};

MinusDerivation minus_from_plus(const PartialBinTable& plus,
                                const Poset& order);

// Order and + from one minus table. The order is the definedness pattern
// (a <= b iff b minus a defined); + is the greatest lower bound, taken in
// that order, of P_{a,b} = { z : a <= z \ b } (right) or
// P^l_{a,b} = { z : b <= z / a } (left). Empty set = undefined sum; a set
// whose lower bounds have no greatest element is a failure.
// Throws Error("OrderInvalid") when the definedness pattern is not a
// partial order.
struct PlusDerivation {
  Poset order;
  PartialBinTable plus;
  std::vector<DerivationFailure> failures;

  bool ok() const { return failures.empty(); }
};

PlusDerivation plus_from_rminus(const PartialBinTable& rminus);
PlusDerivation plus_from_lminus(const PartialBinTable& lminus);

// Full pipeline: one minus table -> (order, +) -> both minus tables ->
// assembled candidate + its check report. The input minus table is kept
// verbatim in the assembled model; the opposite minus comes from the
// derivation. Candidates that fail axioms are still returned with their
// report; derivation failures abort assembly with the witnesses.
struct GppeaDerivation {
  bool assembled = false;
  std::string stage;   // "order", "plus", "minus" when not assembled
  std::string detail;
  std::vector<DerivationFailure> failures;
  GppeaModel model;    // valid iff assembled
  CheckReport report;  // check_gppea(model) iff assembled
  std::optional<PlusDerivation> plus_stage;  // set once the sum was derived
};

GppeaDerivation derive_gppea_from_lminus(const PartialBinTable& lminus);
GppeaDerivation derive_gppea_from_rminus(const PartialBinTable& rminus);

// Closed-form minus tables of a conformant WPPEA: for a >= b,
//   a / b = (a^L + b)^R     a \ b = (b + a^R)^L
// Throws Error("PreconditionFailed") when the model fails check_wppea and
// Error("FormulaUndefined") when a required sum is missing despite a >= b.
struct ExplicitMinus {
  PartialBinTable rminus;
  PartialBinTable lminus;
};

ExplicitMinus explicit_minus(const WppeaModel& m);

}  // namespace prepea

#endif  // PREPEA_DERIVE_HPP_
