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

#ifndef PREPEA_PROPERTIES_HPP_
#define PREPEA_PROPERTIES_HPP_

#include <string>
#include <vector>

#include "prepea/checks.hpp"
#include "prepea/core.hpp"

namespace prepea {

struct Partition {
  std::vector<std::vector<int>> blocks;  // sorted blocks of sorted elements
  std::vector<int> block_of;

  static Partition from_block_of(std::vector<int> block_of);
  static Partition identity(int n);
  static Partition single_block(int n);

  int size() const { return static_cast<int>(block_of.size()); }
  std::string to_string() const;  // e.g. "0,1|2|3"

  friend bool operator==(const Partition&, const Partition&) = default;
};

// All partitions of {0..n-1} via restricted growth strings; deterministic.
std::vector<Partition> all_partitions(int n);

struct PropertyVerdict {
  std::string property;
  bool holds = true;
  Witness witness;
  std::string detail;
};

// Riesz decomposition: every a1+a2 = b1+b2 admits a 2x2 refinement matrix
// c with row sums a1, a2 and column sums b1, b2. Witness: first uncovered
// (a1,a2,b1,b2) in ascending row-major scan.
PropertyVerdict check_rdp(const GppeaModel& m);

// Interpolation family. Witness (a,b1,b2): first failure scanning a from the
// top element down, then (b1,b2) ascending — the order that localizes the
// failure nearest the top of the model.
PropertyVerdict check_rip(const GppeaModel& m);

enum class ModRipVariant { Left, Right, LeftRight };

// Same quantifier shell as plain interpolation with the exact sum replaced by
// the variant's zero-difference equalities:
//   Left:       (a/a1)/a2 = 0 = a/(a1+a2)
//   Right:      (a\a2)\a1 = 0 = a\(a1+a2)
//   LeftRight:  (a/a1)\a2 = 0          (no sum requirement)
// All partial operations occurring in the equalities must be defined. The
// right-left form is not separate: it coincides with LeftRight by the mixed
// minus exchange law.
PropertyVerdict check_modified_rip(const GppeaModel& m, ModRipVariant v);

// Re-evaluates one interpolation/decomposition instance in isolation.
bool rdp_instance_covered(const GppeaModel& m, int a1, int a2, int b1, int b2);
bool rip_instance_covered(const GppeaModel& m, int a, int b1, int b2);
bool modified_rip_instance_covered(const GppeaModel& m, ModRipVariant v,
                                   int a, int b1, int b2);

// Compatibility of ~ with +, /, \: related arguments with both results
// defined give related results. Witness (op, a1, b1, a2, b2) with op coded
// 0:+, 1:/, 2:\.
PropertyVerdict check_weak_congruence(const GppeaModel& m, const Partition& p);

// Weak congruence plus the three class-level conditions: every element of
// the target class is realized, and definedness extends over whole classes
// on both sides.
PropertyVerdict check_congruence(const GppeaModel& m, const Partition& p);

// All congruences, deterministic order; n <= 6.
std::vector<Partition> enumerate_congruences(const GppeaModel& m);

// Factor structure over the blocks; block-level op defined iff the value set
// is non-empty (single-valuedness follows from weak congruence and is
// asserted). Returned with its own check report, which may legitimately
// fail. Throws Error("PreconditionFailed") if p is not a congruence.
struct QuotientResult {
  GppeaModel model;
  CheckReport report;
  std::vector<int> block_of;  // original element -> quotient element
};

QuotientResult quotient(const GppeaModel& m, const Partition& p);

// Scans over all enumerated models of size <= n:
//   C1 groups models by their left-minus table; any group of size >= 2
//      refutes uniqueness (the scan unions the left- and right-minus driven
//      enumerations so a collision could actually surface).
//   C2: a+b = a+c and b >= c imply b/c = 0.
//   C3: b+a = c+a and b >= c imply b\c = 0.
//   C4: a quotient by some congruence whose induced relation breaks
//       antisymmetry.
// Outcomes are either concrete counterexamples or exhaustion statements.
struct ConjectureScan {
  int n = 0;
  long long models_scanned = 0;

  struct C1Group {
    int size = 0;
    int poset_index = 0;
    std::string lminus_key;
    std::vector<std::string> member_encodings;
  };
  std::vector<C1Group> c1_collisions;

  struct Violation {
    std::string model_encoding;
    Witness witness;
  };
  std::vector<Violation> c2_violations;
  std::vector<Violation> c3_violations;

  struct QuotientHit {
    std::string model_encoding;
    std::string partition;
    Witness witness;
  };
  std::vector<QuotientHit> c4_antisymmetry_breaks;
  long long quotients_scanned = 0;

  std::string to_text() const;
};

ConjectureScan conjecture_scan(int n);

}  // namespace prepea

#endif  // PREPEA_PROPERTIES_HPP_
