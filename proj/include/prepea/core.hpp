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

#ifndef PREPEA_CORE_HPP_
#define PREPEA_CORE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prepea {

// Cells of a partial operation table that carry no value.
inline constexpr int kUndefined = -1;

// Element tuples attached to failed verdicts and errors.
using Witness = std::vector<int>;

// Hard failures: size limits, violated preconditions, malformed input.
// Ordinary negative outcomes (failed axioms, missing suprema) are data,
// not exceptions.
class Error : public std::runtime_error {
 public:
  Error(std::string code, Witness witness, const std::string& message)
      : std::runtime_error(message),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  Witness witness_;
};

// Finite element set with a designated zero and an optional unit.
// Elements are integer indices; labels are cosmetic only.
struct Carrier {
  int size = 0;
  int zero = 0;
  std::optional<int> unit;
  std::vector<std::string> labels;

  std::string label(int e) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;
};

// Throws Error("InvalidCarrier") on out-of-range zero/unit or unit == zero
// at size > 1.
Carrier make_carrier(int size, int zero, std::optional<int> unit = std::nullopt,
                     std::vector<std::string> labels = {});

// n x n partial binary operation table.
class PartialBinTable {
 public:
  PartialBinTable() = default;
  explicit PartialBinTable(int n)
      : n_(n), cells_(static_cast<std::size_t>(n) * n, kUndefined) {}

  // rows[a][b] is the value of a op b, kUndefined for blank cells.
  static PartialBinTable from_rows(const std::vector<std::vector<int>>& rows);

  int size() const noexcept { return n_; }
  int at(int a, int b) const { return cells_[index(a, b)]; }
  bool defined(int a, int b) const { return at(a, b) != kUndefined; }
  void set(int a, int b, int v) { cells_[index(a, b)] = v; }
  void clear(int a, int b) { set(a, b, kUndefined); }

  // True when every defined cell value lies in [0, n).
  bool values_in_range() const;

  friend bool operator==(const PartialBinTable&,
                         const PartialBinTable&) = default;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }

  int n_ = 0;
  std::vector<int> cells_;
};

// Total unary map on the carrier (houses the orthosupplements).
struct UnaryMap {
  int size = 0;
  std::vector<int> image;

  static UnaryMap from_image(std::vector<int> image);

  int at(int a) const { return image[a]; }
  bool values_in_range() const;
  bool is_bijection() const;
  UnaryMap inverse() const;  // requires is_bijection()

  friend bool operator==(const UnaryMap&, const UnaryMap&) = default;
};

// n x n boolean relation.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n)
      : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}

  static Relation identity(int n);

  int size() const noexcept { return n_; }
  bool at(int a, int b) const { return bits_[index(a, b)] != 0; }
  void set(int a, int b, bool v) { bits_[index(a, b)] = v ? 1 : 0; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }

  int n_ = 0;
  std::vector<unsigned char> bits_;
};

struct OrderViolation {
  enum class Kind { NotReflexive, NotAntisymmetric, NotTransitive };

  Kind kind;
  Witness witness;

  std::string code() const;
};

// Direct triple scan for reflexivity, antisymmetry, transitivity.
std::optional<OrderViolation> find_order_violation(const Relation& r);

// Partial order on a carrier. Constructed through validate_poset (checked)
// or Poset::unchecked for relations already known to be orders.
class Poset {
 public:
  Poset() = default;

  static Poset unchecked(Relation leq) { return Poset(std::move(leq)); }

  int size() const noexcept { return leq_.size(); }
  bool leq(int a, int b) const { return leq_.at(a, b); }
  bool lt(int a, int b) const { return a != b && leq_.at(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  const Relation& relation() const noexcept { return leq_; }

  std::vector<int> up_set(int a) const;
  std::vector<int> down_set(int a) const;

  // Elements of `subset` with no strictly larger/smaller element in `subset`.
  std::vector<int> maximal_in(std::span<const int> subset) const;
  std::vector<int> minimal_in(std::span<const int> subset) const;

  // Maximum/minimum of `subset` when it exists (unique extremal element of a
  // finite subset dominates the rest).
  std::optional<int> maximum_of(std::span<const int> subset) const;
  std::optional<int> minimum_of(std::span<const int> subset) const;

  // Greatest lower / least upper bound taken in the whole poset; may lie
  // outside `subset`. Empty subset has no bound here.
  std::optional<int> glb_of(std::span<const int> subset) const;
  std::optional<int> lub_of(std::span<const int> subset) const;

  std::optional<int> bottom() const;
  std::optional<int> top() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  explicit Poset(Relation leq) : leq_(std::move(leq)) {}

  Relation leq_;
};

// Throws Error with code NotReflexive / NotAntisymmetric / NotTransitive
// carrying the witness pair or triple.
Poset validate_poset(const Relation& leq);

// Candidate for the (A; +, ^L, ^R, 0, 1) signature. Axiom conformance is a
// checker verdict, never a construction precondition.
struct WppeaModel {
  Carrier carrier;        // unit required
  PartialBinTable plus;   // the circled sum
  UnaryMap lsupp;         // a -> a^L
  UnaryMap rsupp;         // a -> a^R

  int size() const noexcept { return carrier.size; }
  int zero() const noexcept { return carrier.zero; }
  int unit() const { return carrier.unit.value(); }

  friend bool operator==(const WppeaModel&, const WppeaModel&) = default;
};

// Candidate for the (A; +, \, /, 0) signature.
struct GppeaModel {
  Carrier carrier;          // no unit required
  PartialBinTable plus;
  PartialBinTable rminus;   // a \ b (right minus)
  PartialBinTable lminus;   // a / b (left minus)

  int size() const noexcept { return carrier.size; }
  int zero() const noexcept { return carrier.zero; }

  friend bool operator==(const GppeaModel&, const GppeaModel&) = default;
};

// Bounded poset with double orthocomplementation.
struct DocPoset {
  Carrier carrier;   // unit required; zero = bottom, unit = top
  Poset order;
  UnaryMap lcompl;   // x -> x^L
  UnaryMap rcompl;   // x -> x^R

  int size() const noexcept { return carrier.size; }
  int zero() const noexcept { return carrier.zero; }
  int unit() const { return carrier.unit.value(); }

  friend bool operator==(const DocPoset&, const DocPoset&) = default;
};

// Throws Error("InvalidModel") when table/map sizes disagree with the
// carrier or cell values fall outside the carrier.
void validate_fields(const WppeaModel& m);
void validate_fields(const GppeaModel& m);
void validate_fields(const DocPoset& dp);

// Per-axiom verdict with a minimal witness tuple on failure.
struct Verdict {
  std::string axiom;
  bool pass = true;
  Witness witness;
  std::string note;
};

struct CheckReport {
  std::vector<Verdict> verdicts;

  bool pass() const;
  const Verdict* find(std::string_view axiom) const;
  std::string summary() const;
};

std::string format_witness(const Witness& w);
std::string format_witness(const Witness& w, const Carrier& carrier);

}  // namespace prepea

#endif  // PREPEA_CORE_HPP_
