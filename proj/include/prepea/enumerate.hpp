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

#ifndef PREPEA_ENUMERATE_HPP_
#define PREPEA_ENUMERATE_HPP_

#include <string>
#include <vector>

#include "prepea/core.hpp"

namespace prepea {

// Every enumerator returns canonically labeled, duplicate-free values in a
// deterministic order (sorted by encoding), independent of the worker count.

// Bounded posets with bottom at index 0 and top at index n-1, up to
// isomorphism. 2 <= n <= 8.
std::vector<Poset> enumerate_bounded_posets(int n);

// Posets with a least element at index 0, up to isomorphism. 1 <= n <= 7.
std::vector<Poset> enumerate_posets_with_bottom(int n);

// All double orthocomplementations of a bounded poset, i.e. its order
// anti-automorphisms paired with their inverses.
std::vector<DocPoset> enumerate_docposets(const Poset& bounded);

// All models whose derived order is the given bounded poset, up to
// isomorphism. Complete: conformant models force the supplements to be
// mutually inverse order anti-isomorphisms and fix the definedness pattern,
// so only table values are searched; every kept model passes check_wppea.
// n <= 7.
std::vector<WppeaModel> enumerate_wppea(const Poset& bounded);

// All models whose order is the given poset with bottom, up to isomorphism.
// Candidates are left-minus tables (definedness = comparability, zero
// diagonal, identity zero column); the rest of the structure is derived,
// and only all-pass models are kept. n <= 6.
std::vector<GppeaModel> enumerate_gppea(const Poset& with_bottom);

// Mirror route through right-minus candidates; same output set on the same
// poset when minus-uniqueness holds. Used by the conjecture scan.
std::vector<GppeaModel> enumerate_gppea_via_rminus(const Poset& with_bottom);

struct CountRow {
  int order_index = 0;
  int wppea_models = 0;
  bool docposet_admissible = false;
};

struct CountSummary {
  int n = 0;
  std::vector<CountRow> rows;   // one per bounded poset
  int posets = 0;
  int admissible = 0;           // orders with at least one model

  std::string to_text() const;
};

CountSummary count_summary(int n);

}  // namespace prepea

#endif  // PREPEA_ENUMERATE_HPP_
