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

#ifndef PREPEA_CANONICAL_HPP_
#define PREPEA_CANONICAL_HPP_

#include <span>
#include <string>
#include <vector>

#include "prepea/core.hpp"

namespace prepea {

// Brute-force canonicalization; all admissible permutations are tried.
inline constexpr int kMaxCanonicalSize = 8;

// perm maps old indices to new indices; the encoding is the lexicographically
// minimal serialization over all admissible relabelings. Two values are
// isomorphic iff their encodings are equal.
struct CanonicalForm {
  std::vector<int> perm;
  std::string encoding;
};

// Admissible permutations: any (posets), or those sending zero to index 0 and
// unit to index n-1 (models). Throws Error("SizeLimitExceeded") above
// kMaxCanonicalSize.
CanonicalForm canonical_form(const Poset& p);
CanonicalForm canonical_form(const WppeaModel& m);
CanonicalForm canonical_form(const GppeaModel& m);

Poset relabel(const Poset& p, std::span<const int> perm);
WppeaModel relabel(const WppeaModel& m, std::span<const int> perm);
GppeaModel relabel(const GppeaModel& m, std::span<const int> perm);
DocPoset relabel(const DocPoset& dp, std::span<const int> perm);

template <typename T>
T canonicalize(const T& value) {
  return relabel(value, canonical_form(value).perm);
}

template <typename T>
bool isomorphic(const T& a, const T& b) {
  if (a == b) return true;
  return canonical_form(a).encoding == canonical_form(b).encoding;
}

namespace detail {

// Minimal encoding over permutations that fix the listed indices pointwise.
// Valid as an isomorphism key only when every isomorphism between the
// compared values fixes those indices (e.g. unique bottom/top stored at the
// same positions); the enumerators rely on this for cheap deduplication.
CanonicalForm canonical_with_fixed_points(const Poset& p,
                                          std::span<const int> fixed);
std::string encoding_with_fixed_points(const Poset& p,
                                       std::span<const int> fixed);

std::string encode(const Poset& p);
std::string encode(const WppeaModel& m);
std::string encode(const GppeaModel& m);

}  // namespace detail

}  // namespace prepea

#endif  // PREPEA_CANONICAL_HPP_
