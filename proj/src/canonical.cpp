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

#include "prepea/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace prepea {
namespace {

void check_size(int n) {
  if (n > kMaxCanonicalSize) {
    throw Error("SizeLimitExceeded", {n},
                "canonical form supports n <= " +
                    std::to_string(kMaxCanonicalSize));
  }
}

std::vector<std::string> relabel_labels(const std::vector<std::string>& labels,
                                        std::span<const int> perm) {
  if (labels.empty()) return {};
  std::vector<std::string> out(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a) {
    out[perm[a]] = labels[a];
  }
  return out;
}

// Visits every permutation of [0,n) that maps the key slots per `pin`
// (pin[i] == -1 means unconstrained). The constrained targets are removed
// from the free pool.
template <typename Fn>
void for_each_permutation(int n, std::span<const int> pin, Fn&& fn) {
  std::vector<int> perm(n, -1);
  std::vector<int> free_targets;
  std::vector<int> free_slots;
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    if (pin[i] >= 0) {
      perm[i] = pin[i];
      used[pin[i]] = 1;
    } else {
      free_slots.push_back(i);
    }
  }
  for (int t = 0; t < n; ++t) {
    if (!used[t]) free_targets.push_back(t);
  }
  std::sort(free_targets.begin(), free_targets.end());
  do {
    for (std::size_t k = 0; k < free_slots.size(); ++k) {
      perm[free_slots[k]] = free_targets[k];
    }
    fn(std::span<const int>(perm));
  } while (std::next_permutation(free_targets.begin(), free_targets.end()));
}

template <typename Value>
CanonicalForm minimize(const Value& value, int n, std::span<const int> pin) {
  CanonicalForm best;
  for_each_permutation(n, pin, [&](std::span<const int> perm) {
    std::string enc = detail::encode(relabel(value, perm));
    if (best.encoding.empty() || enc < best.encoding) {
      best.encoding = std::move(enc);
      best.perm.assign(perm.begin(), perm.end());
    }
  });
  return best;
}

}  // namespace

namespace detail {

std::string encode(const Poset& p) {
  const int n = p.size();
  std::string out;
  out.reserve(2 + static_cast<std::size_t>(n) * n);
  out.push_back('P');
  out.push_back(static_cast<char>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out.push_back(p.leq(a, b) ? '1' : '0');
  }
  return out;
}

namespace {

void append_table(std::string& out, const PartialBinTable& t) {
  const int n = t.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out.push_back(static_cast<char>(t.at(a, b) + 1));  // 0 = undefined
    }
  }
}

void append_map(std::string& out, const UnaryMap& m) {
  for (int a = 0; a < m.size; ++a) out.push_back(static_cast<char>(m.at(a)));
}

}  // namespace

std::string encode(const WppeaModel& m) {
  std::string out;
  out.push_back('W');
  out.push_back(static_cast<char>(m.size()));
  append_table(out, m.plus);
  append_map(out, m.lsupp);
  append_map(out, m.rsupp);
  return out;
}

std::string encode(const GppeaModel& m) {
  std::string out;
  out.push_back('G');
  out.push_back(static_cast<char>(m.size()));
  append_table(out, m.plus);
  append_table(out, m.rminus);
  append_table(out, m.lminus);
  return out;
}

CanonicalForm canonical_with_fixed_points(const Poset& p,
                                          std::span<const int> fixed) {
  check_size(p.size());
  std::vector<int> pin(p.size(), -1);
  for (int i : fixed) pin[i] = i;
  return minimize(p, p.size(), pin);
}

std::string encoding_with_fixed_points(const Poset& p,
                                       std::span<const int> fixed) {
  return canonical_with_fixed_points(p, fixed).encoding;
}

}  // namespace detail

Poset relabel(const Poset& p, std::span<const int> perm) {
  const int n = p.size();
  Relation r(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (p.leq(a, b)) r.set(perm[a], perm[b], true);
    }
  }
  return Poset::unchecked(std::move(r));
}

WppeaModel relabel(const WppeaModel& m, std::span<const int> perm) {
  const int n = m.size();
  WppeaModel out;
  out.carrier = Carrier{n, perm[m.zero()], perm[m.unit()],
                        relabel_labels(m.carrier.labels, perm)};
  out.plus = PartialBinTable(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (m.plus.defined(a, b)) {
        out.plus.set(perm[a], perm[b], perm[m.plus.at(a, b)]);
      }
    }
  }
  out.lsupp = UnaryMap{n, std::vector<int>(n)};
  out.rsupp = UnaryMap{n, std::vector<int>(n)};
  for (int a = 0; a < n; ++a) {
    out.lsupp.image[perm[a]] = perm[m.lsupp.at(a)];
    out.rsupp.image[perm[a]] = perm[m.rsupp.at(a)];
  }
  return out;
}

GppeaModel relabel(const GppeaModel& m, std::span<const int> perm) {
  const int n = m.size();
  GppeaModel out;
  out.carrier = Carrier{n, perm[m.zero()], std::nullopt,
                        relabel_labels(m.carrier.labels, perm)};
  auto move_table = [&](const PartialBinTable& t) {
    PartialBinTable r(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (t.defined(a, b)) r.set(perm[a], perm[b], perm[t.at(a, b)]);
      }
    }
    return r;
  };
  out.plus = move_table(m.plus);
  out.rminus = move_table(m.rminus);
  out.lminus = move_table(m.lminus);
  return out;
}

DocPoset relabel(const DocPoset& dp, std::span<const int> perm) {
  const int n = dp.size();
  DocPoset out;
  out.carrier = Carrier{n, perm[dp.zero()], perm[dp.unit()],
                        relabel_labels(dp.carrier.labels, perm)};
  out.order = relabel(dp.order, perm);
  out.lcompl = UnaryMap{n, std::vector<int>(n)};
  out.rcompl = UnaryMap{n, std::vector<int>(n)};
  for (int a = 0; a < n; ++a) {
    out.lcompl.image[perm[a]] = perm[dp.lcompl.at(a)];
    out.rcompl.image[perm[a]] = perm[dp.rcompl.at(a)];
  }
  return out;
}

CanonicalForm canonical_form(const Poset& p) {
  check_size(p.size());
  std::vector<int> pin(p.size(), -1);
  return minimize(p, p.size(), pin);
}

CanonicalForm canonical_form(const WppeaModel& m) {
  check_size(m.size());
  std::vector<int> pin(m.size(), -1);
  pin[m.zero()] = 0;
  pin[m.unit()] = m.size() - 1;
  return minimize(m, m.size(), pin);
}

CanonicalForm canonical_form(const GppeaModel& m) {
  check_size(m.size());
  std::vector<int> pin(m.size(), -1);
  pin[m.zero()] = 0;
  return minimize(m, m.size(), pin);
}

}  // namespace prepea
