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

#include "prepea/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "prepea/canonical.hpp"
#include "prepea/checks.hpp"
#include "prepea/construct.hpp"
#include "prepea/derive.hpp"
#include "prepea/parallel.hpp"

namespace prepea {
namespace {

void check_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw Error("SizeLimitExceeded", {n},
                std::string(what) + " supports " + std::to_string(lo) +
                    " <= n <= " + std::to_string(hi));
  }
}

// Strict transitive relations on k elements compatible with the index order
// (i related j only for i < j). Every poset admits a linear extension, so up
// to relabeling this generates them all.
std::vector<Relation> middle_posets(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  }
  const int p = static_cast<int>(pairs.size());
  std::vector<Relation> out;
  for (long long mask = 0; mask < (1LL << p); ++mask) {
    Relation r(k);
    for (int t = 0; t < p; ++t) {
      if (mask & (1LL << t)) r.set(pairs[t].first, pairs[t].second, true);
    }
    bool transitive = true;
    for (int i = 0; i < k && transitive; ++i) {
      for (int j = i + 1; j < k && transitive; ++j) {
        if (!r.at(i, j)) continue;
        for (int l = j + 1; l < k; ++l) {
          if (r.at(j, l) && !r.at(i, l)) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Poset> lift_and_dedupe(int n, bool with_top,
                                   const std::vector<Relation>& middles) {
  const int k = n - 1 - (with_top ? 1 : 0);
  std::vector<int> fixed{0};
  if (with_top) fixed.push_back(n - 1);

  std::vector<std::pair<std::string, Poset>> keyed(middles.size());
  parallel_for(middles.size(), [&](std::size_t idx) {
    const Relation& mid = middles[idx];
    Relation leq = Relation::identity(n);
    for (int b = 0; b < n; ++b) leq.set(0, b, true);
    if (with_top) {
      for (int a = 0; a < n; ++a) leq.set(a, n - 1, true);
    }
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (mid.at(i, j)) leq.set(i + 1, j + 1, true);
      }
    }
    Poset p = Poset::unchecked(std::move(leq));
    CanonicalForm cf = detail::canonical_with_fixed_points(p, fixed);
    keyed[idx] = {std::move(cf.encoding), relabel(p, cf.perm)};
  });

  std::map<std::string, Poset> dedup;
  for (auto& [enc, poset] : keyed) dedup.emplace(std::move(enc), poset);
  std::vector<Poset> out;
  out.reserve(dedup.size());
  for (auto& [enc, poset] : dedup) out.push_back(poset);
  return out;
}

std::vector<UnaryMap> antitone_bijections(const Poset& p) {
  const int n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<UnaryMap> out;
  do {
    bool antitone = true;
    for (int a = 0; a < n && antitone; ++a) {
      for (int b = 0; b < n; ++b) {
        if (p.leq(a, b) != p.leq(perm[b], perm[a])) {
          antitone = false;
          break;
        }
      }
    }
    if (antitone) out.push_back(UnaryMap{n, perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct WppeaSearch {
  const Poset& order;
  int zero;
  int unit;
  PartialBinTable table;          // kUndefined outside the domain
  Relation domain;                // definedness pattern, fixed up front
  std::vector<char> assigned;     // per cell
  std::vector<std::pair<int, int>> free_cells;
  const UnaryMap* lsupp = nullptr;
  const UnaryMap* rsupp = nullptr;
  std::vector<WppeaModel> found;

  explicit WppeaSearch(const Poset& p) : order(p) {}

  bool value_known(int a, int b) const {
    return assigned[static_cast<std::size_t>(a) * order.size() + b] != 0;
  }

  void mark(int a, int b, bool v) {
    assigned[static_cast<std::size_t>(a) * order.size() + b] = v ? 1 : 0;
  }

  // Strong associativity on the partial assignment: only conclusively
  // determined triples can reject.
  bool assoc_consistent() const {
    const int n = order.size();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          int lhs = -1;  // -1 unknown, 0 undefined, 1 defined
          int lv = kUndefined;
          if (!domain.at(x, y)) {
            lhs = 0;
          } else if (value_known(x, y)) {
            const int xy = table.at(x, y);
            if (!domain.at(xy, z)) {
              lhs = 0;
            } else if (value_known(xy, z)) {
              lhs = 1;
              lv = table.at(xy, z);
            }
          }
          int rhs = -1;
          int rv = kUndefined;
          if (!domain.at(y, z)) {
            rhs = 0;
          } else if (value_known(y, z)) {
            const int yz = table.at(y, z);
            if (!domain.at(x, yz)) {
              rhs = 0;
            } else if (value_known(x, yz)) {
              rhs = 1;
              rv = table.at(x, yz);
            }
          }
          if (lhs >= 0 && rhs >= 0) {
            if (lhs != rhs) return false;
            if (lhs == 1 && lv != rv) return false;
          }
        }
      }
    }
    return true;
  }

  void fill(std::size_t k) {
    if (k == free_cells.size()) {
      WppeaModel m;
      m.carrier = make_carrier(order.size(), zero, unit);
      m.plus = table;
      m.lsupp = *lsupp;
      m.rsupp = *rsupp;
      if (check_wppea(m).pass()) found.push_back(std::move(m));
      return;
    }
    const auto [a, b] = free_cells[k];
    for (int v = 0; v < order.size(); ++v) {
      if (!order.leq(a, v) || !order.leq(b, v)) continue;  // a,b <= a+b
      table.set(a, b, v);
      mark(a, b, true);
      if (assoc_consistent()) fill(k + 1);
      mark(a, b, false);
    }
    table.set(a, b, kUndefined);
  }
};

std::vector<GppeaModel> enumerate_gppea_impl(const Poset& p, bool via_left) {
  check_range(p.size(), 1, 6, "gppea enumeration");
  const auto bottom = p.bottom();
  if (!bottom) throw Error("NoBottom", {}, "poset has no least element");
  const int zero = *bottom;
  const int n = p.size();

  // Candidate minus tables: defined exactly on comparable pairs, zero
  // diagonal, identity zero column, value strictly below the left argument
  // elsewhere.
  std::vector<std::pair<int, int>> cells;
  std::vector<std::vector<int>> choices;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!p.leq(b, a) || a == b || b == zero) continue;
      cells.emplace_back(a, b);
      std::vector<int> vals;
      for (int v = 0; v < n; ++v) {
        if (p.leq(v, a) && v != a) vals.push_back(v);
      }
      choices.push_back(std::move(vals));
    }
  }
  std::size_t total = 1;
  for (const auto& c : choices) total *= c.size();

  PartialBinTable base(n);
  for (int a = 0; a < n; ++a) {
    base.set(a, a, zero);
    if (p.leq(zero, a)) base.set(a, zero, a);
  }

  std::map<std::string, GppeaModel> dedup;
  constexpr std::size_t kChunk = 8192;
  std::vector<std::optional<GppeaModel>> slot(std::min(total, kChunk));
  for (std::size_t start = 0; start < total; start += kChunk) {
    const std::size_t count = std::min(kChunk, total - start);
    parallel_for(count, [&](std::size_t k) {
      const std::size_t idx = start + k;
      PartialBinTable cand = base;
      std::size_t rest = idx;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& vals = choices[c];
        cand.set(cells[c].first, cells[c].second, vals[rest % vals.size()]);
        rest /= vals.size();
      }
      GppeaDerivation d = via_left ? derive_gppea_from_lminus(cand)
                                   : derive_gppea_from_rminus(cand);
      if (d.assembled && d.report.pass()) {
        slot[k] = std::move(d.model);
      } else {
        slot[k].reset();
      }
    });
    for (std::size_t k = 0; k < count; ++k) {
      if (!slot[k]) continue;
      CanonicalForm cf = canonical_form(*slot[k]);
      GppeaModel canon = relabel(*slot[k], cf.perm);
      dedup.emplace(std::move(cf.encoding), std::move(canon));
    }
  }
  std::vector<GppeaModel> out;
  out.reserve(dedup.size());
  for (auto& [enc, m] : dedup) out.push_back(std::move(m));
  return out;
}

}  // namespace

std::vector<Poset> enumerate_bounded_posets(int n) {
  check_range(n, 2, 8, "bounded poset enumeration");
  return lift_and_dedupe(n, /*with_top=*/true, middle_posets(n - 2));
}

std::vector<Poset> enumerate_posets_with_bottom(int n) {
  check_range(n, 1, 7, "poset-with-bottom enumeration");
  return lift_and_dedupe(n, /*with_top=*/false, middle_posets(n - 1));
}

std::vector<DocPoset> enumerate_docposets(const Poset& bounded) {
  const auto bottom = bounded.bottom();
  const auto top = bounded.top();
  if (!bottom || !top) {
    throw Error("NotBounded", {}, "docposets need a bounded order");
  }
  std::vector<DocPoset> out;
  for (const UnaryMap& f : antitone_bijections(bounded)) {
    DocPoset dp;
    dp.carrier = make_carrier(bounded.size(), *bottom, *top);
    dp.order = bounded;
    dp.lcompl = f;
    dp.rcompl = f.inverse();
    out.push_back(std::move(dp));
  }
  return out;
}

std::vector<WppeaModel> enumerate_wppea(const Poset& bounded) {
  check_range(bounded.size(), 2, 7, "wppea enumeration");
  const auto bottom = bounded.bottom();
  const auto top = bounded.top();
  if (!bottom || !top) {
    throw Error("NotBounded", {}, "wppea enumeration needs a bounded order");
  }
  const int n = bounded.size();
  const int zero = *bottom;
  const int unit = *top;

  std::map<std::string, WppeaModel> dedup;
  for (const UnaryMap& rsupp : antitone_bijections(bounded)) {
    const UnaryMap lsupp = rsupp.inverse();

    WppeaSearch search(bounded);
    search.zero = zero;
    search.unit = unit;
    search.lsupp = &lsupp;
    search.rsupp = &rsupp;
    search.table = PartialBinTable(n);
    search.domain = Relation(n);
    search.assigned.assign(static_cast<std::size_t>(n) * n, 0);

    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        search.domain.set(a, b, bounded.leq(a, lsupp.at(b)));
      }
    }
    for (int a = 0; a < n; ++a) {
      // zero sums and a + a^R = 1 are forced in every conformant model
      if (search.domain.at(zero, a)) {
        search.table.set(zero, a, a);
        search.mark(zero, a, true);
      }
      if (search.domain.at(a, zero)) {
        search.table.set(a, zero, a);
        search.mark(a, zero, true);
      }
      if (search.domain.at(a, rsupp.at(a))) {
        search.table.set(a, rsupp.at(a), unit);
        search.mark(a, rsupp.at(a), true);
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (search.domain.at(a, b) && !search.value_known(a, b)) {
          search.free_cells.emplace_back(a, b);
        }
      }
    }
    if (!search.assoc_consistent()) continue;
    search.fill(0);

    for (const WppeaModel& m : search.found) {
      CanonicalForm cf = canonical_form(m);
      dedup.emplace(std::move(cf.encoding), relabel(m, cf.perm));
    }
  }
  std::vector<WppeaModel> out;
  out.reserve(dedup.size());
  for (auto& [enc, m] : dedup) out.push_back(std::move(m));
  return out;
}

std::vector<GppeaModel> enumerate_gppea(const Poset& with_bottom) {
  return enumerate_gppea_impl(with_bottom, /*via_left=*/true);
}

std::vector<GppeaModel> enumerate_gppea_via_rminus(const Poset& with_bottom) {
  return enumerate_gppea_impl(with_bottom, /*via_left=*/false);
}

std::string CountSummary::to_text() const {
  std::ostringstream os;
  os << "n=" << n << ": " << posets << " bounded posets, " << admissible
     << " admissible\n";
  for (const auto& row : rows) {
    os << "  order " << row.order_index << ": " << row.wppea_models
       << " models" << (row.docposet_admissible ? " (docposet)" : "") << "\n";
  }
  return os.str();
}

CountSummary count_summary(int n) {
  CountSummary out;
  out.n = n;
  std::vector<Poset> posets = enumerate_bounded_posets(n);
  out.posets = static_cast<int>(posets.size());
  out.rows.resize(posets.size());
  parallel_for(posets.size(), [&](std::size_t i) {
    CountRow row;
    row.order_index = static_cast<int>(i);
    row.wppea_models = static_cast<int>(enumerate_wppea(posets[i]).size());
    row.docposet_admissible = !enumerate_docposets(posets[i]).empty();
    out.rows[i] = row;
  });
  for (const auto& row : out.rows) {
    if (row.wppea_models > 0) ++out.admissible;
  }
  return out;
}

}  // namespace prepea
