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

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "prepea/canonical.hpp"
#include "prepea/checks.hpp"
#include "prepea/construct.hpp"
#include "prepea/enumerate.hpp"
#include "prepea/fixtures.hpp"

using namespace prepea;

namespace {

// Independent oracle: all partial orders on k labeled elements by brute
// force over every reflexive relation, then unlabeled classes by pairwise
// isomorphism over all k! permutations.
int unlabeled_poset_count(int k) {
  std::vector<Relation> labeled;
  const int off = k * (k - 1);
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a != b) cells.emplace_back(a, b);
    }
  }
  for (long long mask = 0; mask < (1LL << off); ++mask) {
    Relation r = Relation::identity(k);
    for (int t = 0; t < off; ++t) {
      if (mask & (1LL << t)) r.set(cells[t].first, cells[t].second, true);
    }
    if (!find_order_violation(r)) labeled.push_back(std::move(r));
  }
  auto iso = [&](const Relation& x, const Relation& y) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool match = true;
      for (int a = 0; a < k && match; ++a) {
        for (int b = 0; b < k; ++b) {
          if (x.at(a, b) != y.at(p[a], p[b])) {
            match = false;
            break;
          }
        }
      }
      if (match) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  };
  std::vector<Relation> classes;
  for (const Relation& r : labeled) {
    bool fresh = true;
    for (const Relation& c : classes) {
      if (iso(r, c)) {
        fresh = false;
        break;
      }
    }
    if (fresh) classes.push_back(r);
  }
  return static_cast<int>(classes.size());
}

std::set<std::string> wppea_encodings(int n) {
  std::set<std::string> out;
  for (const Poset& p : enumerate_bounded_posets(n)) {
    for (const WppeaModel& m : enumerate_wppea(p)) {
      out.insert(canonical_form(m).encoding);
    }
  }
  return out;
}

// Generate-and-filter reference enumeration at n = 4, organized as a DFS
// whose only rejections are conclusively violated axiom instances: all
// bijection pairs for the supplements, all partial orders as the sum
// definedness pattern, all cell values. No derived law is consulted; the
// final filter is check_wppea itself.
std::set<std::string> naive_wppea4_encodings() {
  const int n = 4;
  const int zero = 0;
  const int unit = 3;

  // every partial order on four labeled elements
  std::vector<Relation> orders;
  {
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) cells.emplace_back(a, b);
      }
    }
    for (int mask = 0; mask < (1 << 12); ++mask) {
      Relation r = Relation::identity(n);
      for (int t = 0; t < 12; ++t) {
        if (mask & (1 << t)) r.set(cells[t].first, cells[t].second, true);
      }
      if (!find_order_violation(r)) orders.push_back(std::move(r));
    }
  }

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::set<std::string> found;
  for (const auto& f : perms) {    // candidate a -> a^R
    std::vector<int> finv(n);
    for (int a = 0; a < n; ++a) finv[f[a]] = a;
    for (const auto& g : perms) {  // candidate a -> a^L
      for (const Relation& rel : orders) {
        // definedness of a+b is rel(a, finv(b)); the second order clause
        // must induce the same relation
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
          for (int b = 0; b < n; ++b) {
            if (rel.at(a, b) != rel.at(g[b], finv[a])) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        for (int a = 0; a < n && ok; ++a) {
          ok = rel.at(g[a], finv[a]);                      // a^L + a defined
          if (ok && rel.at(unit, finv[a]) && a != zero) ok = false;
          if (ok && rel.at(a, finv[unit]) && a != zero) ok = false;
          if (ok && !(rel.at(zero, a) || rel.at(a, zero))) ok = false;
          if (ok && !(rel.at(unit, a) || rel.at(a, unit))) ok = false;
        }
        if (!ok) continue;

        Relation domain(n);
        std::vector<std::pair<int, int>> cells;
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            if (rel.at(a, finv[b])) {
              domain.set(a, b, true);
              cells.emplace_back(a, b);
            }
          }
        }
        PartialBinTable table(n);
        auto consistent = [&](int upto) {
          auto known = [&](int a, int b) {
            for (int c = 0; c <= upto; ++c) {
              if (cells[c].first == a && cells[c].second == b) return true;
            }
            return false;
          };
          // axiom instances decided by the cells assigned so far
          for (int a = 0; a < n; ++a) {
            if (known(a, f[a]) && table.at(a, f[a]) != unit) return false;
            if (known(g[a], a) && table.at(g[a], a) != unit) return false;
          }
          for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
              for (int z = 0; z < n; ++z) {
                int lhs = -1, lv = -1;
                if (!domain.at(x, y)) {
                  lhs = 0;
                } else if (known(x, y)) {
                  const int xy = table.at(x, y);
                  if (!domain.at(xy, z)) {
                    lhs = 0;
                  } else if (known(xy, z)) {
                    lhs = 1;
                    lv = table.at(xy, z);
                  }
                }
                int rhs = -1, rv = -1;
                if (!domain.at(y, z)) {
                  rhs = 0;
                } else if (known(y, z)) {
                  const int yz = table.at(y, z);
                  if (!domain.at(x, yz)) {
                    rhs = 0;
                  } else if (known(x, yz)) {
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
        };
        auto dfs = [&](auto&& self, std::size_t k) -> void {
          if (k == cells.size()) {
            WppeaModel m;
            m.carrier = make_carrier(n, zero, unit);
            m.plus = table;
            m.lsupp = UnaryMap{n, g};
            m.rsupp = UnaryMap{n, f};
            if (check_wppea(m).pass()) {
              found.insert(canonical_form(m).encoding);
            }
            return;
          }
          for (int v = 0; v < n; ++v) {
            table.set(cells[k].first, cells[k].second, v);
            if (consistent(static_cast<int>(k))) self(self, k + 1);
          }
          table.set(cells[k].first, cells[k].second, kUndefined);
        };
        dfs(dfs, 0);
      }
    }
  }
  return found;
}

}  // namespace

TEST_CASE("bounded poset counts at small sizes") {
  CHECK(enumerate_bounded_posets(2).size() == 1);
  CHECK(enumerate_bounded_posets(3).size() == 1);
  CHECK(enumerate_bounded_posets(4).size() == 2);
  CHECK(enumerate_bounded_posets(5).size() == 5);
  CHECK(enumerate_bounded_posets(6).size() == 16);
}

TEST_CASE("bounded posets match the unlabeled middle-poset oracle") {
  CHECK(static_cast<int>(enumerate_bounded_posets(5).size()) ==
        unlabeled_poset_count(3));
  CHECK(static_cast<int>(enumerate_bounded_posets(6).size()) ==
        unlabeled_poset_count(4));
}

TEST_CASE("posets with a bottom match the lifted-poset oracle") {
  CHECK(enumerate_posets_with_bottom(1).size() == 1);
  CHECK(static_cast<int>(enumerate_posets_with_bottom(3).size()) ==
        unlabeled_poset_count(2));
  CHECK(enumerate_posets_with_bottom(3).size() == 2);
  CHECK(static_cast<int>(enumerate_posets_with_bottom(4).size()) ==
        unlabeled_poset_count(3));
  CHECK(enumerate_posets_with_bottom(4).size() == 5);
}

TEST_CASE("every bounded poset comes out bounded and canonical") {
  for (const Poset& p : enumerate_bounded_posets(5)) {
    CHECK(p.bottom() == std::optional<int>(0));
    CHECK(p.top() == std::optional<int>(4));
  }
}

TEST_CASE("the two-element chain admits exactly one model") {
  auto posets = enumerate_bounded_posets(2);
  REQUIRE(posets.size() == 1);
  auto models = enumerate_wppea(posets[0]);
  REQUIRE(models.size() == 1);
  CHECK(isomorphic(models[0], *find_fixture("two-chain-wppea")->wppea));
}

TEST_CASE("model counts per size are stable") {
  CHECK(wppea_encodings(3).size() == 1);
  CHECK(wppea_encodings(4).size() == 4);
  CHECK(wppea_encodings(5).size() == 8);
}

TEST_CASE("exactly eight of the sixteen six-element orders admit a model") {
  int admissible = 0;
  for (const Poset& p : enumerate_bounded_posets(6)) {
    if (!enumerate_wppea(p).empty()) ++admissible;
  }
  CHECK(admissible == 8);
}

TEST_CASE("every enumerated model passes the checkers and equals its own "
          "canonical form") {
  for (int n = 2; n <= 5; ++n) {
    for (const Poset& p : enumerate_bounded_posets(n)) {
      auto models = enumerate_wppea(p);
      std::set<std::string> enc;
      for (const WppeaModel& m : models) {
        CHECK(check_wppea(m).pass());
        CHECK(verify_derived_props(m).pass());
        Poset ord = derived_order(m);
        CHECK(ord.bottom() == std::optional<int>(m.zero()));
        CHECK(ord.top() == std::optional<int>(m.unit()));
        CanonicalForm cf = canonical_form(m);
        CHECK(relabel(m, cf.perm) == m);
        enc.insert(cf.encoding);
      }
      CHECK(enc.size() == models.size());
    }
  }
}

TEST_CASE("pruned search equals naive generate-and-filter at n = 4") {
  CHECK(wppea_encodings(4) == naive_wppea4_encodings());
}

TEST_CASE("generalized model counts are stable") {
  auto count = [](int n) {
    std::size_t total = 0;
    for (const Poset& p : enumerate_posets_with_bottom(n)) {
      total += enumerate_gppea(p).size();
    }
    return total;
  };
  CHECK(count(1) == 1);
  CHECK(count(2) == 1);
  CHECK(count(3) == 3);
  CHECK(count(4) == 18);
}

TEST_CASE("the square order's models include the trivial and the strict "
          "fixtures") {
  const Poset& square = *find_fixture("square-poset")->poset;
  std::set<std::string> enc;
  for (const GppeaModel& m : enumerate_gppea(square)) {
    CHECK(check_gppea(m).pass());
    enc.insert(canonical_form(m).encoding);
  }
  CHECK(enc.count(
      canonical_form(*find_fixture("strict-gwppea-4")->gppea).encoding));
  GppeaModel trivial = trivial_gppea_from_poset(square);
  CHECK(enc.count(canonical_form(trivial).encoding));
}

TEST_CASE("reference models are rediscovered on their own orders") {
  for (const char* name : {"ex-6-1", "ex-6-2", "ex-6-3-rip-not-rdp"}) {
    CAPTURE(name);
    const GppeaModel& fix = *find_fixture(name)->gppea;
    Relation rel(fix.size());
    for (int a = 0; a < fix.size(); ++a) {
      for (int b = 0; b < fix.size(); ++b) {
        rel.set(a, b, fix.rminus.defined(b, a));
      }
    }
    const std::string target = canonical_form(fix).encoding;
    bool present = false;
    for (const GppeaModel& m : enumerate_gppea(validate_poset(rel))) {
      if (canonical_form(m).encoding == target) present = true;
    }
    CHECK(present);
  }
}

TEST_CASE("both minus routes enumerate the same models") {
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : enumerate_posets_with_bottom(n)) {
      auto left = enumerate_gppea(p);
      auto right = enumerate_gppea_via_rminus(p);
      std::set<std::string> a, b;
      for (const auto& m : left) a.insert(canonical_form(m).encoding);
      for (const auto& m : right) b.insert(canonical_form(m).encoding);
      CHECK(a == b);
    }
  }
}

TEST_CASE("constructed docposet models are rediscovered by the search") {
  for (int n = 2; n <= 5; ++n) {
    for (const Poset& p : enumerate_bounded_posets(n)) {
      std::set<std::string> enc;
      for (const WppeaModel& m : enumerate_wppea(p)) {
        enc.insert(canonical_form(m).encoding);
      }
      for (const DocPoset& dp : enumerate_docposets(p)) {
        WppeaModel m = wppea_from_docposet(dp);
        CHECK(enc.count(canonical_form(m).encoding) == 1);
      }
    }
  }
}

TEST_CASE("distinct summand relations first appear at n = 6") {
  for (int n = 2; n <= 5; ++n) {
    for (const Poset& p : enumerate_bounded_posets(n)) {
      for (const WppeaModel& m : enumerate_wppea(p)) {
        CHECK(sq_orders(m).equal);
      }
    }
  }
  int witnesses = 0;
  for (const Poset& p : enumerate_bounded_posets(6)) {
    for (const WppeaModel& m : enumerate_wppea(p)) {
      SqOrders sq = sq_orders(m);
      if (!sq.equal) {
        ++witnesses;
        CHECK(!check_pea(m.plus).pass());
        CHECK(!sq.left_violation);
        CHECK(!sq.right_violation);
      }
    }
  }
  CHECK(witnesses == 1);
}

TEST_CASE("output is identical across worker counts") {
  auto run = [] {
    std::string out;
    for (const Poset& p : enumerate_posets_with_bottom(4)) {
      out += detail::encode(p);
      for (const GppeaModel& m : enumerate_gppea(p)) {
        out += detail::encode(m);
      }
    }
    return out;
  };
  setenv("PREPEA_WORKERS", "1", 1);
  const std::string serial = run();
  setenv("PREPEA_WORKERS", "5", 1);
  const std::string parallel = run();
  unsetenv("PREPEA_WORKERS");
  CHECK(serial == parallel);
}

TEST_CASE("count summary pins the regression values") {
  CountSummary s4 = count_summary(4);
  CHECK(s4.posets == 2);
  CHECK(s4.admissible == 2);
  for (const auto& row : s4.rows) CHECK(row.wppea_models == 2);

  CountSummary s5 = count_summary(5);
  CHECK(s5.posets == 5);
  CHECK(s5.admissible == 3);
  std::multiset<int> per_order;
  for (const auto& row : s5.rows) per_order.insert(row.wppea_models);
  CHECK(per_order == std::multiset<int>{0, 0, 2, 3, 3});
}

TEST_CASE("size limits are enforced") {
  CHECK_THROWS_AS(enumerate_bounded_posets(9), Error);
  CHECK_THROWS_AS(enumerate_posets_with_bottom(8), Error);
  CHECK_THROWS_AS(enumerate_wppea(validate_poset(Relation::identity(8))),
                  Error);
}
