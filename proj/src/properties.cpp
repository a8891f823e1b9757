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

#include "prepea/properties.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "prepea/canonical.hpp"
#include "prepea/enumerate.hpp"

namespace prepea {
namespace {

// a <= b iff b \ a is defined (the GPPEA2 relation).
Relation minus_relation(const GppeaModel& m) {
  const int n = m.size();
  Relation rel(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) rel.set(a, b, m.rminus.defined(b, a));
  }
  return rel;
}

const char* op_name(int op) {
  switch (op) {
    case 0: return "+";
    case 1: return "/";
    case 2: return "\\";
  }
  return "?";
}

const PartialBinTable& op_table(const GppeaModel& m, int op) {
  switch (op) {
    case 0: return m.plus;
    case 1: return m.lminus;
    default: return m.rminus;
  }
}

}  // namespace

Partition Partition::from_block_of(std::vector<int> block_of) {
  const int n = static_cast<int>(block_of.size());
  // normalize block ids to first-appearance order
  std::map<int, int> remap;
  for (int a = 0; a < n; ++a) {
    if (!remap.count(block_of[a])) {
      const int id = static_cast<int>(remap.size());
      remap[block_of[a]] = id;
    }
  }
  Partition p;
  p.block_of.resize(n);
  p.blocks.resize(remap.size());
  for (int a = 0; a < n; ++a) {
    p.block_of[a] = remap[block_of[a]];
    p.blocks[p.block_of[a]].push_back(a);
  }
  return p;
}

Partition Partition::identity(int n) {
  std::vector<int> ids(n);
  for (int a = 0; a < n; ++a) ids[a] = a;
  return from_block_of(std::move(ids));
}

Partition Partition::single_block(int n) {
  return from_block_of(std::vector<int>(n, 0));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << '|';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) os << ',';
      os << blocks[b][i];
    }
  }
  return os.str();
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  for (;;) {
    out.push_back(Partition::from_block_of(rgs));
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) {
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
      }
    if (i == 0) break;
  }
  return out;
}

bool rdp_instance_covered(const GppeaModel& m, int a1, int a2, int b1,
                          int b2) {
  const int n = m.size();
  const auto& t = m.plus;
  for (int c11 = 0; c11 < n; ++c11) {
    for (int c12 = 0; c12 < n; ++c12) {
      if (!t.defined(c11, c12) || t.at(c11, c12) != a1) continue;
      for (int c21 = 0; c21 < n; ++c21) {
        if (!t.defined(c11, c21) || t.at(c11, c21) != b1) continue;
        for (int c22 = 0; c22 < n; ++c22) {
          if (t.defined(c21, c22) && t.at(c21, c22) == a2 &&
              t.defined(c12, c22) && t.at(c12, c22) == b2) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

PropertyVerdict check_rdp(const GppeaModel& m) {
  validate_fields(m);
  const int n = m.size();
  const auto& t = m.plus;
  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = 0; a2 < n; ++a2) {
      if (!t.defined(a1, a2)) continue;
      for (int b1 = 0; b1 < n; ++b1) {
        for (int b2 = 0; b2 < n; ++b2) {
          if (!t.defined(b1, b2) || t.at(b1, b2) != t.at(a1, a2)) continue;
          if (!rdp_instance_covered(m, a1, a2, b1, b2)) {
            return {"RDP", false, {a1, a2, b1, b2},
                    "no 2x2 refinement of " + std::to_string(a1) + "+" +
                        std::to_string(a2) + " = " + std::to_string(b1) +
                        "+" + std::to_string(b2)};
          }
        }
      }
    }
  }
  return {"RDP", true, {}, ""};
}

namespace {

bool rip_variant_covered(const GppeaModel& m, const Relation& leq, int variant,
                         int a, int b1, int b2) {
  const int n = m.size();
  const int zero = m.zero();
  for (int a1 = 0; a1 < n; ++a1) {
    if (!leq.at(a1, b1)) continue;
    for (int a2 = 0; a2 < n; ++a2) {
      if (!leq.at(a2, b2)) continue;
      switch (variant) {
        case -1: {  // plain interpolation: a = a1 + a2
          if (m.plus.defined(a1, a2) && m.plus.at(a1, a2) == a) return true;
          break;
        }
        case 0: {  // (a/a1)/a2 = 0 = a/(a1+a2)
          if (!m.plus.defined(a1, a2)) break;
          const int s = m.plus.at(a1, a2);
          if (!m.lminus.defined(a, a1)) break;
          const int d = m.lminus.at(a, a1);
          if (m.lminus.defined(d, a2) && m.lminus.at(d, a2) == zero &&
              m.lminus.defined(a, s) && m.lminus.at(a, s) == zero) {
            return true;
          }
          break;
        }
        case 1: {  // (a\a2)\a1 = 0 = a\(a1+a2)
          if (!m.plus.defined(a1, a2)) break;
          const int s = m.plus.at(a1, a2);
          if (!m.rminus.defined(a, a2)) break;
          const int d = m.rminus.at(a, a2);
          if (m.rminus.defined(d, a1) && m.rminus.at(d, a1) == zero &&
              m.rminus.defined(a, s) && m.rminus.at(a, s) == zero) {
            return true;
          }
          break;
        }
        case 2: {  // (a/a1)\a2 = 0
          if (!m.lminus.defined(a, a1)) break;
          const int d = m.lminus.at(a, a1);
          if (m.rminus.defined(d, a2) && m.rminus.at(d, a2) == zero) {
            return true;
          }
          break;
        }
      }
    }
  }
  return false;
}

PropertyVerdict rip_family(const GppeaModel& m, const std::string& name,
                           int variant) {
  validate_fields(m);
  const int n = m.size();
  const Relation leq = minus_relation(m);
  for (int a = n - 1; a >= 0; --a) {
    for (int b1 = 0; b1 < n; ++b1) {
      for (int b2 = 0; b2 < n; ++b2) {
        if (!m.plus.defined(b1, b2) || !leq.at(a, m.plus.at(b1, b2))) {
          continue;
        }
        if (!rip_variant_covered(m, leq, variant, a, b1, b2)) {
          return {name, false, {a, b1, b2},
                  "no interpolants for " + std::to_string(a) +
                      " <= " + std::to_string(b1) + "+" + std::to_string(b2)};
        }
      }
    }
  }
  return {name, true, {}, ""};
}

}  // namespace

PropertyVerdict check_rip(const GppeaModel& m) {
  return rip_family(m, "RIP", -1);
}

PropertyVerdict check_modified_rip(const GppeaModel& m, ModRipVariant v) {
  switch (v) {
    case ModRipVariant::Left: return rip_family(m, "LmodRIP", 0);
    case ModRipVariant::Right: return rip_family(m, "RmodRIP", 1);
    case ModRipVariant::LeftRight: return rip_family(m, "LRmodRIP", 2);
  }
  throw std::logic_error("unreachable");
}

bool rip_instance_covered(const GppeaModel& m, int a, int b1, int b2) {
  return rip_variant_covered(m, minus_relation(m), -1, a, b1, b2);
}

bool modified_rip_instance_covered(const GppeaModel& m, ModRipVariant v,
                                   int a, int b1, int b2) {
  return rip_variant_covered(m, minus_relation(m), static_cast<int>(v), a, b1,
                             b2);
}

PropertyVerdict check_weak_congruence(const GppeaModel& m,
                                      const Partition& p) {
  validate_fields(m);
  if (p.size() != m.size()) {
    throw Error("InvalidPartition", {}, "partition size mismatch");
  }
  const int n = m.size();
  for (int op = 0; op < 3; ++op) {
    const auto& t = op_table(m, op);
    for (int a1 = 0; a1 < n; ++a1) {
      for (int a2 = 0; a2 < n; ++a2) {
        if (p.block_of[a1] != p.block_of[a2]) continue;
        for (int b1 = 0; b1 < n; ++b1) {
          for (int b2 = 0; b2 < n; ++b2) {
            if (p.block_of[b1] != p.block_of[b2]) continue;
            if (!t.defined(a1, b1) || !t.defined(a2, b2)) continue;
            if (p.block_of[t.at(a1, b1)] != p.block_of[t.at(a2, b2)]) {
              return {"WeakCongruence", false, {op, a1, b1, a2, b2},
                      std::string("op ") + op_name(op)};
            }
          }
        }
      }
    }
  }
  return {"WeakCongruence", true, {}, ""};
}

PropertyVerdict check_congruence(const GppeaModel& m, const Partition& p) {
  PropertyVerdict weak = check_weak_congruence(m, p);
  if (!weak.holds) {
    return {"Congruence", false, weak.witness,
            "not a weak congruence: " + weak.detail};
  }
  const int k = static_cast<int>(p.blocks.size());
  for (int op = 0; op < 3; ++op) {
    const auto& t = op_table(m, op);
    for (int X = 0; X < k; ++X) {
      for (int Y = 0; Y < k; ++Y) {
        // class-level op value set
        int target_block = -1;
        for (int a : p.blocks[X]) {
          for (int b : p.blocks[Y]) {
            if (t.defined(a, b)) target_block = p.block_of[t.at(a, b)];
          }
        }
        if (target_block < 0) continue;  // class-level op undefined

        // every element of the target class is realized
        for (int tp : p.blocks[target_block]) {
          bool realized = false;
          for (int a : p.blocks[X]) {
            for (int b : p.blocks[Y]) {
              if (t.defined(a, b) && t.at(a, b) == tp) {
                realized = true;
                break;
              }
            }
            if (realized) break;
          }
          if (!realized) {
            return {"Congruence", false,
                    {op, p.blocks[X].front(), p.blocks[Y].front(), tp},
                    std::string("class element not realized under ") +
                        op_name(op)};
          }
        }
        // left and right definedness extends over the whole classes
        for (int a : p.blocks[X]) {
          bool any = false;
          for (int b : p.blocks[Y]) {
            if (t.defined(a, b)) {
              any = true;
              break;
            }
          }
          if (!any) {
            return {"Congruence", false,
                    {op, a, p.blocks[Y].front()},
                    std::string("left argument stranded under ") +
                        op_name(op)};
          }
        }
        for (int b : p.blocks[Y]) {
          bool any = false;
          for (int a : p.blocks[X]) {
            if (t.defined(a, b)) {
              any = true;
              break;
            }
          }
          if (!any) {
            return {"Congruence", false,
                    {op, p.blocks[X].front(), b},
                    std::string("right argument stranded under ") +
                        op_name(op)};
          }
        }
      }
    }
  }
  return {"Congruence", true, {}, ""};
}

std::vector<Partition> enumerate_congruences(const GppeaModel& m) {
  if (m.size() > 6) {
    throw Error("SizeLimitExceeded", {m.size()},
                "congruence enumeration supports n <= 6");
  }
  std::vector<Partition> out;
  for (const Partition& p : all_partitions(m.size())) {
    if (check_congruence(m, p).holds) out.push_back(p);
  }
  return out;
}

QuotientResult quotient(const GppeaModel& m, const Partition& p) {
  PropertyVerdict pre = check_congruence(m, p);
  if (!pre.holds) {
    throw Error("PreconditionFailed", pre.witness,
                "partition is not a congruence: " + pre.detail);
  }
  const int k = static_cast<int>(p.blocks.size());
  QuotientResult out;
  out.block_of = p.block_of;
  out.model.carrier = make_carrier(k, p.block_of[m.zero()]);
  out.model.plus = PartialBinTable(k);
  out.model.rminus = PartialBinTable(k);
  out.model.lminus = PartialBinTable(k);
  for (int op = 0; op < 3; ++op) {
    const auto& t = op_table(m, op);
    PartialBinTable& qt = op == 0   ? out.model.plus
                          : op == 1 ? out.model.lminus
                                    : out.model.rminus;
    for (int X = 0; X < k; ++X) {
      for (int Y = 0; Y < k; ++Y) {
        int value = -1;
        for (int a : p.blocks[X]) {
          for (int b : p.blocks[Y]) {
            if (!t.defined(a, b)) continue;
            const int blk = p.block_of[t.at(a, b)];
            if (value < 0) {
              value = blk;
            } else if (value != blk) {
              throw Error("MultiValuedCell", {op, X, Y},
                          "weak congruence failed to keep a class-level "
                          "cell single-valued");
            }
          }
        }
        if (value >= 0) qt.set(X, Y, value);
      }
    }
  }
  out.report = check_gppea(out.model);
  return out;
}

std::string ConjectureScan::to_text() const {
  std::ostringstream os;
  os << "conjecture scan up to n=" << n << " (" << models_scanned
     << " models)\n";
  os << "  minus-uniqueness: "
     << (c1_collisions.empty()
             ? "no counterexample found"
             : std::to_string(c1_collisions.size()) + " collisions")
     << "\n";
  auto violations = [&](const char* tag, const std::vector<Violation>& v) {
    os << "  " << tag << ": ";
    if (v.empty()) {
      os << "no violation found\n";
    } else {
      os << v.size() << " violations, first witness "
         << format_witness(v.front().witness) << "\n";
    }
  };
  violations("a+b = a+c, b >= c => b/c = 0", c2_violations);
  violations("b+a = c+a, b >= c => b\\c = 0", c3_violations);
  os << "  quotient antisymmetry: "
     << (c4_antisymmetry_breaks.empty()
             ? "no break found"
             : std::to_string(c4_antisymmetry_breaks.size()) + " breaks")
     << " over " << quotients_scanned << " quotients\n";
  return os.str();
}

ConjectureScan conjecture_scan(int n) {
  if (n > 6) {
    throw Error("SizeLimitExceeded", {n}, "conjecture scan supports n <= 6");
  }
  ConjectureScan out;
  out.n = n;
  for (int size = 1; size <= n; ++size) {
    const auto posets = enumerate_posets_with_bottom(size);
    for (std::size_t pi = 0; pi < posets.size(); ++pi) {
      const Poset& p = posets[pi];
      const auto via_left = enumerate_gppea(p);
      const auto via_right = enumerate_gppea_via_rminus(p);

      // C1: group the union of both routes by the left-minus table.
      std::map<std::string, std::vector<std::string>> by_lminus;
      auto add_models = [&](const std::vector<GppeaModel>& models) {
        for (const GppeaModel& m : models) {
          std::string key = detail::encode(m);
          std::string lkey;
          for (int a = 0; a < m.size(); ++a) {
            for (int b = 0; b < m.size(); ++b) {
              lkey.push_back(static_cast<char>(m.lminus.at(a, b) + 1));
            }
          }
          auto& bucket = by_lminus[lkey];
          if (std::find(bucket.begin(), bucket.end(), key) == bucket.end()) {
            bucket.push_back(key);
          }
        }
      };
      add_models(via_left);
      add_models(via_right);
      for (const auto& [lkey, members] : by_lminus) {
        if (members.size() >= 2) {
          out.c1_collisions.push_back(
              {static_cast<int>(members.size()), static_cast<int>(pi), lkey,
               members});
        }
      }

      for (const GppeaModel& m : via_left) {
        ++out.models_scanned;
        const Relation leq = [&] {
          Relation r(m.size());
          for (int a = 0; a < m.size(); ++a) {
            for (int b = 0; b < m.size(); ++b) {
              r.set(a, b, m.rminus.defined(b, a));
            }
          }
          return r;
        }();
        const std::string enc = canonical_form(m).encoding;
        for (int a = 0; a < m.size(); ++a) {
          for (int b = 0; b < m.size(); ++b) {
            for (int c = 0; c < m.size(); ++c) {
              if (m.plus.defined(a, b) && m.plus.defined(a, c) &&
                  m.plus.at(a, b) == m.plus.at(a, c) && leq.at(c, b)) {
                if (!(m.lminus.defined(b, c) &&
                      m.lminus.at(b, c) == m.zero())) {
                  out.c2_violations.push_back({enc, {a, b, c}});
                }
              }
              if (m.plus.defined(b, a) && m.plus.defined(c, a) &&
                  m.plus.at(b, a) == m.plus.at(c, a) && leq.at(c, b)) {
                if (!(m.rminus.defined(b, c) &&
                      m.rminus.at(b, c) == m.zero())) {
                  out.c3_violations.push_back({enc, {a, b, c}});
                }
              }
            }
          }
        }

        for (const Partition& cong : enumerate_congruences(m)) {
          ++out.quotients_scanned;
          QuotientResult q = quotient(m, cong);
          const Verdict* ord = q.report.find("GPPEA2-order");
          if (ord && !ord->pass && ord->note == "NotAntisymmetric") {
            out.c4_antisymmetry_breaks.push_back(
                {enc, cong.to_string(), ord->witness});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace prepea
