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
//
// Acceptance suite: one binary, one criterion per invocation (or all),
// one PASS/FAIL line per criterion. Criteria run exactly as documented;
// two of them pin reference values that are mathematically unattainable
// (see the notes printed with their FAIL lines), and are expected to stay
// red rather than being weakened.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "prepea/canonical.hpp"
#include "prepea/checks.hpp"
#include "prepea/construct.hpp"
#include "prepea/derive.hpp"
#include "prepea/enumerate.hpp"
#include "prepea/fixtures.hpp"
#include "prepea/properties.hpp"

using namespace prepea;

namespace {

std::string g_cli_path;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  if (g_cli_path.empty()) {
    result.output = "no CLI path supplied";
    return result;
  }
  const std::string cmd = g_cli_path + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    result.output = "failed to launch CLI";
    return result;
  }
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) {
    result.output.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct Criterion {
  bool pass = true;
  int failures = 0;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      ++failures;
      notes << "    failed: " << what << "\n";
    }
  }

  void note(const std::string& what) { notes << "    " << what << "\n"; }
};

std::vector<GppeaModel> gppea_models_up_to(int n) {
  std::vector<GppeaModel> out;
  for (int size = 1; size <= n; ++size) {
    for (const Poset& p : enumerate_posets_with_bottom(size)) {
      for (GppeaModel& m : enumerate_gppea(p)) out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<WppeaModel> wppea_models_up_to(int n) {
  std::vector<WppeaModel> out;
  for (int size = 2; size <= n; ++size) {
    for (const Poset& p : enumerate_bounded_posets(size)) {
      for (WppeaModel& m : enumerate_wppea(p)) out.push_back(std::move(m));
    }
  }
  return out;
}

Poset order_of(const GppeaModel& m) {
  Relation rel(m.size());
  for (int a = 0; a < m.size(); ++a) {
    for (int b = 0; b < m.size(); ++b) rel.set(a, b, m.rminus.defined(b, a));
  }
  return validate_poset(rel);
}

// 1. CLI poset count at n = 6 is exactly 16, under 10 seconds.
void criterion_1(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  CliResult r = run_cli("enumerate --n 6 --kind posets --count-only");
  const double secs = seconds_since(start);
  c.expect(r.exit_code == 0, "CLI exited with " + std::to_string(r.exit_code));
  std::istringstream is(r.output);
  std::string first;
  is >> first;
  c.expect(first == "16", "count output was '" + first + "', expected 16");
  c.expect(secs < 10.0, "took " + std::to_string(secs) + "s, budget 10s");
  c.note("count=16 in " + std::to_string(secs) + "s");
}

// 2. CLI reports exactly 8 of the 16 orders as admitting a model, under
// 5 minutes.
void criterion_2(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  CliResult r = run_cli("enumerate --n 6 --kind wppea --count-only");
  const double secs = seconds_since(start);
  c.expect(r.exit_code == 0, "CLI exited with " + std::to_string(r.exit_code));
  c.expect(r.output.find("admissible orders: 8 / 16") != std::string::npos,
           "admissible summary not found in output");
  c.expect(secs < 300.0, "took " + std::to_string(secs) + "s, budget 300s");
  c.note("8 of 16 admissible in " + std::to_string(secs) + "s");
}

// 3. The documented derivations reproduce exactly.
void criterion_3(Criterion& c) {
  const Fixture* lm = find_fixture("ex-4-1-lminus");
  const Fixture* pl = find_fixture("ex-4-1-plus");
  PlusDerivation pd = plus_from_lminus(*lm->table);
  c.expect(pd.ok() && pd.plus == *pl->table && pd.order == *pl->table_order,
           "left-minus candidate did not derive the documented sum");

  MinusDerivation md = minus_from_plus(*pl->table, *pl->table_order);
  c.expect(md.failures.size() == 1, "expected exactly one minus failure");
  if (md.failures.size() == 1) {
    const DerivationFailure& f = md.failures.front();
    c.expect(f.a == 3 && f.b == 1 && f.table == '\\' &&
                 f.candidates == std::vector<int>{1, 2},
             "minus failure was not (1,a) with tied set {a,b}");
  }

  PlusDerivation pd2 = plus_from_lminus(*find_fixture("ex-4-2-lminus")->table);
  c.expect(pd2.failures.size() == 1, "expected exactly one sum failure");
  if (pd2.failures.size() == 1) {
    const DerivationFailure& f = pd2.failures.front();
    c.expect(f.a == 2 && f.b == 1 && f.candidates == std::vector<int>{3, 4},
             "sum failure was not (b,a) with tied set {c,d}");
  }

  const GppeaModel& fix = *find_fixture("ex-4-3-triple")->gppea;
  GppeaDerivation d = derive_gppea_from_lminus(fix.lminus);
  c.expect(d.assembled, "pipeline did not assemble the candidate");
  if (d.assembled) {
    c.expect(d.model.plus == fix.plus && d.model.rminus == fix.rminus,
             "pipeline tables differ from the documented ones");
    const Verdict* v = d.report.find("GPPEA3");
    c.expect(v && !v->pass && v->witness == Witness{1, 1, 1},
             "third axiom did not fail at the a+a=a witness");
  }
}

// 4. Exact round trips over every enumerated model at n <= 5, under 10 min.
void criterion_4(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto models = gppea_models_up_to(5);
  long long checked = 0;
  for (const GppeaModel& m : models) {
    const Poset ord = order_of(m);
    MinusDerivation md = minus_from_plus(m.plus, ord);
    if (!md.ok() || !(md.rminus == m.rminus) || !(md.lminus == m.lminus)) {
      c.expect(false, "minus round trip broke on a model of size " +
                          std::to_string(m.size()));
      return;
    }
    PlusDerivation fl = plus_from_lminus(m.lminus);
    if (!fl.ok() || !(fl.plus == m.plus) || !(fl.order == ord)) {
      c.expect(false, "left-minus round trip broke");
      return;
    }
    PlusDerivation fr = plus_from_rminus(m.rminus);
    if (!fr.ok() || !(fr.plus == m.plus) || !(fr.order == ord)) {
      c.expect(false, "right-minus round trip broke");
      return;
    }
    ++checked;
  }
  const double secs = seconds_since(start);
  c.expect(secs < 600.0, "took " + std::to_string(secs) + "s, budget 600s");
  c.note(std::to_string(checked) + " models round-tripped in " +
         std::to_string(secs) + "s");
}

// 5. Property fixtures with exact witnesses. The five-element decomposition
// witness is pinned to the documented instance (1,2,2,1); that instance is
// actually covered by the crossed matrix (0,1,2,0), so this sub-check is an
// expected honest FAIL (the verdict itself, fails, is correct; the first
// uncovered instance is (1,2,2,2)).
void criterion_5(Criterion& c) {
  {
    const GppeaModel& m = *find_fixture("ex-6-1")->gppea;
    c.expect(check_rdp(m).holds, "four-element example 1 should decompose");
    PropertyVerdict rip = check_rip(m);
    c.expect(!rip.holds && rip.witness == Witness{1, 2, 2},
             "example 1 interpolation witness is not (1,2,2)");
  }
  {
    const GppeaModel& m = *find_fixture("ex-6-2")->gppea;
    c.expect(check_rdp(m).holds, "four-element example 2 should decompose");
    PropertyVerdict rip = check_rip(m);
    c.expect(!rip.holds && rip.witness == Witness{2, 1, 1},
             "example 2 interpolation witness is not (2,1,1)");
  }
  {
    const GppeaModel& m = *find_fixture("ex-6-3-rip-not-rdp")->gppea;
    c.expect(check_rip(m).holds, "five-element model should interpolate");
    PropertyVerdict rdp = check_rdp(m);
    c.expect(!rdp.holds, "five-element model should not decompose");
    c.expect(rdp.witness == Witness{1, 2, 2, 1},
             "documented witness (1,2,2,1) not reported; it decomposes via "
             "c=(0,1,2,0), checker reports " + format_witness(rdp.witness));
  }
  {
    const GppeaModel& m = *find_fixture("ex-6-4-lmodrip")->gppea;
    c.expect(check_modified_rip(m, ModRipVariant::Left).holds,
             "left variant should hold on the seven-element model");
    PropertyVerdict rt = check_modified_rip(m, ModRipVariant::Right);
    c.expect(!rt.holds && rt.witness == Witness{4, 1, 3},
             "right variant witness is not (4,1,3)");
    PropertyVerdict lr = check_modified_rip(m, ModRipVariant::LeftRight);
    c.expect(!lr.holds && lr.witness == Witness{6, 1, 3},
             "mixed variant witness is not (6,1,3)");
  }
  {
    const GppeaModel& m = *find_fixture("ex-6-5-rmodrip")->gppea;
    c.expect(check_modified_rip(m, ModRipVariant::Right).holds,
             "right variant should hold on the transposed model");
    PropertyVerdict l = check_modified_rip(m, ModRipVariant::Left);
    c.expect(!l.holds && l.witness == Witness{4, 3, 1},
             "left variant witness is not (4,3,1)");
    PropertyVerdict lr = check_modified_rip(m, ModRipVariant::LeftRight);
    c.expect(!lr.holds && lr.witness == Witness{6, 3, 1},
             "mixed variant witness is not (6,3,1)");
  }
  if (c.failures == 1) {
    c.note("every other verdict and witness reproduced exactly");
  }
}

// 6. Unitization of every enumerated model at n <= 4 passes the axioms,
// under 5 minutes. Expected honest FAIL: a model whose sum definedness is
// one-sided (b+a defined, a+b not) makes the two order clauses disagree at
// (a, b*) in the doubled structure, and such a model provably exists at
// n = 4 (the strict four-element fixture).
void criterion_6(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto models = gppea_models_up_to(4);
  const std::string strict =
      canonical_form(*find_fixture("strict-gwppea-4")->gppea).encoding;
  int passed = 0;
  std::vector<std::string> failing;
  for (const GppeaModel& m : models) {
    UnitizeResult u = unitize(m);
    if (u.self_check.pass()) {
      ++passed;
      continue;
    }
    const Verdict* v = u.self_check.find("WPPEA3");
    std::string what = "n=" + std::to_string(m.size()) + " model";
    if (canonical_form(m).encoding == strict) {
      what += " (the strict four-element fixture)";
    }
    what += " at " + (v && !v->pass ? format_witness(v->witness)
                                    : std::string("?"));
    failing.push_back(what);
  }
  const double secs = seconds_since(start);
  c.note(std::to_string(passed) + "/" + std::to_string(models.size()) +
         " unitizations conformant in " + std::to_string(secs) + "s");
  for (const std::string& f : failing) {
    c.expect(false, "doubled model fails the order axiom: " + f);
  }
  c.expect(secs < 300.0, "took " + std::to_string(secs) + "s, budget 300s");
}

// 7. Derived-law suites over the full n <= 6 enumeration.
void criterion_7(Criterion& c) {
  const auto models = wppea_models_up_to(6);
  long long commutative = 0;
  for (const WppeaModel& m : models) {
    if (!verify_derived_props(m).pass()) {
      c.expect(false, "an enumerated model fails a derived law");
      return;
    }
    if (check_commutative(m.plus).pass()) {
      ++commutative;
      if (!check_pea(m.plus).pass()) {
        c.expect(false, "a commutative model fails the exchange condition");
        return;
      }
    }
    GppeaModel g = restrict_wppea_to_gppea(m);
    ExplicitMinus em = explicit_minus(m);
    if (!(g.rminus == em.rminus && g.lminus == em.lminus)) {
      c.expect(false, "restriction disagrees with the closed form");
      return;
    }
  }
  long long docposets = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Poset& p : enumerate_bounded_posets(n)) {
      for (const DocPoset& dp : enumerate_docposets(p)) {
        WppeaModel m = wppea_from_docposet(dp);
        DocPoset back = docposet_reduct(m);
        if (!(back.order == dp.order && back.lcompl == dp.lcompl &&
              back.rcompl == dp.rcompl)) {
          c.expect(false, "docposet round trip broke");
          return;
        }
        ++docposets;
      }
    }
  }
  c.note(std::to_string(models.size()) + " models (" +
         std::to_string(commutative) + " commutative), " +
         std::to_string(docposets) + " docposets round-tripped");
}

// 8. Congruence and quotient suite over the reference models.
void criterion_8(Criterion& c) {
  long long quotients = 0;
  for (const char* name : {"strict-gwppea-4", "ex-6-1", "ex-6-2",
                           "ex-6-3-rip-not-rdp", "ex-6-4-lmodrip",
                           "ex-6-5-rmodrip"}) {
    const GppeaModel& m = *find_fixture(name)->gppea;
    c.expect(check_congruence(m, Partition::identity(m.size())).holds,
             std::string(name) + ": identity partition rejected");
    c.expect(check_congruence(m, Partition::single_block(m.size())).holds,
             std::string(name) + ": single-block partition rejected");
    std::vector<Partition> congruences;
    if (m.size() <= 6) {
      congruences = enumerate_congruences(m);
    } else {
      congruences = {Partition::identity(m.size()),
                     Partition::single_block(m.size())};
    }
    for (const Partition& p : congruences) {
      QuotientResult q = quotient(m, p);
      ++quotients;
      const int zero = q.model.zero();
      for (int x = 0; x < q.model.size(); ++x) {
        for (int y = 0; y < q.model.size(); ++y) {
          if (q.model.plus.defined(x, y) && q.model.plus.at(x, y) == zero) {
            c.expect(x == zero && y == zero,
                     std::string(name) + ": [a]+[b]=[0] with nonzero class");
          }
          if (q.model.lminus.defined(x, y) && q.model.lminus.defined(y, x)) {
            c.expect(q.model.lminus.at(x, y) == zero,
                     std::string(name) +
                         ": mutual left differences not [0]");
          }
        }
      }
    }
  }
  c.note(std::to_string(quotients) + " quotients checked");
}

// 9. Conjecture scan at n <= 5: no uniqueness counterexample; the remaining
// outcomes are emitted as machine-readable records.
void criterion_9(Criterion& c) {
  ConjectureScan scan = conjecture_scan(5);
  c.expect(scan.c1_collisions.empty(),
           "minus-uniqueness collision found below n = 6");
  c.note(std::to_string(scan.models_scanned) + " models scanned; " +
         std::to_string(scan.c2_violations.size()) + "+" +
         std::to_string(scan.c3_violations.size()) +
         " cancellation records; " +
         std::to_string(scan.c4_antisymmetry_breaks.size()) +
         " antisymmetry records over " +
         std::to_string(scan.quotients_scanned) + " quotients");
  CliResult r = run_cli("conjectures --n 5 --json");
  c.expect(r.exit_code == 0, "CLI conjectures exited nonzero");
  try {
    auto j = nlohmann::json::parse(r.output);
    for (const char* key :
         {"minus_uniqueness_collisions", "left_cancellation_violations",
          "right_cancellation_violations", "quotient_antisymmetry_breaks"}) {
      c.expect(j.contains(key), std::string("missing record key ") + key);
    }
  } catch (const std::exception&) {
    c.expect(false, "conjecture output is not machine-readable JSON");
  }
}

// 10. verify-paper exits 0 within 15 minutes. Expected honest FAIL: the
// replay includes the documented decomposition witness (1,2,2,1), which
// does not reproduce (see criterion 5); verify-paper reports the diff and
// exits 1.
void criterion_10(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  CliResult r = run_cli("verify-paper");
  const double secs = seconds_since(start);
  c.expect(secs < 900.0, "took " + std::to_string(secs) + "s, budget 900s");
  c.expect(r.exit_code == 0,
           "verify-paper exited " + std::to_string(r.exit_code));
  std::istringstream is(r.output);
  std::string line;
  int pass_lines = 0;
  while (std::getline(is, line)) {
    if (line.rfind("PASS", 0) == 0) ++pass_lines;
    if (line.rfind("FAIL", 0) == 0) c.note(line);
  }
  c.note(std::to_string(pass_lines) + " items reproduced in " +
         std::to_string(secs) + "s");
}

using CriterionFn = void (*)(Criterion&);

}  // namespace

int main(int argc, char** argv) {
  const int which = argc > 1 ? std::atoi(argv[1]) : 0;
  if (argc > 2) g_cli_path = argv[2];

  const CriterionFn fns[10] = {criterion_1, criterion_2, criterion_3,
                               criterion_4, criterion_5, criterion_6,
                               criterion_7, criterion_8, criterion_9,
                               criterion_10};
  bool all_pass = true;
  for (int i = 1; i <= 10; ++i) {
    if (which != 0 && which != i) continue;
    Criterion c;
    try {
      fns[i - 1](c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i << ": " << (c.pass ? "PASS" : "FAIL")
              << '\n'
              << c.notes.str();
    all_pass = all_pass && c.pass;
  }
  return all_pass ? 0 : 1;
}
