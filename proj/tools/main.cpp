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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prepea/canonical.hpp"
#include "prepea/checks.hpp"
#include "prepea/construct.hpp"
#include "prepea/derive.hpp"
#include "prepea/enumerate.hpp"
#include "prepea/fixtures.hpp"
#include "prepea/io.hpp"
#include "prepea/properties.hpp"
#include "prepea/verify.hpp"

namespace {

using nlohmann::json;
using namespace prepea;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitSize = 3;

json report_to_json(const CheckReport& r) {
  json out = json::array();
  for (const auto& v : r.verdicts) {
    json row;
    row["axiom"] = v.axiom;
    row["pass"] = v.pass;
    row["witness"] = v.witness;
    if (!v.note.empty()) row["note"] = v.note;
    out.push_back(std::move(row));
  }
  return out;
}

json verdict_to_json(const PropertyVerdict& v) {
  json row;
  row["property"] = v.property;
  row["holds"] = v.holds;
  row["witness"] = v.witness;
  if (!v.detail.empty()) row["detail"] = v.detail;
  return row;
}

json table_json(const PartialBinTable& t) {
  json rows = json::array();
  for (int a = 0; a < t.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < t.size(); ++b) {
      if (t.defined(a, b)) {
        row.push_back(t.at(a, b));
      } else {
        row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_output(const std::string& path, const std::string& payload) {
  std::ofstream out(path);
  if (!out) throw Error("ParseError", {}, "cannot write " + path);
  out << payload;
}

int failure_exit(const Error& e) {
  if (e.code() == "ParseError") return kExitParse;
  if (e.code() == "SizeLimitExceeded") return kExitSize;
  return kExitFail;
}

struct CheckOptions {
  std::string source;
  std::string kind = "auto";
  bool as_json = false;
  bool derived_props = false;
  bool commutative = false;
  bool cancellative = false;
  bool pea = false;
};

int run_check(const CheckOptions& opt) {
  ModelFile f = load_model(opt.source);
  std::string kind = opt.kind == "auto" ? f.kind : opt.kind;
  if ((kind == "wppea" || kind == "ppea") && !f.wppea) {
    throw Error("ParseError", {}, "input does not parse as wppea");
  }
  if (kind == "gppea" && !f.gppea) {
    throw Error("ParseError", {}, "input does not parse as gppea");
  }

  std::vector<CheckReport> reports;
  std::vector<std::string> headings;
  const PartialBinTable* plus = nullptr;
  if (kind == "wppea" || kind == "ppea") {
    headings.push_back("wppea axioms");
    reports.push_back(check_wppea(*f.wppea));
    plus = &f.wppea->plus;
    if (kind == "ppea") {
      headings.push_back("exchange condition");
      reports.push_back(check_pea(*plus));
    }
    if (opt.derived_props && reports.front().pass()) {
      headings.push_back("derived laws");
      reports.push_back(verify_derived_props(*f.wppea));
    }
  } else if (kind == "gppea") {
    headings.push_back("gppea axioms");
    reports.push_back(check_gppea(*f.gppea));
    plus = &f.gppea->plus;
    if (opt.derived_props && reports.front().pass()) {
      headings.push_back("derived laws");
      reports.push_back(verify_derived_props(*f.gppea));
    }
  } else if (kind == "docposet") {
    headings.push_back("docposet invariants");
    reports.push_back(check_docposet(*f.docposet));
  } else if (kind == "poset") {
    // validated while loading; reaching this point means it is an order
    headings.push_back("partial order");
    CheckReport r;
    r.verdicts.push_back({"partial-order", true, {}, ""});
    reports.push_back(std::move(r));
  } else {
    throw Error("ParseError", {}, "cannot check kind " + kind);
  }
  if (plus) {
    if (opt.commutative) {
      headings.push_back("commutativity");
      reports.push_back(check_commutative(*plus));
    }
    if (opt.cancellative) {
      headings.push_back("cancellativity");
      reports.push_back(check_cancellative(*plus));
    }
    if (opt.pea) {
      headings.push_back("exchange condition");
      reports.push_back(check_pea(*plus));
    }
  }

  bool all = true;
  for (const auto& r : reports) all = all && r.pass();
  if (opt.as_json) {
    json out;
    out["kind"] = kind;
    out["pass"] = all;
    json sections = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      json s;
      s["name"] = headings[i];
      s["verdicts"] = report_to_json(reports[i]);
      sections.push_back(std::move(s));
    }
    out["sections"] = sections;
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::cout << headings[i] << ":\n" << reports[i].summary();
    }
    std::cout << (all ? "PASS" : "FAIL") << '\n';
  }
  return all ? kExitPass : kExitFail;
}

struct TableSource {
  PartialBinTable table;
  std::optional<Poset> order;
  Carrier carrier;
};

TableSource resolve_table(const std::string& source,
                          const std::string& which) {
  constexpr std::string_view kFixturePrefix = "fixture:";
  if (source.starts_with(kFixturePrefix)) {
    const std::string name = source.substr(kFixturePrefix.size());
    const Fixture* fx = find_fixture(name);
    if (fx && fx->table) {
      if ((which == "plus") != (fx->kind == "plus")) {
        throw Error("ParseError", {},
                    "fixture " + name + " holds a " + fx->kind + " table");
      }
      Carrier c{fx->table->size(), 0, std::nullopt, fx->labels};
      return {*fx->table, fx->table_order, c};
    }
  }
  ModelFile f = load_model(source);
  if (f.gppea) {
    const GppeaModel& g = *f.gppea;
    Relation rel(g.size());
    for (int a = 0; a < g.size(); ++a) {
      for (int b = 0; b < g.size(); ++b) {
        rel.set(a, b, g.rminus.defined(b, a));
      }
    }
    std::optional<Poset> order;
    if (!find_order_violation(rel)) order = Poset::unchecked(rel);
    const PartialBinTable& t = which == "plus"     ? g.plus
                               : which == "rminus" ? g.rminus
                                                   : g.lminus;
    return {t, order, g.carrier};
  }
  if (f.wppea && which == "plus") {
    return {f.wppea->plus, derived_order(*f.wppea), f.wppea->carrier};
  }
  throw Error("ParseError", {},
              "cannot extract a " + which + " table from this input");
}

int run_derive(const std::string& from, const std::string& source,
               const std::string& order_file, bool as_json,
               const std::string& out_path) {
  TableSource in = resolve_table(source, from);
  json jout;
  std::ostringstream text;
  bool ok = true;

  if (from == "plus") {
    std::optional<Poset> order = in.order;
    if (!order_file.empty()) {
      ModelFile of = load_model(order_file);
      if (!of.poset) throw Error("ParseError", {}, "--order must be a poset");
      order = of.poset;
    }
    if (!order) {
      throw Error("ParseError", {},
                  "no order available; pass --order with a poset file");
    }
    MinusDerivation md = minus_from_plus(in.table, *order);
    jout["rminus"] = table_json(md.rminus);
    jout["lminus"] = table_json(md.lminus);
    json fails = json::array();
    for (const auto& f : md.failures) {
      ok = false;
      json jf;
      jf["a"] = f.a;
      jf["b"] = f.b;
      jf["table"] = std::string(1, f.table);
      jf["reason"] = "NoSupremum";
      jf["candidates"] = f.candidates;
      fails.push_back(std::move(jf));
      text << f.describe(in.carrier) << '\n';
    }
    jout["failures"] = fails;
    if (ok) {
      GppeaModel g;
      g.carrier = in.carrier;
      g.plus = in.table;
      g.rminus = md.rminus;
      g.lminus = md.lminus;
      text << to_text(model_file(g));
      if (!out_path.empty()) write_output(out_path, to_json(model_file(g)));
    }
  } else {
    GppeaDerivation d = from == "lminus"
                            ? derive_gppea_from_lminus(in.table)
                            : derive_gppea_from_rminus(in.table);
    if (!d.assembled) {
      ok = false;
      json fails = json::array();
      if (d.plus_stage) {
        GppeaModel partial;
        partial.carrier = in.carrier;
        partial.plus = d.plus_stage->plus;
        partial.rminus = PartialBinTable(in.table.size());
        partial.lminus = PartialBinTable(in.table.size());
        if (from == "lminus") partial.lminus = in.table;
        if (from == "rminus") partial.rminus = in.table;
        text << "derived sum:\n" << to_text(model_file(partial));
        jout["plus"] = table_json(d.plus_stage->plus);
      }
      text << "derivation aborted at stage " << d.stage << ": " << d.detail
           << '\n';
      for (const auto& f : d.failures) {
        json jf;
        jf["a"] = f.a;
        jf["b"] = f.b;
        jf["reason"] = f.reason == DerivationFailure::Reason::NoSupremum
                           ? "NoSupremum"
                           : "NoInfimum";
        jf["candidates"] = f.candidates;
        fails.push_back(std::move(jf));
        text << f.describe(in.carrier) << '\n';
      }
      jout["stage"] = d.stage;
      jout["failures"] = fails;
    } else {
      d.model.carrier.labels = in.carrier.labels;
      jout["model"] = json::parse(to_json(model_file(d.model)));
      jout["report"] = report_to_json(d.report);
      text << to_text(model_file(d.model));
      text << "self-check: " << (d.report.pass() ? "PASS" : "FAIL") << '\n';
      if (!d.report.pass()) text << d.report.summary();
      if (!out_path.empty()) {
        write_output(out_path, to_json(model_file(d.model)));
      }
      ok = true;  // derivation succeeded; the report is informational here
    }
  }
  jout["ok"] = ok;
  if (as_json) {
    std::cout << jout.dump(2) << '\n';
  } else {
    std::cout << text.str();
  }
  return ok ? kExitPass : kExitFail;
}

int run_enumerate(int n, const std::string& kind,
                  const std::string& poset_file, bool count_only,
                  bool as_json) {
  json jout;
  if (kind == "posets") {
    auto posets = enumerate_bounded_posets(n);
    if (count_only) {
      if (as_json) {
        jout["count"] = posets.size();
        std::cout << jout.dump(2) << '\n';
      } else {
        std::cout << posets.size() << '\n';
      }
      return kExitPass;
    }
    if (as_json) {
      json arr = json::array();
      for (const auto& p : posets) {
        arr.push_back(json::parse(to_json(model_file(p))));
      }
      jout["posets"] = arr;
      std::cout << jout.dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < posets.size(); ++i) {
        std::cout << "# order " << i << '\n' << to_text(model_file(posets[i]));
      }
      std::cout << posets.size() << " posets\n";
    }
    return kExitPass;
  }

  if (kind == "wppea") {
    if (!poset_file.empty()) {
      ModelFile f = load_model(poset_file);
      if (!f.poset) throw Error("ParseError", {}, "--poset must be a poset");
      auto models = enumerate_wppea(*f.poset);
      if (as_json) {
        json arr = json::array();
        for (const auto& m : models) {
          arr.push_back(json::parse(to_json(model_file(m))));
        }
        std::cout << arr.dump(2) << '\n';
      } else {
        if (!count_only) {
          for (const auto& m : models) std::cout << to_text(model_file(m));
        }
        std::cout << models.size() << " models\n";
      }
      return kExitPass;
    }
    CountSummary summary = count_summary(n);
    if (as_json) {
      jout["n"] = summary.n;
      jout["posets"] = summary.posets;
      jout["admissible"] = summary.admissible;
      json rows = json::array();
      for (const auto& row : summary.rows) {
        json jr;
        jr["order"] = row.order_index;
        jr["models"] = row.wppea_models;
        jr["docposet"] = row.docposet_admissible;
        rows.push_back(std::move(jr));
      }
      jout["rows"] = rows;
      std::cout << jout.dump(2) << '\n';
    } else {
      std::cout << summary.to_text();
      std::cout << "admissible orders: " << summary.admissible << " / "
                << summary.posets << '\n';
    }
    return kExitPass;
  }

  if (kind == "gppea") {
    std::vector<Poset> posets;
    if (!poset_file.empty()) {
      ModelFile f = load_model(poset_file);
      if (!f.poset) throw Error("ParseError", {}, "--poset must be a poset");
      posets.push_back(*f.poset);
    } else {
      posets = enumerate_posets_with_bottom(n);
    }
    json arr = json::array();
    long long total = 0;
    for (std::size_t i = 0; i < posets.size(); ++i) {
      auto models = enumerate_gppea(posets[i]);
      total += static_cast<long long>(models.size());
      if (as_json) {
        json row;
        row["order"] = i;
        row["models"] = models.size();
        if (!count_only) {
          json list = json::array();
          for (const auto& m : models) {
            list.push_back(json::parse(to_json(model_file(m))));
          }
          row["list"] = list;
        }
        arr.push_back(std::move(row));
      } else {
        std::cout << "order " << i << ": " << models.size() << " models\n";
        if (!count_only) {
          for (const auto& m : models) std::cout << to_text(model_file(m));
        }
      }
    }
    if (as_json) {
      jout["orders"] = arr;
      jout["total"] = total;
      std::cout << jout.dump(2) << '\n';
    } else {
      std::cout << total << " models total\n";
    }
    return kExitPass;
  }
  throw Error("ParseError", {}, "unknown enumeration kind " + kind);
}

int run_construct(const std::string& mode, const std::string& source,
                  const std::string& out_path, bool as_json) {
  ModelFile result;
  CheckReport self;
  if (mode == "unitize") {
    ModelFile f = load_model(source);
    if (!f.gppea) throw Error("ParseError", {}, "unitize needs a gppea");
    UnitizeResult u = unitize(*f.gppea);
    result = model_file(u.model);
    self = u.self_check;
  } else if (mode == "from-docposet") {
    ModelFile f = load_model(source);
    if (!f.docposet) {
      throw Error("ParseError", {}, "construction needs a docposet");
    }
    WppeaModel m = wppea_from_docposet(*f.docposet);
    self = check_wppea(m);
    result = model_file(m);
  } else if (mode == "trivial") {
    ModelFile f = load_model(source);
    if (!f.poset) throw Error("ParseError", {}, "construction needs a poset");
    GppeaModel g = trivial_gppea_from_poset(*f.poset);
    if (!f.poset_labels.empty()) g.carrier.labels = f.poset_labels;
    self = check_gppea(g);
    result = model_file(g);
  } else if (mode == "restrict") {
    ModelFile f = load_model(source);
    if (!f.wppea) throw Error("ParseError", {}, "restriction needs a wppea");
    GppeaModel g = restrict_wppea_to_gppea(*f.wppea);
    self = check_gppea(g);
    result = model_file(g);
  } else {
    throw Error("ParseError", {}, "unknown construction " + mode);
  }

  if (!out_path.empty()) write_output(out_path, to_json(result));
  if (as_json) {
    json out;
    out["model"] = json::parse(to_json(result));
    out["self_check"] = report_to_json(self);
    out["pass"] = self.pass();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << to_text(result);
    std::cout << "self-check: " << (self.pass() ? "PASS" : "FAIL") << '\n';
    if (!self.pass()) std::cout << self.summary();
  }
  return self.pass() ? kExitPass : kExitFail;
}

int run_props(const std::string& source, bool rdp, bool rip, bool lmod,
              bool rmod, bool lrmod, bool all, bool as_json) {
  ModelFile f = load_model(source);
  if (!f.gppea) throw Error("ParseError", {}, "props needs a gppea");
  const GppeaModel& m = *f.gppea;
  std::vector<PropertyVerdict> verdicts;
  if (all || rdp) verdicts.push_back(check_rdp(m));
  if (all || rip) verdicts.push_back(check_rip(m));
  if (all || lmod) {
    verdicts.push_back(check_modified_rip(m, ModRipVariant::Left));
  }
  if (all || rmod) {
    verdicts.push_back(check_modified_rip(m, ModRipVariant::Right));
  }
  if (all || lrmod) {
    verdicts.push_back(check_modified_rip(m, ModRipVariant::LeftRight));
  }
  if (verdicts.empty()) {
    throw Error("ParseError", {}, "pick at least one property flag");
  }
  bool holds = true;
  for (const auto& v : verdicts) holds = holds && v.holds;
  if (as_json) {
    json arr = json::array();
    for (const auto& v : verdicts) arr.push_back(verdict_to_json(v));
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& v : verdicts) {
      std::cout << v.property << ": " << (v.holds ? "holds" : "fails");
      if (!v.holds) {
        std::cout << " at " << format_witness(v.witness, m.carrier);
      }
      std::cout << '\n';
    }
  }
  return holds ? kExitPass : kExitFail;
}

Partition parse_partition(const std::string& text, int n) {
  std::vector<int> block_of(n, -1);
  int block = 0;
  int value = -1;
  auto flush_value = [&](char context) {
    if (value < 0) {
      throw Error("ParseError", {},
                  std::string("empty element before '") + context + "'");
    }
    if (value >= n) throw Error("ParseError", {}, "element out of range");
    if (block_of[value] != -1) {
      throw Error("ParseError", {}, "element repeated in partition");
    }
    block_of[value] = block;
    value = -1;
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      value = (value < 0 ? 0 : value * 10) + (c - '0');
    } else if (c == ',') {
      flush_value(',');
    } else if (c == '|') {
      flush_value('|');
      ++block;
    } else if (c != ' ') {
      throw Error("ParseError", {}, "bad partition syntax");
    }
  }
  flush_value('$');
  for (int a = 0; a < n; ++a) {
    if (block_of[a] == -1) {
      throw Error("ParseError", {},
                  "element " + std::to_string(a) + " missing from partition");
    }
  }
  return Partition::from_block_of(block_of);
}

int run_congruences(const std::string& source, const std::string& quotient_by,
                    bool as_json) {
  ModelFile f = load_model(source);
  if (!f.gppea) throw Error("ParseError", {}, "congruences needs a gppea");
  const GppeaModel& m = *f.gppea;

  if (!quotient_by.empty()) {
    Partition p = parse_partition(quotient_by, m.size());
    QuotientResult q = quotient(m, p);
    if (as_json) {
      json out;
      out["model"] = json::parse(to_json(model_file(q.model)));
      out["report"] = report_to_json(q.report);
      out["pass"] = q.report.pass();
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << to_text(model_file(q.model));
      std::cout << "self-check: " << (q.report.pass() ? "PASS" : "FAIL")
                << '\n';
      if (!q.report.pass()) std::cout << q.report.summary();
    }
    return kExitPass;
  }

  auto congruences = enumerate_congruences(m);
  if (as_json) {
    json arr = json::array();
    for (const auto& p : congruences) arr.push_back(p.to_string());
    json out;
    out["count"] = congruences.size();
    out["congruences"] = arr;
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& p : congruences) std::cout << p.to_string() << '\n';
    std::cout << congruences.size() << " congruences\n";
  }
  return kExitPass;
}

int run_conjectures(int n, bool as_json) {
  ConjectureScan scan = conjecture_scan(n);
  if (as_json) {
    json out;
    out["n"] = scan.n;
    out["models_scanned"] = scan.models_scanned;
    json c1 = json::array();
    for (const auto& g : scan.c1_collisions) {
      json jg;
      jg["size"] = g.size;
      jg["poset"] = g.poset_index;
      jg["members"] = g.member_encodings.size();
      c1.push_back(std::move(jg));
    }
    out["minus_uniqueness_collisions"] = c1;
    auto viol = [&](const std::vector<ConjectureScan::Violation>& v) {
      json arr = json::array();
      for (const auto& x : v) {
        json jx;
        jx["witness"] = x.witness;
        arr.push_back(std::move(jx));
      }
      return arr;
    };
    out["left_cancellation_violations"] = viol(scan.c2_violations);
    out["right_cancellation_violations"] = viol(scan.c3_violations);
    json c4 = json::array();
    for (const auto& h : scan.c4_antisymmetry_breaks) {
      json jh;
      jh["partition"] = h.partition;
      jh["witness"] = h.witness;
      c4.push_back(std::move(jh));
    }
    out["quotient_antisymmetry_breaks"] = c4;
    out["quotients_scanned"] = scan.quotients_scanned;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << scan.to_text();
  }
  return kExitPass;
}

int run_verify_paper(bool as_json) {
  PaperReplay replay = verify_paper();
  if (as_json) {
    json arr = json::array();
    for (const auto& item : replay.items) {
      json ji;
      ji["name"] = item.name;
      ji["pass"] = item.pass;
      if (!item.detail.empty()) ji["detail"] = item.detail;
      arr.push_back(std::move(ji));
    }
    json out;
    out["items"] = arr;
    out["pass"] = replay.pass();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << replay.to_text();
  }
  return replay.pass() ? kExitPass : kExitFail;
}

int run_fixtures(const std::string& name, bool as_json) {
  if (name.empty()) {
    for (const auto& f : fixtures()) {
      std::cout << f.name << "  (" << f.kind << ")  " << f.description
                << '\n';
    }
    return kExitPass;
  }
  const Fixture* f = find_fixture(name);
  if (!f) throw Error("ParseError", {}, "unknown fixture: " + name);
  if (f->table) {
    GppeaModel g;
    g.carrier = Carrier{f->table->size(), 0, std::nullopt, f->labels};
    g.plus = f->kind == "plus" ? *f->table : PartialBinTable(f->table->size());
    g.lminus =
        f->kind == "lminus" ? *f->table : PartialBinTable(f->table->size());
    g.rminus = PartialBinTable(f->table->size());
    std::cout << "# raw " << f->kind << " table\n"
              << to_text(model_file(g));
    return kExitPass;
  }
  ModelFile m = load_model("fixture:" + name);
  std::cout << (as_json ? to_json(m) : to_text(m));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model laboratory for pre pseudo effect algebras"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* c_check = app.add_subcommand("check", "run axiom checkers on a model");
  c_check->add_option("file", check_opt.source, "model file or fixture:NAME")
      ->required();
  c_check->add_option("--kind", check_opt.kind,
                      "wppea | ppea | gppea (default: from file)");
  c_check->add_flag("--json", check_opt.as_json, "JSON output");
  c_check->add_flag("--derived-props", check_opt.derived_props,
                    "also scan the derived laws");
  c_check->add_flag("--commutative", check_opt.commutative, "");
  c_check->add_flag("--cancellative", check_opt.cancellative, "");
  c_check->add_flag("--pea", check_opt.pea, "exchange condition on +");

  std::string derive_from, derive_source, derive_order_file, derive_out;
  bool derive_json = false;
  auto* c_derive =
      app.add_subcommand("derive", "reconstruct operations from a table");
  c_derive->add_option("--from", derive_from, "plus | lminus | rminus")
      ->required();
  c_derive->add_option("source", derive_source, "file or fixture:NAME")
      ->required();
  c_derive->add_option("--order", derive_order_file,
                       "poset file (for --from plus)");
  c_derive->add_option("--out", derive_out, "write the derived model (JSON)");
  c_derive->add_flag("--json", derive_json, "JSON output");

  int enum_n = 0;
  std::string enum_kind, enum_poset;
  bool enum_count = false, enum_json = false;
  auto* c_enum = app.add_subcommand("enumerate", "exhaustive model search");
  c_enum->add_option("--n", enum_n, "carrier size")->required();
  c_enum->add_option("--kind", enum_kind, "posets | wppea | gppea")
      ->required();
  c_enum->add_option("--poset", enum_poset, "restrict to one order");
  c_enum->add_flag("--count-only", enum_count, "print counts only");
  c_enum->add_flag("--json", enum_json, "JSON output");

  std::string cons_source, cons_out;
  bool cons_json = false;
  bool cons_unitize = false, cons_docposet = false, cons_trivial = false,
       cons_restrict = false;
  auto* c_cons = app.add_subcommand("construct", "run a construction");
  c_cons->add_option("source", cons_source, "input file or fixture:NAME")
      ->required();
  c_cons->add_flag("--unitize", cons_unitize, "double a gppea");
  c_cons->add_flag("--from-docposet", cons_docposet, "wppea from a docposet");
  c_cons->add_flag("--trivial", cons_trivial, "trivial gppea from a poset");
  c_cons->add_flag("--restrict", cons_restrict, "gppea from a wppea");
  c_cons->add_option("--out", cons_out, "write the result (JSON)");
  c_cons->add_flag("--json", cons_json, "JSON output");

  std::string props_source;
  bool p_rdp = false, p_rip = false, p_lmod = false, p_rmod = false,
       p_lrmod = false, p_all = false, props_json = false;
  auto* c_props =
      app.add_subcommand("props", "decomposition/interpolation properties");
  c_props->add_option("source", props_source, "gppea file or fixture:NAME")
      ->required();
  c_props->add_flag("--rdp", p_rdp, "");
  c_props->add_flag("--rip", p_rip, "");
  c_props->add_flag("--lmodrip", p_lmod, "");
  c_props->add_flag("--rmodrip", p_rmod, "");
  c_props->add_flag("--lrmodrip", p_lrmod, "");
  c_props->add_flag("--all", p_all, "all five properties");
  c_props->add_flag("--json", props_json, "JSON output");

  std::string cong_source, cong_quotient;
  bool cong_json = false;
  auto* c_cong =
      app.add_subcommand("congruences", "congruence search and quotients");
  c_cong->add_option("source", cong_source, "gppea file or fixture:NAME")
      ->required();
  c_cong->add_option("--quotient", cong_quotient,
                     "partition like 0,1|2|3: print the factor structure");
  c_cong->add_flag("--json", cong_json, "JSON output");

  int conj_n = 0;
  bool conj_json = false;
  auto* c_conj =
      app.add_subcommand("conjectures", "scan the open-question claims");
  c_conj->add_option("--n", conj_n, "max carrier size")->required();
  c_conj->add_flag("--json", conj_json, "JSON output");

  bool vp_json = false;
  auto* c_vp = app.add_subcommand("verify-paper",
                                  "replay every documented reference result");
  c_vp->add_flag("--json", vp_json, "JSON output");

  std::string fx_name;
  bool fx_json = false;
  auto* c_fx = app.add_subcommand("fixtures", "list or dump fixtures");
  c_fx->add_option("name", fx_name, "fixture to dump");
  c_fx->add_flag("--json", fx_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) return run_check(check_opt);
    if (c_derive->parsed()) {
      return run_derive(derive_from, derive_source, derive_order_file,
                        derive_json, derive_out);
    }
    if (c_enum->parsed()) {
      return run_enumerate(enum_n, enum_kind, enum_poset, enum_count,
                           enum_json);
    }
    if (c_cons->parsed()) {
      const int picked = cons_unitize + cons_docposet + cons_trivial +
                         cons_restrict;
      if (picked != 1) {
        throw Error("ParseError", {}, "pick exactly one construction flag");
      }
      const std::string mode = cons_unitize    ? "unitize"
                               : cons_docposet ? "from-docposet"
                               : cons_trivial  ? "trivial"
                                               : "restrict";
      return run_construct(mode, cons_source, cons_out, cons_json);
    }
    if (c_props->parsed()) {
      return run_props(props_source, p_rdp, p_rip, p_lmod, p_rmod, p_lrmod,
                       p_all, props_json);
    }
    if (c_cong->parsed()) {
      return run_congruences(cong_source, cong_quotient, cong_json);
    }
    if (c_conj->parsed()) return run_conjectures(conj_n, conj_json);
    if (c_vp->parsed()) return run_verify_paper(vp_json);
    if (c_fx->parsed()) return run_fixtures(fx_name, fx_json);
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << '\n';
    return failure_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitPass;
}
