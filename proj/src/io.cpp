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

#include "prepea/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "prepea/fixtures.hpp"

namespace prepea {

using nlohmann::json;

int ModelFile::size() const {
  if (wppea) return wppea->size();
  if (gppea) return gppea->size();
  if (docposet) return docposet->size();
  if (poset) return poset->size();
  return 0;
}

std::vector<std::string> ModelFile::labels() const {
  if (wppea) return wppea->carrier.labels;
  if (gppea) return gppea->carrier.labels;
  if (docposet) return docposet->carrier.labels;
  return poset_labels;
}

Carrier ModelFile::display_carrier() const {
  if (wppea) return wppea->carrier;
  if (gppea) return gppea->carrier;
  if (docposet) return docposet->carrier;
  Carrier c;
  c.size = size();
  c.labels = poset_labels;
  return c;
}

ModelFile model_file(const WppeaModel& m) {
  ModelFile f;
  f.kind = "wppea";
  f.wppea = m;
  return f;
}

ModelFile model_file(const GppeaModel& m) {
  ModelFile f;
  f.kind = "gppea";
  f.gppea = m;
  return f;
}

ModelFile model_file(const Poset& p, std::vector<std::string> labels) {
  ModelFile f;
  f.kind = "poset";
  f.poset = p;
  f.poset_labels = std::move(labels);
  return f;
}

ModelFile model_file(const DocPoset& dp) {
  ModelFile f;
  f.kind = "docposet";
  f.docposet = dp;
  return f;
}

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error("ParseError", {}, what);
}

json table_to_json(const PartialBinTable& t) {
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

PartialBinTable table_from_json(const json& rows, int n) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    parse_error("table must have n rows");
  }
  PartialBinTable t(n);
  for (int a = 0; a < n; ++a) {
    const json& row = rows[a];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      parse_error("table row must have n entries");
    }
    for (int b = 0; b < n; ++b) {
      if (row[b].is_null()) continue;
      if (!row[b].is_number_integer()) parse_error("cell must be int or null");
      const int v = row[b].get<int>();
      if (v < 0 || v >= n) parse_error("cell value out of range");
      t.set(a, b, v);
    }
  }
  return t;
}

json leq_to_json(const Poset& p) {
  json rows = json::array();
  for (int a = 0; a < p.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < p.size(); ++b) row.push_back(p.leq(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

Poset leq_from_json(const json& rows, int n) {
  Relation r(n);
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    parse_error("leq must have n rows");
  }
  for (int a = 0; a < n; ++a) {
    const json& row = rows[a];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      parse_error("leq row must have n entries");
    }
    for (int b = 0; b < n; ++b) {
      if (!row[b].is_boolean()) parse_error("leq entry must be bool");
      r.set(a, b, row[b].get<bool>());
    }
  }
  return validate_poset(r);
}

UnaryMap map_from_json(const json& arr, int n) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
    parse_error("unary map must have n entries");
  }
  std::vector<int> image(n);
  for (int a = 0; a < n; ++a) {
    if (!arr[a].is_number_integer()) parse_error("map entry must be int");
    image[a] = arr[a].get<int>();
    if (image[a] < 0 || image[a] >= n) parse_error("map value out of range");
  }
  return UnaryMap{n, std::move(image)};
}

std::vector<std::string> labels_from_json(const json& j, int n) {
  if (!j.contains("labels") || j["labels"].is_null()) return {};
  const json& arr = j["labels"];
  if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
    parse_error("labels must have n entries");
  }
  std::vector<std::string> out;
  for (const auto& e : arr) out.push_back(e.get<std::string>());
  return out;
}

}  // namespace

std::string to_json(const ModelFile& m) {
  json j;
  j["kind"] = m.kind;
  j["n"] = m.size();
  const auto labels = m.labels();
  if (!labels.empty()) j["labels"] = labels;
  if (m.kind == "wppea") {
    const WppeaModel& w = *m.wppea;
    j["zero"] = w.zero();
    j["unit"] = w.unit();
    j["plus"] = table_to_json(w.plus);
    j["lsupp"] = w.lsupp.image;
    j["rsupp"] = w.rsupp.image;
  } else if (m.kind == "gppea") {
    const GppeaModel& g = *m.gppea;
    j["zero"] = g.zero();
    j["unit"] = nullptr;
    j["plus"] = table_to_json(g.plus);
    j["rminus"] = table_to_json(g.rminus);
    j["lminus"] = table_to_json(g.lminus);
  } else if (m.kind == "poset") {
    j["leq"] = leq_to_json(*m.poset);
  } else if (m.kind == "docposet") {
    const DocPoset& dp = *m.docposet;
    j["zero"] = dp.zero();
    j["unit"] = dp.unit();
    j["leq"] = leq_to_json(dp.order);
    j["lsupp"] = dp.lcompl.image;
    j["rsupp"] = dp.rcompl.image;
  }
  return j.dump(2) + "\n";
}

ModelFile from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_error(std::string("bad json: ") + e.what());
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    parse_error("missing kind");
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) parse_error("missing n");
  const std::string kind = j["kind"].get<std::string>();
  const int n = j["n"].get<int>();
  if (n <= 0) parse_error("n must be positive");

  ModelFile out;
  out.kind = kind;
  auto zero_of = [&]() {
    return j.contains("zero") ? j["zero"].get<int>() : 0;
  };
  if (kind == "wppea") {
    WppeaModel w;
    if (!j.contains("unit") || j["unit"].is_null()) {
      parse_error("wppea needs a unit");
    }
    w.carrier = make_carrier(n, zero_of(), j["unit"].get<int>(),
                             labels_from_json(j, n));
    if (!j.contains("plus")) parse_error("wppea needs plus");
    w.plus = table_from_json(j["plus"], n);
    if (!j.contains("lsupp") || !j.contains("rsupp")) {
      parse_error("wppea needs lsupp and rsupp");
    }
    w.lsupp = map_from_json(j["lsupp"], n);
    w.rsupp = map_from_json(j["rsupp"], n);
    out.wppea = std::move(w);
  } else if (kind == "gppea") {
    GppeaModel g;
    g.carrier = make_carrier(n, zero_of(), std::nullopt,
                             labels_from_json(j, n));
    for (const char* field : {"plus", "rminus", "lminus"}) {
      if (!j.contains(field)) parse_error(std::string("gppea needs ") + field);
    }
    g.plus = table_from_json(j["plus"], n);
    g.rminus = table_from_json(j["rminus"], n);
    g.lminus = table_from_json(j["lminus"], n);
    out.gppea = std::move(g);
  } else if (kind == "poset") {
    if (!j.contains("leq")) parse_error("poset needs leq");
    out.poset = leq_from_json(j["leq"], n);
    out.poset_labels = labels_from_json(j, n);
  } else if (kind == "docposet") {
    DocPoset dp;
    if (!j.contains("unit") || j["unit"].is_null()) {
      parse_error("docposet needs a unit");
    }
    dp.carrier = make_carrier(n, zero_of(), j["unit"].get<int>(),
                              labels_from_json(j, n));
    if (!j.contains("leq")) parse_error("docposet needs leq");
    dp.order = leq_from_json(j["leq"], n);
    if (!j.contains("lsupp") || !j.contains("rsupp")) {
      parse_error("docposet needs lsupp and rsupp");
    }
    dp.lcompl = map_from_json(j["lsupp"], n);
    dp.rcompl = map_from_json(j["rsupp"], n);
    out.docposet = std::move(dp);
  } else {
    parse_error("unknown kind: " + kind);
  }
  return out;
}

namespace {

std::string cell_text(const PartialBinTable& t, const Carrier& c, int a,
                      int b) {
  return t.defined(a, b) ? c.label(t.at(a, b)) : ".";
}

void write_table(std::ostream& os, const char* name,
                 const PartialBinTable& t, const Carrier& c) {
  os << name << ":\n";
  std::size_t width = 1;
  for (int a = 0; a < c.size; ++a) width = std::max(width, c.label(a).size());
  auto pad = [&](const std::string& s) {
    os << std::string(width + 1 - std::min(width, s.size()), ' ') << s;
  };
  pad("");
  for (int b = 0; b < c.size; ++b) pad(c.label(b));
  os << '\n';
  for (int a = 0; a < c.size; ++a) {
    pad(c.label(a));
    for (int b = 0; b < c.size; ++b) pad(cell_text(t, c, a, b));
    os << '\n';
  }
}

void write_map(std::ostream& os, const char* name, const UnaryMap& m,
               const Carrier& c) {
  os << name << ":";
  for (int a = 0; a < m.size; ++a) os << ' ' << c.label(m.at(a));
  os << '\n';
}

void write_leq(std::ostream& os, const Poset& p, const Carrier& c) {
  os << "leq:\n";
  for (int a = 0; a < p.size(); ++a) {
    os << "  " << c.label(a) << ":";
    for (int b = 0; b < p.size(); ++b) {
      if (p.leq(a, b)) os << ' ' << c.label(b);
    }
    os << '\n';
  }
}

}  // namespace

std::string to_text(const ModelFile& m) {
  std::ostringstream os;
  const Carrier c = m.display_carrier();
  os << "kind: " << m.kind << '\n';
  os << "n: " << m.size() << '\n';
  if (m.kind != "poset") os << "zero: " << c.label(c.zero) << '\n';
  if (c.unit) os << "unit: " << c.label(*c.unit) << '\n';
  if (!c.labels.empty()) {
    os << "labels:";
    for (int a = 0; a < c.size; ++a) os << ' ' << c.label(a);
    os << '\n';
  }
  if (m.wppea) {
    write_table(os, "+", m.wppea->plus, c);
    write_map(os, "L", m.wppea->lsupp, c);
    write_map(os, "R", m.wppea->rsupp, c);
  } else if (m.gppea) {
    write_table(os, "+", m.gppea->plus, c);
    write_table(os, "\\", m.gppea->rminus, c);
    write_table(os, "/", m.gppea->lminus, c);
  } else if (m.poset) {
    write_leq(os, *m.poset, c);
  } else if (m.docposet) {
    write_leq(os, m.docposet->order, c);
    write_map(os, "L", m.docposet->lcompl, c);
    write_map(os, "R", m.docposet->rcompl, c);
  }
  return os.str();
}

namespace {

struct TextParser {
  std::map<std::string, std::string> scalars;
  std::map<std::string, std::vector<std::vector<std::string>>> tables;
  std::map<std::string, std::vector<std::string>> maps;
  std::vector<std::pair<std::string, std::vector<std::string>>> leq_rows;

  int n = 0;
  std::map<std::string, int> index_of;
  std::vector<std::string> labels;
  bool explicit_labels = false;

  static std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
  }

  void parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string section;  // "+", "\\", "/", "leq"
    int table_row = -1;
    while (std::getline(is, line)) {
      if (auto pos = line.find('#'); pos != std::string::npos) {
        line.erase(pos);
      }
      auto toks = tokens(line);
      if (toks.empty()) continue;
      std::string head = toks.front();
      const bool is_key = head.size() >= 2 && head.back() == ':';
      if (is_key) head.pop_back();
      if (is_key && (head == "kind" || head == "n" || head == "zero" ||
                     head == "unit")) {
        if (toks.size() != 2) parse_error("bad " + head + " line");
        scalars[head] = toks[1];
        section.clear();
        continue;
      }
      if (is_key && head == "labels") {
        labels.assign(toks.begin() + 1, toks.end());
        explicit_labels = true;
        section.clear();
        continue;
      }
      if (is_key && (head == "L" || head == "R")) {
        maps[head].assign(toks.begin() + 1, toks.end());
        section.clear();
        continue;
      }
      if (is_key && (head == "+" || head == "\\" || head == "/")) {
        section = head;
        table_row = -1;  // next line is the header row
        continue;
      }
      if (is_key && head == "leq") {
        section = "leq";
        continue;
      }
      if (section == "leq") {
        if (!is_key) parse_error("leq rows look like 'label: labels...'");
        leq_rows.emplace_back(head,
                              std::vector<std::string>(toks.begin() + 1,
                                                       toks.end()));
        continue;
      }
      if (!section.empty()) {
        if (table_row < 0) {
          // header row: just the column labels
          table_row = 0;
          continue;
        }
        // data row: row label then n entries
        tables[section].emplace_back(toks.begin(), toks.end());
        continue;
      }
      parse_error("unexpected line: " + line);
    }
  }

  void resolve_elements() {
    if (!scalars.count("n")) parse_error("missing n");
    n = std::stoi(scalars["n"]);
    if (n <= 0) parse_error("n must be positive");
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
      parse_error("labels must have n entries");
    }
    if (labels.empty()) {
      for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
    }
    for (int a = 0; a < n; ++a) index_of[labels[a]] = a;
  }

  int element(const std::string& tok) const {
    auto it = index_of.find(tok);
    if (it == index_of.end()) parse_error("unknown element: " + tok);
    return it->second;
  }

  PartialBinTable table(const std::string& name) const {
    auto it = tables.find(name);
    if (it == tables.end()) parse_error("missing table " + name);
    const auto& rows = it->second;
    if (static_cast<int>(rows.size()) != n) {
      parse_error("table " + name + " must have n rows");
    }
    PartialBinTable t(n);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n + 1) {
        parse_error("table " + name + " row needs a label and n entries");
      }
      const int a = element(row[0]);
      for (int b = 0; b < n; ++b) {
        if (row[b + 1] == "." || row[b + 1] == "-") continue;
        t.set(a, b, element(row[b + 1]));
      }
    }
    return t;
  }

  UnaryMap unary(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) parse_error("missing map " + name);
    if (static_cast<int>(it->second.size()) != n) {
      parse_error("map " + name + " must have n entries");
    }
    std::vector<int> image(n);
    for (int a = 0; a < n; ++a) image[a] = element(it->second[a]);
    return UnaryMap{n, std::move(image)};
  }

  Poset order() const {
    if (leq_rows.empty()) parse_error("missing leq");
    Relation r(n);
    for (const auto& [row_label, ups] : leq_rows) {
      const int a = element(row_label);
      for (const auto& up : ups) r.set(a, element(up), true);
    }
    return validate_poset(r);
  }

  int scalar_element(const std::string& key, int fallback) const {
    auto it = scalars.find(key);
    if (it == scalars.end()) return fallback;
    return element(it->second);
  }
};

}  // namespace

ModelFile from_text(const std::string& text) {
  TextParser p;
  p.parse(text);
  if (!p.scalars.count("kind")) parse_error("missing kind");
  p.resolve_elements();
  const std::string kind = p.scalars["kind"];
  std::vector<std::string> labels =
      p.explicit_labels ? p.labels : std::vector<std::string>{};

  ModelFile out;
  out.kind = kind;
  if (kind == "wppea") {
    WppeaModel w;
    if (!p.scalars.count("unit")) parse_error("wppea needs a unit");
    w.carrier = make_carrier(p.n, p.scalar_element("zero", 0),
                             p.scalar_element("unit", -1), labels);
    w.plus = p.table("+");
    w.lsupp = p.unary("L");
    w.rsupp = p.unary("R");
    out.wppea = std::move(w);
  } else if (kind == "gppea") {
    GppeaModel g;
    g.carrier =
        make_carrier(p.n, p.scalar_element("zero", 0), std::nullopt, labels);
    g.plus = p.table("+");
    g.rminus = p.table("\\");
    g.lminus = p.table("/");
    out.gppea = std::move(g);
  } else if (kind == "poset") {
    out.poset = p.order();
    out.poset_labels = labels;
  } else if (kind == "docposet") {
    DocPoset dp;
    if (!p.scalars.count("unit")) parse_error("docposet needs a unit");
    dp.carrier = make_carrier(p.n, p.scalar_element("zero", 0),
                              p.scalar_element("unit", -1), labels);
    dp.order = p.order();
    dp.lcompl = p.unary("L");
    dp.rcompl = p.unary("R");
    out.docposet = std::move(dp);
  } else {
    parse_error("unknown kind: " + kind);
  }
  return out;
}

ModelFile load_model(const std::string& path_or_fixture) {
  constexpr std::string_view kFixturePrefix = "fixture:";
  if (path_or_fixture.starts_with(kFixturePrefix)) {
    const std::string name =
        path_or_fixture.substr(kFixturePrefix.size());
    const Fixture* f = find_fixture(name);
    if (!f) throw Error("ParseError", {}, "unknown fixture: " + name);
    if (f->wppea) return model_file(*f->wppea);
    if (f->gppea) return model_file(*f->gppea);
    if (f->docposet) return model_file(*f->docposet);
    if (f->poset) return model_file(*f->poset, f->labels);
    throw Error("ParseError", {},
                "fixture " + name + " is a raw table; use it with derive");
  }
  std::ifstream in(path_or_fixture);
  if (!in) throw Error("ParseError", {}, "cannot open " + path_or_fixture);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return from_json(text);
  }
  return from_text(text);
}

}  // namespace prepea
