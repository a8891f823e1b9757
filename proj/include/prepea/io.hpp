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

#ifndef PREPEA_IO_HPP_
#define PREPEA_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "prepea/core.hpp"

namespace prepea {

// One parsed value of any model kind.
struct ModelFile {
  std::string kind;  // wppea | gppea | poset | docposet
  std::optional<WppeaModel> wppea;
  std::optional<GppeaModel> gppea;
  std::optional<Poset> poset;
  std::optional<DocPoset> docposet;
  std::vector<std::string> poset_labels;  // labels of a bare poset

  int size() const;
  std::vector<std::string> labels() const;
  Carrier display_carrier() const;  // for rendering witnesses/tables
};

ModelFile model_file(const WppeaModel& m);
ModelFile model_file(const GppeaModel& m);
ModelFile model_file(const Poset& p,
                     std::vector<std::string> labels = {});
ModelFile model_file(const DocPoset& dp);

// JSON schema: {"kind", "n", "zero", "unit", "plus", "lminus", "rminus",
// "lsupp", "rsupp", "leq", "labels"} with fields present per kind and null
// for undefined cells.
std::string to_json(const ModelFile& m);
ModelFile from_json(const std::string& text);  // throws Error("ParseError")

// Paper-style text: one table per operation introduced by "+:", "\:", "/:",
// with a header row/column of element labels and "." for undefined cells;
// unary maps as "L:"/"R:" image rows; orders as a "leq:" adjacency list.
std::string to_text(const ModelFile& m);
ModelFile from_text(const std::string& text);  // throws Error("ParseError")

// Reads a path, or a built-in structure via the "fixture:" prefix. Format is
// JSON when the payload starts with '{', text otherwise.
ModelFile load_model(const std::string& path_or_fixture);

}  // namespace prepea

#endif  // PREPEA_IO_HPP_
