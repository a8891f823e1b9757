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

#ifndef PREPEA_FIXTURES_HPP_
#define PREPEA_FIXTURES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prepea/core.hpp"

namespace prepea {

// Built-in reference structures, addressable from the CLI via the
// `fixture:` prefix.
struct Fixture {
  std::string name;
  std::string kind;  // wppea | gppea | poset | docposet | lminus | plus
  std::string description;

  std::optional<WppeaModel> wppea;
  std::optional<GppeaModel> gppea;
  std::optional<Poset> poset;
  std::optional<DocPoset> docposet;
  std::optional<PartialBinTable> table;  // payload of lminus / plus kinds
  std::optional<Poset> table_order;      // order accompanying a plus table
  std::vector<std::string> labels;
};

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(std::string_view name);

}  // namespace prepea

#endif  // PREPEA_FIXTURES_HPP_
