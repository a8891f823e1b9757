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

#ifndef PREPEA_VERIFY_HPP_
#define PREPEA_VERIFY_HPP_

#include <string>
#include <vector>

namespace prepea {

// Replays every documented reference result against this implementation:
// counts, derivations, verdicts and witnesses. Items fail with a diff when
// the reproduction does not match the documented value.
struct ReplayItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PaperReplay {
  std::vector<ReplayItem> items;

  bool pass() const;
  std::string to_text() const;
};

PaperReplay verify_paper();

}  // namespace prepea

#endif  // PREPEA_VERIFY_HPP_
