// Copyright 2026 The qmat Authors.
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

#ifndef QMAT_REPORT_H_
#define QMAT_REPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qmat/subspace.h"

namespace qmat {

// One verified claim. Failures carry witnesses; exhaustive passes carry the
// number of cases examined in `count`.
struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<Subspace> witnesses;
  std::uint64_t count = 0;
};

struct CheckReport {
  std::vector<Check> checks;

  bool ok() const {
    for (const Check& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  Check& add(std::string name, bool pass, std::string detail = {}, std::uint64_t count = 0) {
    checks.push_back({std::move(name), pass, std::move(detail), {}, count});
    return checks.back();
  }
  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (Check c : other.checks) {
      if (!prefix.empty()) c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
  }
};

}  // namespace qmat

#endif  // QMAT_REPORT_H_
