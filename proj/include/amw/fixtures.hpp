// Copyright 2026 The Authors.
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

// Reference elections with exact expected outcomes.

#ifndef AMW_FIXTURES_HPP_
#define AMW_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "amw/outcome.hpp"

namespace amw {

struct FixtureInfo {
  std::string id;        // "F1" .. "F16"
  std::string citation;  // what the fixture reproduces
  std::vector<std::string> covers;  // coverage keys
  std::vector<std::pair<std::string, std::string>> elections;  // name, .abme
};

struct ExpectationResult {
  std::string what;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct FixtureReport {
  std::string id;
  std::string citation;
  std::vector<ExpectationResult> results;
  double seconds = 0;

  bool passed() const;
};

std::vector<FixtureInfo> list_fixtures();

/// Throws std::invalid_argument for unknown ids.
FixtureReport run_fixture(const std::string& id);

/// All fixtures, reported in catalog order.
std::vector<FixtureReport> run_all_fixtures(Exec exec = Exec::serial);

}  // namespace amw

#endif  // AMW_FIXTURES_HPP_
