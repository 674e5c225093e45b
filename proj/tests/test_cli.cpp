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

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "amw/abme.hpp"
#include "amw/monotonicity.hpp"
#include "doctest.h"
#include "report.hpp"

using namespace amw;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AMW_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(AMW_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("compute prints every winner with its objective") {
  const Run r = run("compute --rule pav " + data("F1-base.abme"));
  CHECK(r.code == 0);
  CHECK(r.out == "{c1,c2,c3,c4}  score=391/3\n");
  const Run j = run("--format json compute --rule maxphragmen " + data("F7-base.abme"));
  CHECK(j.code == 0);
  const auto doc = report::Json::parse(j.out);
  CHECK(doc.at("committees").size() == 2);
  CHECK(doc.at("objective").at("name") == "maxload");
  CHECK(doc.at("objective").at("value") == "5/13");
}

TEST_CASE("exit codes") {
  CHECK(run("compute --rule nosuch " + data("F1-base.abme")).code == 2);
  CHECK(run("compute --rule pav /nonexistent.abme").code == 3);
  CHECK(run("compute --rule pav --k 99 " + data("F1-base.abme")).code == 3);
  CHECK(run("monotonic --rule mav --axiom strong-smwopi " + data("F3-base.abme")).code == 1);
  CHECK(run("monotonic --rule av --axiom strong-smwopi " + data("F3-base.abme")).code == 0);
  CHECK(run("axioms --check jr --committee a1,a2,a3 " + data("F10-base.abme")).code == 1);
  CHECK(run("reproduce --fixture F2").code == 0);
  CHECK(run("bogus").code == 2);
}

TEST_CASE("JSON witnesses round trip and re-validate") {
  const Run r = run("--format json monotonic --rule mav --axiom strong-smwopi " +
                    data("F3-base.abme"));
  REQUIRE(r.code == 1);
  const auto doc = report::Json::parse(r.out);
  const auto w = report::witness_from_json(doc.at("witness"));
  CHECK(validate_witness(parse_rule("mav"), w));
  CHECK(report::witness_json(parse_rule("mav"), w) == doc.at("witness"));
}

TEST_CASE("hunt JSON is identical across thread counts") {
  const std::string args =
      "--format json hunt --rule cc --axiom strong-smwopi --max-voters 6 "
      "--max-candidates 4 --k 1..3 --seed 9 --max-instances 2000";
  const Run one = run("--jobs 1 " + args);
  const Run four = run("--jobs 4 " + args);
  CHECK(one.code == four.code);
  CHECK(one.out == four.out);
  CHECK(!one.out.empty());
}
