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

#include "amw/abme.hpp"
#include "amw/representation.hpp"
#include "amw/rules.hpp"
#include "amw/search.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace amw;

namespace {

std::vector<Election> randoms(int count, int n_max, int m_max, std::uint64_t seed) {
  GenerationBounds b;
  b.n_max = n_max;
  b.m_max = m_max;
  b.k_max = m_max;
  b.seed = seed;
  std::vector<Election> out;
  for (int i = 0; i < count; ++i) out.push_back(random_election(b, i));
  return out;
}

}  // namespace

TEST_CASE("group checks equal voter-subset checks") {
  int failures = 0;
  for (const Election& e : randoms(250, 8, 5, 41)) {
    for (Committee w : enumerate_committees(e)) {
      CAPTURE(serialize_election(e));
      CAPTURE(e.format(w));
      const auto jr = check_jr(e, w);
      const auto pjr = check_pjr(e, w);
      const auto ejr = check_ejr(e, w);
      CHECK(jr.holds == check_jr_brute_force(e, w).holds);
      CHECK(pjr.holds == check_pjr_brute_force(e, w).holds);
      CHECK(ejr.holds == check_ejr_brute_force(e, w).holds);
      failures += !ejr.holds;
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("EJR implies PJR implies JR") {
  for (const Election& e : randoms(300, 9, 6, 42)) {
    for (Committee w : enumerate_committees(e)) {
      const bool jr = check_jr(e, w).holds;
      const bool pjr = check_pjr(e, w).holds;
      const bool ejr = check_ejr(e, w).holds;
      CHECK((!ejr || pjr));
      CHECK((!pjr || jr));
    }
  }
}

TEST_CASE("reported witnesses re-validate from their fields") {
  for (const Election& e : randoms(250, 8, 5, 43)) {
    for (Committee w : enumerate_committees(e)) {
      for (auto [axiom, v] : {std::pair{Axiom::jr, check_jr(e, w)},
                              std::pair{Axiom::pjr, check_pjr(e, w)},
                              std::pair{Axiom::ejr, check_ejr(e, w)}}) {
        CHECK(v.axiom == axiom);
        if (v.holds) {
          CHECK(!v.witness);
          continue;
        }
        REQUIRE(v.witness);
        CAPTURE(serialize_election(e));
        CAPTURE(e.format(w));
        const auto& wit = *v.witness;
        CHECK(witness_violates(e, w, axiom, wit));
        CHECK(is_cohesive(e, wit.voters, wit.level).cohesive);
        // Trimmed to ceil(level * n / k) voters, ascending.
        const int need = (wit.level * e.num_voters() + e.k() - 1) / e.k();
        CHECK(static_cast<int>(wit.voters.size()) == need);
        CHECK(std::is_sorted(wit.voters.begin(), wit.voters.end()));
      }
    }
  }
}

TEST_CASE("JR witness on the AV and SAV perfect-representation election") {
  const Election e = read_election_file(AMW_DATA_DIR "/F10-base.abme");
  const auto v = check_jr(e, e.resolve({"a1", "a2", "a3"}));
  CHECK(!v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->level == 1);
  CHECK(v.witness->voters == std::vector<int>{2});
  CHECK(e.format(v.witness->common) == "{b1,b2,b3}");
  CHECK(check_jr(e, e.resolve({"a1", "a2", "b1"})).holds);
  CHECK(check_ejr(e, e.resolve({"a1", "a2", "b1"})).holds);
}

TEST_CASE("PJR differs from JR and EJR differs from PJR on small cases") {
  // Four voters sharing {a,b}, k = 2: JR holds with {a,c}, PJR needs both.
  const Election e = parse_election("candidates: a b c d\nk: 2\n4: a b\n");
  CHECK(check_jr(e, e.resolve({"a", "c"})).holds);
  CHECK(!check_pjr(e, e.resolve({"a", "c"})).holds);
  // PJR counts the union of the group's winners; EJR needs one voter with two.
  const Election f = parse_election(
      "candidates: a b c d\nk: 2\n1: a b c\n1: a b d\n");
  CHECK(check_pjr(f, f.resolve({"c", "d"})).holds);
  CHECK(!check_ejr(f, f.resolve({"c", "d"})).holds);
}

TEST_CASE("cohesion test") {
  const Election e = parse_election("candidates: a b c\nk: 2\n2: a b\n2: c\n");
  // Level 2 needs all four voters; level 1 needs two.
  CHECK(!is_cohesive(e, {0, 1}, 2).cohesive);
  const auto c = is_cohesive(e, {0, 1}, 1);
  CHECK(c.cohesive);
  CHECK(e.format(c.common) == "{a,b}");
  CHECK(!is_cohesive(e, {0, 2}, 1).cohesive);
  CHECK(is_cohesive(e, {2, 3}, 1).cohesive);
}

TEST_CASE("perfect representation committees and rule checks") {
  const Election e = read_election_file(AMW_DATA_DIR "/F10-base.abme");
  const auto all = pr_committees(e);
  CHECK(all.size() == 9);
  for (Committee w : enumerate_committees(e)) {
    const bool in = std::find(all.begin(), all.end(), w) != all.end();
    CHECK(in == oracle::provides_pr(e, w.members()));
    const auto v = provides_pr(e, w);
    CHECK(v.holds == in);
    CHECK(v.pr_assignment.has_value() == in);
  }
  const auto av = rule_respects_pr_on(e, parse_rule("av"));
  CHECK(!av.holds);
  REQUIRE(av.offending);
  CHECK(e.format(*av.offending) == "{a1,a2,a3}");
  CHECK(rule_respects_pr_on(e, parse_rule("cc-prties")).holds);

  const Election odd = parse_election("candidates: a b\nk: 2\n3: a b\n");
  CHECK_THROWS_AS(provides_pr(odd, CandidateSet{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pr_committees(odd), std::invalid_argument);
}

TEST_CASE("a PR committee satisfies EJR") {
  for (const Election& e : randoms(300, 8, 5, 44)) {
    if (e.num_voters() % e.k() != 0) continue;
    for (Committee w : pr_committees(e)) {
      CAPTURE(serialize_election(e));
      CHECK(check_ejr(e, w).holds);
    }
  }
}

TEST_CASE("axiom names round trip") {
  for (Axiom a : {Axiom::jr, Axiom::pjr, Axiom::ejr, Axiom::pr}) {
    CHECK(parse_axiom(axiom_name(a)) == a);
  }
  CHECK_THROWS_AS(parse_axiom("xjr"), std::invalid_argument);
}
