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
#include "amw/monotonicity.hpp"
#include "amw/search.hpp"
#include "doctest.h"

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

struct Naive {
  bool strong = true;
  bool weak = true;
};

bool some_has_all(const RuleOutcome& o, CandidateSet g) {
  for (Committee w : o) {
    if (g.subset_of(w)) return true;
  }
  return false;
}
bool all_have_all(const RuleOutcome& o, CandidateSet g) {
  for (Committee w : o) {
    if (!g.subset_of(w)) return false;
  }
  return true;
}
bool some_meets(const RuleOutcome& o, CandidateSet g) {
  for (Committee w : o) {
    if (w.intersects(g)) return true;
  }
  return false;
}
bool all_meet(const RuleOutcome& o, CandidateSet g) {
  for (Committee w : o) {
    if (!w.intersects(g)) return false;
  }
  return true;
}

void judge(Naive& out, CandidateSet g, const RuleOutcome& before,
           const RuleOutcome& after) {
  if (some_has_all(before, g)) {
    out.strong &= some_has_all(after, g);
    out.weak &= some_meets(after, g);
  }
  if (all_have_all(before, g)) {
    out.strong &= all_have_all(after, g);
    out.weak &= all_meet(after, g);
  }
}

// Definition-level check: every G with |G| <= k, every eligible voter.
Naive naive_support(const Rule& rule, const Election& e, bool new_voter) {
  Naive out;
  const RuleOutcome before = evaluate(rule, e).outcome;
  const std::uint64_t roster = CandidateSet::first(e.num_candidates()).bits();
  for (std::uint64_t bits = 1; bits <= roster; ++bits) {
    const CandidateSet g(bits);
    if (g.size() > e.k()) continue;
    if (new_voter) {
      judge(out, g, before, evaluate(rule, add_new_voter(e, g)).outcome);
      continue;
    }
    for (int i = 0; i < e.num_voters(); ++i) {
      if (e.ballot(i).intersects(g)) continue;
      judge(out, g, before, evaluate(rule, extend_ballot(e, i, g)).outcome);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("support checks agree with the definition-level oracle") {
  const std::vector<Rule> rules = {parse_rule("av"), parse_rule("cc"), parse_rule("pav"),
                                   parse_rule("mav"), parse_rule("seqpav"),
                                   parse_rule("monroe"), parse_rule("not-weak-smwpi")};
  int strong_failures = 0;
  for (const Election& e : randoms(120, 5, 4, 51)) {
    for (const Rule& r : rules) {
      CAPTURE(serialize_election(e));
      CAPTURE(r.id());
      const Naive pi = naive_support(r, e, true);
      const Naive opi = naive_support(r, e, false);
      const JointVerdict jp = check_smwpi_joint(r, e);
      const JointVerdict jo = check_smwopi_joint(r, e);
      CHECK(jp.strong.holds == pi.strong);
      CHECK(jp.weak.holds == pi.weak);
      CHECK(jo.strong.holds == opi.strong);
      CHECK(jo.weak.holds == opi.weak);
      CHECK(check_smwpi(r, e, Strength::strong).holds == pi.strong);
      CHECK(check_smwopi(r, e, Strength::weak).holds == opi.weak);
      strong_failures += !pi.strong + !opi.strong;
    }
  }
  CHECK(strong_failures > 0);
}

TEST_CASE("strong verdict implies weak verdict") {
  for (const Election& e : randoms(150, 6, 5, 52)) {
    for (const char* id : {"cc", "pav", "mav", "monroe", "seqphragmen", "maxphragmen"}) {
      if (e.approved_candidates().size() < e.k() + 1) continue;
      const Rule r = parse_rule(id);
      for (const auto& j : {check_smwpi_joint(r, e), check_smwopi_joint(r, e)}) {
        CHECK((!j.strong.holds || j.weak.holds));
      }
    }
  }
}

TEST_CASE("every witness re-validates and names a failing clause") {
  int seen = 0;
  for (const Election& e : randoms(150, 6, 5, 53)) {
    for (const char* id : {"pav", "cc", "mav", "seqpav", "not-weak-smwpi"}) {
      const Rule r = parse_rule(id);
      for (const auto& v : {check_smwpi(r, e, Strength::strong),
                            check_smwopi(r, e, Strength::strong),
                            check_smwopi(r, e, Strength::weak),
                            check_candidate_monotonicity(r, e)}) {
        if (v.holds) continue;
        REQUIRE(v.witness);
        ++seen;
        CHECK(validate_witness(r, *v.witness));
        CHECK(clause_fails(v.witness->spec, v.witness->clause, v.witness->g,
                           v.witness->before, v.witness->after));
        CHECK(v.mutations_checked > 0);
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("tampered witnesses are rejected") {
  const Election e = read_election_file(AMW_DATA_DIR "/F1-base.abme");
  const Rule r = parse_rule("pav");
  const auto v = check_smwopi(r, e, Strength::strong);
  REQUIRE(v.witness);
  CHECK(validate_witness(r, *v.witness));
  auto bad = *v.witness;
  bad.after = bad.before;
  CHECK(!validate_witness(r, bad));
  auto wrong_rule = *v.witness;
  CHECK(!validate_witness(parse_rule("av"), wrong_rule));
}

TEST_CASE("serial and parallel scans report the same witness and count") {
  for (const Election& e : randoms(60, 6, 5, 54)) {
    for (const char* id : {"pav", "cc", "seqpav"}) {
      const Rule r = parse_rule(id);
      for (auto spec : {parse_axiom_spec("strong-smwpi"), parse_axiom_spec("strong-smwopi"),
                        parse_axiom_spec("weak-smwopi"), parse_axiom_spec("candidate"),
                        parse_axiom_spec("committee")}) {
        const auto a = check_axiom(r, e, spec, Exec::serial);
        const auto b = check_axiom(r, e, spec, Exec::parallel);
        CHECK(a.holds == b.holds);
        CHECK(a.mutations_checked == b.mutations_checked);
        if (a.witness && b.witness) {
          CHECK(a.witness->g == b.witness->g);
          CHECK(a.witness->voter == b.witness->voter);
          CHECK(a.witness->clause == b.witness->clause);
          CHECK(a.witness->mutated == b.witness->mutated);
        }
      }
    }
  }
}

TEST_CASE("sequential and approval-count rules are committee monotone") {
  for (const Election& e : randoms(150, 7, 5, 55)) {
    for (const char* id : {"av", "sav", "seqpav"}) {
      CAPTURE(serialize_election(e));
      CAPTURE(id);
      CHECK(check_axiom(parse_rule(id), e, parse_axiom_spec("committee")).holds);
    }
    const int approved = e.approved_candidates().size();
    if (approved >= 2) {
      CHECK(check_committee_monotonicity(parse_rule("seqphragmen"), e, 1, approved).holds);
    }
  }
}

TEST_CASE("committee monotonicity witnesses") {
  const Election e = read_election_file(AMW_DATA_DIR "/F8-base.abme");
  const auto v = check_axiom(parse_rule("mav"), e, parse_axiom_spec("committee"));
  CHECK(!v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->original.k() == 1);
  CHECK(v.witness->mutated.k() == 2);
  CHECK(clause_name(v.witness->clause) == "1");
  CHECK(e.format(v.witness->g) == "{a}");
  CHECK(validate_witness(parse_rule("mav"), *v.witness));
  CHECK_THROWS_AS(check_committee_monotonicity(parse_rule("mav"), e, 2, 2),
                  std::invalid_argument);
}

TEST_CASE("axiom spec names round trip") {
  for (const char* name : {"candidate", "committee", "strong-smwpi", "weak-smwpi",
                           "strong-smwopi", "weak-smwopi"}) {
    CHECK(axiom_spec_name(parse_axiom_spec(name)) == name);
  }
  CHECK_THROWS_AS(parse_axiom_spec("smwpi"), std::invalid_argument);
}
