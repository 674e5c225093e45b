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

#include "amw/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "amw/abme.hpp"
#include "amw/monotonicity.hpp"
#include "amw/representation.hpp"
#include "amw/rules.hpp"
#include "amw/solvers.hpp"

namespace amw {

bool FixtureReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const ExpectationResult& r) { return r.passed; });
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<ExpectationResult>& out) : out_(out) {}

  void equal(std::string what, const std::string& expected,
             const std::string& actual) {
    out_.push_back({std::move(what), expected, actual, expected == actual});
  }
  void truth(std::string what, bool expected, bool actual) {
    equal(std::move(what), expected ? "true" : "false",
          actual ? "true" : "false");
  }
  void outcome(std::string what, const Election& e, const std::string& expected,
               const RuleOutcome& actual) {
    equal(std::move(what), expected, actual.format(e));
  }
  void scored(const std::string& what, const Election& e,
              const std::string& expected, const std::string& objective,
              const ScoredOutcome& actual) {
    outcome(what, e, expected, actual.outcome);
    equal(what + " objective", objective,
          actual.objective ? actual.objective->str() : "none");
  }
  // Runs fn, recording an exception as a failed expectation.
  void guard(const std::string& what, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& ex) {
      out_.push_back({what, "no exception", ex.what(), false});
    }
  }

 private:
  std::vector<ExpectationResult>& out_;
};

std::string order_of(const Election& e, const SequentialRun& run) {
  std::string out;
  for (const auto& s : run.steps) {
    if (!out.empty()) out += ",";
    out += e.name(s.candidate);
  }
  return out;
}

bool same_multiset(const Election& a, const Election& b) {
  std::vector<CandidateSet> x(a.ballots().begin(), a.ballots().end());
  std::vector<CandidateSet> y(b.ballots().begin(), b.ballots().end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return a.candidates() == b.candidates() && a.k() == b.k() && x == y;
}

bool tie_free(const SequentialRun& run) {
  return std::all_of(run.steps.begin(), run.steps.end(),
                     [](const SequentialStep& s) { return s.tied == 1; });
}

std::string committees_text(const Election& e,
                            const std::vector<Committee>& ws) {
  if (ws.empty()) return "{}";
  return RuleOutcome(ws).format(e);
}

int first_voter_with(const Election& e, CandidateSet ballot) {
  for (int i = 0; i < e.num_voters(); ++i) {
    if (e.ballot(i) == ballot) return i;
  }
  throw std::logic_error("fixture ballot not found");
}

Election load(const FixtureInfo& info, const std::string& name) {
  for (const auto& [n, text] : info.elections) {
    if (n == name) return parse_election(text);
  }
  throw std::logic_error("fixture election missing: " + name);
}

Rule rule(const char* id) { return parse_rule(id); }

// Failing clause of a single mutation, or "holds".
std::string mutation_clause(const Rule& r, const AxiomSpec& spec,
                            const Election& before_e, const Election& after_e,
                            CandidateSet g) {
  const RuleOutcome before = evaluate(r, before_e).outcome;
  const RuleOutcome after = evaluate(r, after_e).outcome;
  for (Clause c : {Clause::some_winner, Clause::all_winners}) {
    if (clause_fails(spec, c, g, before, after)) return "fails (" + clause_name(c) + ")";
  }
  return "holds";
}

const AxiomSpec kStrongSmwpi{MonotonicityAxiom::smwpi, Strength::strong};
const AxiomSpec kWeakSmwpi{MonotonicityAxiom::smwpi, Strength::weak};
const AxiomSpec kStrongSmwopi{MonotonicityAxiom::smwopi, Strength::strong};
const AxiomSpec kWeakSmwopi{MonotonicityAxiom::smwopi, Strength::weak};

// ---------------------------------------------------------------------------

const char* const kF1 = R"(# PAV strong SMWOPI counterexample
candidates: c1 c2 c3 c4 c5 c6 c7
k: 4
3: c1 c5
3: c1 c6
3: c1 c7
3: c2 c5
3: c2 c6
3: c2 c7
3: c3 c5
3: c3 c6
3: c3 c7
100: c4
1: c1 c2
1: c1 c2 c3
2: c5 c6
)";

void run_f1(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  r.equal("voters", "131", std::to_string(e.num_voters()));
  r.equal("committees", "35", std::to_string(enumerate_committees(e).size()));
  r.scored("pav(base)", e, "{{c1,c2,c3,c4}}", "391/3", pav(e));
  const int voter = first_voter_with(e, e.resolve({"c1", "c2"}));
  const CandidateSet g = e.resolve({"c3", "c4"});
  const Election after = extend_ballot(e, voter, g);
  r.equal("extended ballot", "{c1,c2,c3,c4}", after.format(after.ballot(voter)));
  r.scored("pav(extended)", after, "{{c4,c5,c6,c7}}", "131", pav(after));
  r.equal("pav strong-smwopi on G={c3,c4}", "fails (i)",
          mutation_clause(rule("pav"), kStrongSmwopi, e, after, g));
  r.truth("pav strong-smwopi holds on base", false,
          check_smwopi(rule("pav"), e, Strength::strong).holds);
  r.truth("pav strong-smwpi holds on base", true,
          check_smwpi(rule("pav"), e, Strength::strong).holds);
}

const char* const kF2 = R"(# CC strong SMWOPI counterexample, two consecutive extensions
candidates: a b c d e
k: 3
2: a d
2: a e
2: c d
2: c e
2: b
2: a
1: d
)";

void run_f2(const FixtureInfo& info, Recorder& r) {
  const Election e0 = load(info, "base");
  const CandidateSet a = e0.resolve({"a"});
  const CandidateSet g = e0.resolve({"b", "c"});
  const Election e1 = extend_ballot(e0, first_voter_with(e0, a), g);
  const Election e2 = extend_ballot(e1, first_voter_with(e1, a), g);
  r.scored("cc(base)", e0, "{{a,b,c}}", "1", chamberlin_courant(e0));
  r.scored("cc(step1)", e1, "{{a,b,c},{b,d,e}}", "1", chamberlin_courant(e1));
  r.scored("cc(step2)", e2, "{{b,d,e}}", "0", chamberlin_courant(e2));
  r.equal("cc strong-smwopi step1", "fails (ii)",
          mutation_clause(rule("cc"), kStrongSmwopi, e0, e1, g));
  r.equal("cc strong-smwopi step2", "fails (i)",
          mutation_clause(rule("cc"), kStrongSmwopi, e1, e2, g));
  r.equal("cc weak-smwopi step1", "holds",
          mutation_clause(rule("cc"), kWeakSmwopi, e0, e1, g));
  r.equal("cc weak-smwopi step2", "holds",
          mutation_clause(rule("cc"), kWeakSmwopi, e1, e2, g));
}

const char* const kF3 = R"(# MAV strong SMWOPI counterexample
candidates: c1 c2 c3 c4 c5 c6 c7
k: 5
1: c1
1: c2
1: c3
1: c5
1: c1 c4 c6
1: c1 c4 c7
1: c1 c5 c6
1: c1 c5 c7
1: c1 c6
)";

void run_f3(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  r.equal("hamming({c1..c5},{c1,c6})", "5",
          std::to_string(hamming(e.resolve({"c1", "c2", "c3", "c4", "c5"}),
                                 e.resolve({"c1", "c6"}))));
  r.equal("hamming({c1,c2,c3,c6,c7},{c5})", "6",
          std::to_string(hamming(e.resolve({"c1", "c2", "c3", "c6", "c7"}),
                                 e.resolve({"c5"}))));
  r.scored("mav(base)", e, "{{c1,c2,c3,c4,c5}}", "5", minimax_av(e));
  const int voter = first_voter_with(e, e.resolve({"c5"}));
  const CandidateSet g = e.resolve({"c1", "c2", "c3", "c4"});
  const Election after = extend_ballot(e, voter, g);
  r.scored("mav(extended)", after, "{{c1,c2,c3,c6,c7}}", "4", minimax_av(after));
  r.equal("mav strong-smwopi on G={c1,c2,c3,c4}", "fails (i)",
          mutation_clause(rule("mav"), kStrongSmwopi, e, after, g));
  r.truth("mav strong-smwopi holds on base", false,
          check_smwopi(rule("mav"), e, Strength::strong).holds);
  r.truth("mav weak-smwopi holds on base", true,
          check_smwopi(rule("mav"), e, Strength::weak).holds);
}

const char* const kF4 = R"(# Monroe weak SMWPI counterexample, two new voters
candidates: a b c d e f g h
k: 4
5: a e
4: a g
5: b e
4: b h
5: c f
4: c g
3: d f
3: d h
)";

void run_f4(const FixtureInfo& info, Recorder& r) {
  const Election e0 = load(info, "base");
  const CandidateSet g = e0.resolve({"e"});
  const Election e1 = add_new_voter(e0, g);
  const Election e2 = add_new_voter(e1, g);
  r.equal("voters after first entry", "34", std::to_string(e1.num_voters()));
  r.scored("monroe(base)", e0, "{{e,f,g,h}}", "1", monroe(e0));
  r.scored("monroe(step1)", e1, "{{a,b,c,d},{e,f,g,h}}", "2", monroe(e1));
  r.scored("monroe(step2)", e2, "{{a,b,c,d}}", "2", monroe(e2));
  r.equal("monroe_min_misrep(base,{e,f,g,h})", "1",
          std::to_string(
              monroe_min_misrep(e0, e0.resolve({"e", "f", "g", "h"}))
                  .misrepresentation));
  r.equal("monroe weak-smwpi step2", "fails (i)",
          mutation_clause(rule("monroe"), kWeakSmwpi, e1, e2, g));
  r.equal("monroe strong-smwpi step1", "fails (ii)",
          mutation_clause(rule("monroe"), kStrongSmwpi, e0, e1, g));
  r.truth("monroe weak-smwpi holds on step1", false,
          check_smwpi(rule("monroe"), e1, Strength::weak).holds);
}

const char* const kF5 = R"(# Monroe strong SMWOPI counterexample, two consecutive extensions
candidates: a b c d e
k: 3
2: a
2: a d
2: a e
4: b
1: b e
4: c d
3: c e
)";

void run_f5(const FixtureInfo& info, Recorder& r) {
  const Election e0 = load(info, "base");
  const CandidateSet a = e0.resolve({"a"});
  const CandidateSet g = e0.resolve({"b", "c"});
  const Election e1 = extend_ballot(e0, first_voter_with(e0, a), g);
  const Election e2 = extend_ballot(e1, first_voter_with(e1, a), g);
  r.scored("monroe(base)", e0, "{{a,b,c}}", "1", monroe(e0));
  r.scored("monroe(step1)", e1, "{{a,b,c},{b,d,e}}", "1", monroe(e1));
  r.scored("monroe(step2)", e2, "{{b,d,e}}", "0", monroe(e2));
  r.equal("monroe_min_misrep(step2,{b,d,e})", "0",
          std::to_string(
              monroe_min_misrep(e2, e2.resolve({"b", "d", "e"})).misrepresentation));
  r.equal("monroe strong-smwopi step1", "fails (ii)",
          mutation_clause(rule("monroe"), kStrongSmwopi, e0, e1, g));
  r.equal("monroe strong-smwopi step2", "fails (i)",
          mutation_clause(rule("monroe"), kStrongSmwopi, e1, e2, g));
  r.equal("monroe weak-smwopi step2", "holds",
          mutation_clause(rule("monroe"), kWeakSmwopi, e1, e2, g));
}

const char* const kF6 = R"(# SeqPAV and seq-Phragmen strong SMWPI counterexample
candidates: a b c d e
k: 4
7: a b d
4: a b e
3: a c d
5: a c e
)";

const char* const kF6Variant = R"(# same election plus candidate f and an {f} voter
candidates: a b c d e f
k: 4
7: a b d
4: a b e
3: a c d
5: a c e
1: f
)";

void run_f6(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  const Election v = load(info, "variant");
  const CandidateSet g = e.resolve({"c", "d"});
  const Election entered = add_new_voter(e, g);
  const Election extended =
      extend_ballot(v, first_voter_with(v, v.resolve({"f"})), g);
  struct Seq {
    const char* id;
    std::vector<SequentialRun> (*runs)(const Election&, TieMode, std::size_t);
  };
  for (const Seq& s : {Seq{"seqpav", seq_pav_runs}, Seq{"seqphragmen", seq_phragmen_runs}}) {
    const std::string id = s.id;
    const Rule rl = rule(s.id);
    struct Case {
      const char* name;
      const Election* election;
      const char* order;
      const char* outcome;
    };
    const Case cases[] = {{"base", &e, "a,b,c,d", "{{a,b,c,d}}"},
                          {"new {c,d} voter", &entered, "a,d,e,b", "{{a,b,d,e}}"},
                          {"variant", &v, "a,b,c,d", "{{a,b,c,d}}"},
                          {"variant extended", &extended, "a,d,e,b", "{{a,b,d,e}}"}};
    for (const Case& c : cases) {
      const auto runs = s.runs(*c.election, TieMode::put, 1000);
      const std::string label = id + "(" + c.name + ")";
      r.equal(label + " branches", "1", std::to_string(runs.size()));
      r.equal(label + " order", c.order, order_of(*c.election, runs.front()));
      r.truth(label + " tie-free", true, tie_free(runs.front()));
      r.outcome(label, *c.election, c.outcome, evaluate(rl, *c.election).outcome);
      r.outcome(label + " lex", *c.election, c.outcome,
                evaluate(parse_rule(s.id, TieMode::lex), *c.election).outcome);
    }
    r.equal(id + " strong-smwpi on G={c,d}", "fails (i)",
            mutation_clause(rl, kStrongSmwpi, e, entered, g));
    r.equal(id + " strong-smwopi on G={c,d}", "fails (i)",
            mutation_clause(rl, kStrongSmwopi, v, extended, g));
  }
}

const char* const kF7 = R"(# max-Phragmen strong SMWPI counterexample
candidates: a b c1 c2 c3 c4 c5
k: 6
13: c1 c2 c3 c4 c5
2: a b
2: a
1: b
)";

const char* const kF7Variant = R"(# same election plus candidate d and a {d} voter
candidates: a b c1 c2 c3 c4 c5 d
k: 6
13: c1 c2 c3 c4 c5
2: a b
2: a
1: b
1: d
)";

void run_f7(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  const Election v = load(info, "variant");
  const CandidateSet g = e.resolve({"a", "c1", "c2", "c3", "c4", "c5"});
  const Election entered = add_new_voter(e, g);
  const char* const kAfter =
      "{{a,b,c1,c2,c3,c4},{a,b,c1,c2,c3,c5},{a,b,c1,c2,c4,c5},"
      "{a,b,c1,c3,c4,c5},{a,b,c2,c3,c4,c5}}";
  // Under the min-max load objective {b,c1..c5} ties {a,c1..c5}: b's three
  // approvers carry 1/3 < 5/13.
  r.scored("maxphragmen(base)", e, "{{a,c1,c2,c3,c4,c5},{b,c1,c2,c3,c4,c5}}",
           "5/13", max_phragmen(e));
  r.equal("min_max_load(base,{a,c1..c5})", "5/13",
          min_max_load(e, g)->value.str());
  r.equal("min_max_load(base,{b,c1..c5})", "5/13",
          min_max_load(e, e.resolve({"b", "c1", "c2", "c3", "c4", "c5"}))
              ->value.str());
  r.scored("maxphragmen(new voter)", entered, kAfter, "1/3",
           max_phragmen(entered));
  r.equal("min_max_load(new voter,{a,c1..c5})", "5/14",
          min_max_load(entered, g)->value.str());
  r.equal("min_max_load(new voter,{a,b,c1..c4})", "1/3",
          min_max_load(entered, entered.resolve({"a", "b", "c1", "c2", "c3", "c4"}))
              ->value.str());
  r.equal("maxphragmen strong-smwpi on G={a,c1..c5}", "fails (i)",
          mutation_clause(rule("maxphragmen"), kStrongSmwpi, e, entered, g));
  r.equal("maxphragmen weak-smwpi on G={a,c1..c5}", "holds",
          mutation_clause(rule("maxphragmen"), kWeakSmwpi, e, entered, g));

  const CandidateSet gv = v.resolve({"a", "c1", "c2", "c3", "c4", "c5"});
  const Election extended = extend_ballot(v, first_voter_with(v, v.resolve({"d"})), gv);
  r.scored("maxphragmen(variant)", v, "{{a,c1,c2,c3,c4,c5},{b,c1,c2,c3,c4,c5}}",
           "5/13", max_phragmen(v));
  r.scored("maxphragmen(variant extended)", extended, kAfter, "1/3",
           max_phragmen(extended));
  r.equal("maxphragmen strong-smwopi on G={a,c1..c5}", "fails (i)",
          mutation_clause(rule("maxphragmen"), kStrongSmwopi, v, extended, gv));
}

const char* const kF8 = R"(# MAV committee monotonicity counterexample
candidates: a b c
k: 1
1: b
1: c
1: a b
1: a c
)";

void run_f8(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  r.scored("mav(k=1)", e, "{{a}}", "2", minimax_av(e.with_k(1)));
  r.scored("mav(k=2)", e, "{{b,c}}", "2", minimax_av(e.with_k(2)));
  const auto v = check_committee_monotonicity(rule("mav"), e, 1, 2);
  r.truth("mav committee monotonicity k=1..2", false, v.holds);
  r.equal("mav committee monotonicity clause", "1",
          v.witness ? clause_name(v.witness->clause) : "none");
}

const char* const kF9 = R"(# CC and Monroe committee monotonicity counterexample
candidates: a b c
k: 1
3: a b
3: a c
2: b
2: c
)";

void run_f9(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  r.scored("cc(k=1)", e, "{{a}}", "4", chamberlin_courant(e.with_k(1)));
  r.scored("cc(k=2)", e, "{{b,c}}", "0", chamberlin_courant(e.with_k(2)));
  r.scored("monroe(k=1)", e, "{{a}}", "4", monroe(e.with_k(1)));
  r.scored("monroe(k=2)", e, "{{b,c}}", "0", monroe(e.with_k(2)));
  for (const char* id : {"cc", "monroe"}) {
    const auto v = check_committee_monotonicity(rule(id), e, 1, 2);
    r.truth(std::string(id) + " committee monotonicity k=1..2", false, v.holds);
  }
}

const char* const kPrAv = R"(# AV, SAV and CC versus perfect representation
candidates: a1 a2 a3 b1 b2 b3
k: 3
2: a1 a2 a3
1: b1 b2 b3
)";

const char* const kPrCommitteesAv =
    "{{a1,a2,b1},{a1,a2,b2},{a1,a2,b3},{a1,a3,b1},{a1,a3,b2},{a1,a3,b3},"
    "{a2,a3,b1},{a2,a3,b2},{a2,a3,b3}}";

void run_f10(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  r.scored("av(base)", e, "{{a1,a2,a3}}", "6", approval_voting(e));
  r.scored("sav(base)", e, "{{a1,a2,a3}}", "2", satisfaction_av(e));
  const auto jr = check_jr(e, e.resolve({"a1", "a2", "a3"}));
  r.truth("jr({a1,a2,a3})", false, jr.holds);
  r.equal("jr witness voters", "2",
          jr.witness && jr.witness->voters.size() == 1
              ? std::to_string(jr.witness->voters.front())
              : "none");
  r.equal("pr committees", kPrCommitteesAv, committees_text(e, pr_committees(e)));
  r.truth("av respects pr", false, rule_respects_pr_on(e, rule("av")).holds);
  r.truth("sav respects pr", false, rule_respects_pr_on(e, rule("sav")).holds);
}

const char* const kF11 = R"(# MAV versus perfect representation
candidates: a1 a2 b1 b2 b3
k: 3
2: a1 a2
1: b1 b2 b3
)";

void run_f11(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  r.scored("mav(base)", e,
           "{{a1,b1,b2},{a1,b1,b3},{a1,b2,b3},{a2,b1,b2},{a2,b1,b3},{a2,b2,b3}}",
           "3", minimax_av(e));
  r.equal("pr committees", "{{a1,a2,b1},{a1,a2,b2},{a1,a2,b3}}",
          committees_text(e, pr_committees(e)));
  r.truth("pr({a1,b1,b2})", false,
          provides_pr(e, e.resolve({"a1", "b1", "b2"})).holds);
  r.truth("mav respects pr", false, rule_respects_pr_on(e, rule("mav")).holds);
}

const char* const kF12 = R"(# SeqPAV versus perfect representation
candidates: a b c
k: 2
2: a b
2: a c
1: b
1: c
)";

void run_f12(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  const auto runs = seq_pav_runs(e, TieMode::put);
  r.equal("seqpav first pick", "a",
          runs.empty() ? "none" : e.name(runs.front().steps.front().candidate));
  r.outcome("seqpav(base)", e, "{{a,b},{a,c}}", seq_pav(e));
  r.equal("pr committees", "{{b,c}}", committees_text(e, pr_committees(e)));
  r.truth("pr({b,c})", true, provides_pr(e, e.resolve({"b", "c"})).holds);
  r.truth("seqpav respects pr", false,
          rule_respects_pr_on(e, rule("seqpav")).holds);
}

const char* const kF13 = R"(# perfect representation versus strong SMWPI
candidates: c1 c2 c3 c4 c5
k: 3
2: c1 c4
2: c1 c5
3: c2 c4
1: c2 c5
2: c3 c5
2: c3
)";

void run_f13(const FixtureInfo& info, Recorder& r) {
  const Election e0 = load(info, "base");
  const CandidateSet g = e0.resolve({"c1", "c3"});
  Election e3 = e0;
  for (int i = 0; i < 3; ++i) e3 = add_new_voter(e3, g);
  r.equal("voters after entries", "15", std::to_string(e3.num_voters()));
  r.equal("pr committees(base)", "{{c1,c2,c3}}",
          committees_text(e0, pr_committees(e0)));
  r.truth("pr({c1,c2,c4})", false,
          provides_pr(e0, e0.resolve({"c1", "c2", "c4"})).holds);
  r.equal("pr committees(entered)", "{{c3,c4,c5}}",
          committees_text(e3, pr_committees(e3)));
  r.scored("cc(base)", e0, "{{c1,c2,c3},{c3,c4,c5}}", "0",
           chamberlin_courant(e0));
  r.scored("cc-prties(base)", e0, "{{c1,c2,c3}}", "0", cc_pr_tiebreak(e0));
  r.scored("cc-prties(entered)", e3, "{{c3,c4,c5}}", "0", cc_pr_tiebreak(e3));
  // G is inside the only PR committee before the entries and outside it after.
  const RuleOutcome forced_before(pr_committees(e0));
  const RuleOutcome forced_after(pr_committees(e3));
  r.truth("pr-forced pair violates strong-smwpi (i)", true,
          clause_fails(kStrongSmwpi, Clause::some_winner, g, forced_before,
                       forced_after));
}

const char* const kF14 = R"(# perfect representation versus committee monotonicity
candidates: c1 c2 c3 c4 c5
k: 2
1: c1 c4
1: c1 c5
1: c2 c4
1: c2 c5
1: c3 c4
1: c3 c5
)";

const char* const kF14Repaired = R"(# perfect representation versus committee monotonicity, forced at both sizes
candidates: c1 c2 c3 c4
k: 2
4: c1
1: c1 c2
1: c1 c3
3: c2 c4
3: c3 c4
)";

void run_f14(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  const Election k2 = e.with_k(2);
  const Election k3 = e.with_k(3);
  r.equal("pr committees(k=2)", "{{c4,c5}}", committees_text(k2, pr_committees(k2)));
  r.truth("pr(k=3,{c1,c2,c3})", true,
          provides_pr(k3, k3.resolve({"c1", "c2", "c3"})).holds);
  // Not forced: each of c1, c2, c3 can take its own two voters while c4 and
  // c5 split the other four.
  r.equal("pr committees(k=3)", "{{c1,c2,c3},{c1,c4,c5},{c2,c4,c5},{c3,c4,c5}}",
          committees_text(k3, pr_committees(k3)));
  r.truth("pr pair at k=2,3 violates committee monotonicity (1)", false,
          clause_fails({MonotonicityAxiom::committee, Strength::strong},
                       Clause::grow, k2.resolve({"c4", "c5"}),
                       RuleOutcome(pr_committees(k2)),
                       RuleOutcome(pr_committees(k3))));

  const Election f = load(info, "repaired");
  const Election f2 = f.with_k(2);
  const Election f3 = f.with_k(3);
  r.equal("repaired pr committees(k=2)", "{{c1,c4}}",
          committees_text(f2, pr_committees(f2)));
  r.equal("repaired pr committees(k=3)", "{{c1,c2,c3}}",
          committees_text(f3, pr_committees(f3)));
  r.truth("repaired pr-forced pair violates committee monotonicity (1)", true,
          clause_fails({MonotonicityAxiom::committee, Strength::strong},
                       Clause::grow, f2.resolve({"c1", "c4"}),
                       RuleOutcome(pr_committees(f2)),
                       RuleOutcome(pr_committees(f3))));
  r.outcome("cc-prties(repaired,k=2)", f2, "{{c1,c4}}", cc_pr_tiebreak(f2).outcome);
  r.outcome("cc-prties(repaired,k=3)", f3, "{{c1,c2,c3}}", cc_pr_tiebreak(f3).outcome);
  r.truth("cc-prties committee monotonicity k=2..3", false,
          check_committee_monotonicity(rule("cc-prties"), f, 2, 3).holds);
}

const char* const kF15First = R"(# tweaked AV: first pattern election
candidates: c1 c2 c3 c4
k: 2
1: c1 c2
1: c3 c4
1: c1 c3 c4
1: c2 c3 c4
)";

const char* const kF15Second = R"(# tweaked AV: second pattern election
candidates: c1 c2 c3 c4
k: 2
1: c1 c2
1: c1 c2 c3 c4
1: c1 c3 c4
1: c2 c3 c4
)";

void run_f15(const FixtureInfo& info, Recorder& r) {
  const Election e1 = load(info, "first");
  const Election e2 = load(info, "second");
  r.outcome("av-not-weak-smwopi(first)", e1, "{{c1,c2},{c3,c4}}",
            av_not_weak_smwopi(e1));
  r.outcome("av-not-weak-smwopi(second)", e2, "{{c3,c4}}", av_not_weak_smwopi(e2));
  r.outcome("av(first)", e1, "{{c3,c4}}", approval_voting(e1).outcome);
  const CandidateSet g = e1.resolve({"c1", "c2"});
  const int voter = first_voter_with(e1, e1.resolve({"c3", "c4"}));
  const Election extended = extend_ballot(e1, voter, g);
  r.truth("extension of first equals second up to voter order", true,
          same_multiset(extended, e2));
  r.equal("av-not-weak-smwopi weak-smwopi on G={c1,c2}", "fails (i)",
          mutation_clause(rule("av-not-weak-smwopi"), kWeakSmwopi, e1, extended, g));
  // Relabeled and reordered copy of the first pattern.
  const Election shuffled = parse_election(
      "candidates: c1 c2 c3 c4\nk: 2\n1: c2 c4\n1: c1 c2 c4\n1: c2 c3 c4\n"
      "1: c1 c3\n");
  r.outcome("av-not-weak-smwopi(relabeled first)", shuffled, "{{c1,c3},{c2,c4}}",
            av_not_weak_smwopi(shuffled));
}

void run_f16(const FixtureInfo& info, Recorder& r) {
  const Election e = load(info, "base");
  const ScoredOutcome cc = chamberlin_courant(e);
  r.truth("cc outputs {a1,b1,b2}", true, cc.outcome.contains(e.resolve({"a1", "b1", "b2"})));
  r.truth("pr({a1,b1,b2})", false, provides_pr(e, e.resolve({"a1", "b1", "b2"})).holds);
  const auto v = rule_respects_pr_on(e, rule("cc"));
  r.truth("cc respects pr", false, v.holds);
  r.equal("cc first non-PR winner", "{a1,b1,b2}",
          v.offending ? e.format(*v.offending) : "none");
  r.truth("cc-prties respects pr", true,
          rule_respects_pr_on(e, rule("cc-prties")).holds);
  r.outcome("cc-prties(base)", e, kPrCommitteesAv, cc_pr_tiebreak(e).outcome);
}

struct Entry {
  FixtureInfo info;
  void (*run)(const FixtureInfo&, Recorder&);
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = {
      {{"F1", "PAV fails strong SMWOPI (131 voters, scores 391/3 and 131)",
        {"pav-strong-smwopi"}, {{"base", kF1}}},
       run_f1},
      {{"F2", "CC fails strong SMWOPI under two consecutive extensions",
        {"cc-strong-smwopi"}, {{"base", kF2}}},
       run_f2},
      {{"F3", "MAV fails strong SMWOPI (max distance 5 then 4)",
        {"mav-strong-smwopi"}, {{"base", kF3}}},
       run_f3},
      {{"F4", "Monroe fails weak SMWPI (two {e} voters enter)",
        {"monroe-weak-smwpi"}, {{"base", kF4}}},
       run_f4},
      {{"F5", "Monroe fails strong SMWOPI under two consecutive extensions",
        {"monroe-strong-smwopi"}, {{"base", kF5}}},
       run_f5},
      {{"F6", "SeqPAV and seq-Phragmen fail strong SMWPI and SMWOPI",
        {"sequential-strong-smwpi", "sequential-strong-smwopi"},
        {{"base", kF6}, {"variant", kF6Variant}}},
       run_f6},
      {{"F7", "max-Phragmen fails strong SMWPI and SMWOPI (loads 5/13, 1/3, 5/14)",
        {"maxphragmen-strong-smwpi", "maxphragmen-strong-smwopi"},
        {{"base", kF7}, {"variant", kF7Variant}}},
       run_f7},
      {{"F8", "MAV fails committee monotonicity", {"mav-committee"},
        {{"base", kF8}}},
       run_f8},
      {{"F9", "CC and Monroe fail committee monotonicity",
        {"cc-monroe-committee"}, {{"base", kF9}}},
       run_f9},
      {{"F10", "AV and SAV fail perfect representation", {"pr-av-sav"},
        {{"base", kPrAv}}},
       run_f10},
      {{"F11", "MAV fails perfect representation", {"pr-mav"}, {{"base", kF11}}},
       run_f11},
      {{"F12", "SeqPAV fails perfect representation", {"pr-seqpav"},
        {{"base", kF12}}},
       run_f12},
      {{"F13", "Perfect representation is incompatible with strong SMWPI",
        {"pr-vs-strong-smwpi"}, {{"base", kF13}}},
       run_f13},
      {{"F14", "Perfect representation is incompatible with committee monotonicity",
        {"pr-vs-committee"}, {{"base", kF14}, {"repaired", kF14Repaired}}},
       run_f14},
      {{"F15", "Tweaked AV that fails weak SMWOPI",
        {"av-tweak-weak-smwopi", "not-weak-smwpi-rule"},
        {{"first", kF15First}, {"second", kF15Second}}},
       run_f15},
      {{"F16", "CC provides PR only with a PR-favouring tie-break", {"pr-cc"},
        {{"base", kPrAv}}},
       run_f16},
  };
  return entries;
}

}  // namespace

std::vector<FixtureInfo> list_fixtures() {
  std::vector<FixtureInfo> out;
  for (const auto& e : catalog()) out.push_back(e.info);
  return out;
}

FixtureReport run_fixture(const std::string& id) {
  for (const auto& entry : catalog()) {
    if (entry.info.id != id) continue;
    FixtureReport report{entry.info.id, entry.info.citation, {}, 0};
    Recorder rec(report.results);
    const auto start = std::chrono::steady_clock::now();
    rec.guard(id, [&] { entry.run(entry.info, rec); });
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
  }
  throw std::invalid_argument("unknown fixture: " + id);
}

std::vector<FixtureReport> run_all_fixtures(Exec exec) {
  const auto& entries = catalog();
  std::vector<FixtureReport> out(entries.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
  for (long i = 0; i < static_cast<long>(entries.size()); ++i) {
    out[i] = run_fixture(entries[i].info.id);
  }
  return out;
}

}  // namespace amw
