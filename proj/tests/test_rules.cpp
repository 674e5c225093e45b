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

#include <set>

#include "amw/abme.hpp"
#include "amw/counting.hpp"
#include "amw/rules.hpp"
#include "amw/search.hpp"
#include "amw/solvers.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace amw;

namespace {

template <class Fn>
void sweep(int n_max, int m_max, Fn&& fn) {
  GenerationBounds b;
  b.n_max = n_max;
  b.m_max = m_max;
  b.k_max = m_max;
  ElectionEnumerator en(b);
  while (auto e = en.next()) fn(*e);
}

template <class Fn>
void random_sweep(int count, int n_max, int m_max, std::uint64_t seed, Fn&& fn) {
  GenerationBounds b;
  b.n_max = n_max;
  b.m_max = m_max;
  b.k_max = m_max;
  b.seed = seed;
  for (int i = 0; i < count; ++i) fn(random_election(b, i));
}

void check_against(const Election& e, const ScoredOutcome& got,
                   const oracle::Result& want) {
  CAPTURE(serialize_election(e));
  CHECK(oracle::as_sets(got.outcome.committees()) == want.winners);
  REQUIRE(got.objective);
  CHECK(got.objective->str() == want.value.str());
}

Election parse(const char* text) { return parse_election(text); }

}  // namespace

TEST_CASE("optimizing rules match direct per-voter oracles on all small elections") {
  int count = 0;
  sweep(4, 4, [&](const Election& e) {
    ++count;
    check_against(e, approval_voting(e), oracle::av(e));
    check_against(e, satisfaction_av(e), oracle::sav(e));
    check_against(e, pav(e), oracle::pav(e));
    check_against(e, chamberlin_courant(e), oracle::cc(e));
    check_against(e, minimax_av(e), oracle::mav(e));
    check_against(e, monroe(e), oracle::monroe(e));
  });
  CHECK(count > 1000);
}

TEST_CASE("optimizing rules match oracles on random elections") {
  random_sweep(150, 7, 6, 11, [&](const Election& e) {
    check_against(e, approval_voting(e), oracle::av(e));
    check_against(e, satisfaction_av(e), oracle::sav(e));
    check_against(e, pav(e), oracle::pav(e));
    check_against(e, chamberlin_courant(e), oracle::cc(e));
    check_against(e, minimax_av(e), oracle::mav(e));
    check_against(e, monroe(e), oracle::monroe(e));
  });
}

TEST_CASE("pruned monroe equals the plain committee scan") {
  random_sweep(300, 9, 7, 12, [&](const Election& e) {
    CAPTURE(serialize_election(e));
    const auto a = monroe(e);
    const auto b = monroe_exhaustive(e);
    CHECK(a.outcome == b.outcome);
    CHECK(*a.objective == *b.objective);
  });
}

TEST_CASE("max-phragmen matches the voter-subset load oracle") {
  random_sweep(150, 7, 5, 13, [&](const Election& e) {
    if (e.approved_candidates().size() < e.k()) {
      CHECK_THROWS_AS(max_phragmen(e), InfeasibleElection);
      return;
    }
    const auto want = oracle::optimize(
        e, [&](const oracle::Set& w) { return oracle::max_load(e, w); }, false);
    check_against(e, max_phragmen(e), want);
  });
}

TEST_CASE("sequential rules match the branching oracles") {
  random_sweep(200, 7, 6, 14, [&](const Election& e) {
    CAPTURE(serialize_election(e));
    const auto want_pav = oracle::seq_pav_put(e);
    CHECK(oracle::as_sets(seq_pav(e).committees()) ==
          std::vector<oracle::Set>(want_pav.begin(), want_pav.end()));
    const auto want_phr = oracle::seq_phragmen_put(e);
    if (want_phr.empty()) {
      CHECK_THROWS_AS(seq_phragmen(e), InfeasibleElection);
      return;
    }
    CHECK(oracle::as_sets(seq_phragmen(e).committees()) ==
          std::vector<oracle::Set>(want_phr.begin(), want_phr.end()));
  });
}

TEST_CASE("lex outcome is one of the put outcomes") {
  random_sweep(300, 8, 6, 15, [&](const Election& e) {
    CAPTURE(serialize_election(e));
    const auto lex = seq_pav(e, TieMode::lex);
    REQUIRE(lex.size() == 1);
    CHECK(seq_pav(e, TieMode::put).contains(lex.committees()[0]));
    if (e.approved_candidates().size() < e.k()) return;
    const auto lex2 = seq_phragmen(e, TieMode::lex);
    REQUIRE(lex2.size() == 1);
    CHECK(seq_phragmen(e, TieMode::put).contains(lex2.committees()[0]));
  });
}

TEST_CASE("seq-phragmen selection loads never decrease along a branch") {
  random_sweep(300, 8, 6, 16, [&](const Election& e) {
    if (e.approved_candidates().size() < e.k()) return;
    for (const auto& run : seq_phragmen_runs(e, TieMode::put)) {
      for (std::size_t i = 1; i < run.steps.size(); ++i) {
        CHECK(run.steps[i - 1].value <= run.steps[i].value);
      }
    }
  });
}

TEST_CASE("counting engine reproduces the direct rules") {
  const auto f_av = counting_av();
  const auto f_sav = counting_sav();
  const auto f_cc = counting_cc();
  const auto f_pav = counting_pav();
  sweep(4, 4, [&](const Election& e) {
    CAPTURE(serialize_election(e));
    CHECK(counting_rule(f_av, e).outcome == approval_voting(e).outcome);
    CHECK(counting_rule(f_sav, e).outcome == satisfaction_av(e).outcome);
    CHECK(counting_rule(f_pav, e).outcome == pav(e).outcome);
    const auto cc = chamberlin_courant(e);
    const auto counted = counting_rule(f_cc, e);
    CHECK(counted.outcome == cc.outcome);
    CHECK(*counted.objective == Rational(e.num_voters()) - *cc.objective);
  });
}

TEST_CASE("counting rule with the harmonic function on the PAV fixture") {
  const Election e = read_election_file(AMW_DATA_DIR "/F1-base.abme");
  const auto out = counting_rule(counting_pav(), e);
  CHECK(out.outcome == pav(e).outcome);
  CHECK(out.objective->str() == "391/3");
}

TEST_CASE("constant counting function ties every committee") {
  const CountingFunction flat{"flat", [](int, int) { return Rational(1); }};
  const Election e = parse("candidates: a b c d\nk: 2\n1: a\n1: b c\n");
  CHECK(counting_rule(flat, e).outcome.size() == 6);
}

TEST_CASE("counting rule rejects functions that decrease in x") {
  const CountingFunction down{"down", [](int x, int) { return Rational(-x); }};
  const Election e = parse("candidates: a b\nk: 1\n1: a\n");
  CHECK_THROWS_AS(counting_rule(down, e), std::domain_error);
}

TEST_CASE("counting function property report") {
  CHECK(counting_function_properties(counting_av(), 8, 8).weak_smwopi_hypotheses());
  CHECK(counting_function_properties(counting_sav(), 8, 8).weak_smwopi_hypotheses());
  CHECK(counting_function_properties(counting_cc(), 8, 8).weak_smwopi_hypotheses());
  CHECK(counting_function_properties(counting_pav(), 8, 8).weak_smwopi_hypotheses());

  const CountingFunction grow{"y", [](int, int y) { return Rational(y); }};
  const auto g = counting_function_properties(grow, 4, 4);
  REQUIRE(g.nonincreasing_in_y);
  CHECK(g.nonincreasing_in_y->first.x == 0);
  CHECK(g.nonincreasing_in_y->first.y == 1);
  CHECK(g.nonincreasing_in_y->second.x == 0);
  CHECK(g.nonincreasing_in_y->second.y == 2);

  const CountingFunction neg{"-y", [](int, int y) { return Rational(-y); }};
  const auto h = counting_function_properties(neg, 4, 4);
  CHECK(!h.nonincreasing_in_y);
  REQUIRE(h.shift_dominant);
  CHECK(h.shift_dominant->first.x == 1);
  CHECK(h.shift_dominant->first.y == 2);
  CHECK(h.shift_dominant->second.x == 0);
  CHECK(h.shift_dominant->second.y == 1);
}

TEST_CASE("serial and parallel evaluation agree for every rule") {
  std::vector<Rule> rules;
  for (const auto& id : rule_ids()) rules.push_back(parse_rule(id));
  random_sweep(80, 9, 8, 17, [&](const Election& e) {
    CAPTURE(serialize_election(e));
    for (const auto& r : rules) {
      CAPTURE(r.id());
      std::optional<ScoredOutcome> a, b;
      try {
        a = evaluate(r, e, Exec::serial);
      } catch (const InfeasibleElection&) {
        CHECK_THROWS_AS(evaluate(r, e, Exec::parallel), InfeasibleElection);
        continue;
      }
      b = evaluate(r, e, Exec::parallel);
      CHECK(a->outcome == b->outcome);
      CHECK(a->objective == b->objective);
    }
  });
}

TEST_CASE("every returned committee attains the objective and others are worse") {
  random_sweep(60, 8, 8, 18, [&](const Election& e) {
    const auto bs = oracle::ballots_of(e);
    const auto out = pav(e);
    for (Committee w : enumerate_committees(e)) {
      Rational s = 0;
      for (const auto& b : bs) s += oracle::harmonic(oracle::overlap(b, w.members()));
      if (out.outcome.contains(w)) {
        CHECK(s == *out.objective);
      } else {
        CHECK(s < *out.objective);
      }
    }
  });
}

TEST_CASE("rule identifiers round trip") {
  for (const auto& id : rule_ids()) {
    CHECK(parse_rule(id).id() == id);
  }
  CHECK(parse_rule("counting:sav").kind == RuleKind::counting);
  CHECK_THROWS_AS(parse_rule("borda"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rule("counting:nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tie_mode("random"), std::invalid_argument);
  CHECK(parse_rule("seqpav", TieMode::lex).ties == TieMode::lex);
}

TEST_CASE("trivial single-candidate election") {
  const Election e = parse("candidates: a\nk: 1\n1: a\n");
  for (const auto& id : rule_ids()) {
    CAPTURE(id);
    CHECK(evaluate(parse_rule(id), e).outcome.format(e) == "{{a}}");
  }
}

TEST_CASE("roster equal to k forces the roster") {
  const Election e = parse("candidates: a b c\nk: 3\n2: a\n1: b\n");
  for (const char* id : {"av", "sav", "mav", "cc", "monroe", "pav", "seqpav"}) {
    CAPTURE(id);
    CHECK(evaluate(parse_rule(id), e).outcome.format(e) == "{{a,b,c}}");
  }
  CHECK_THROWS_AS(max_phragmen(e), InfeasibleElection);
  CHECK_THROWS_AS(seq_phragmen(e), InfeasibleElection);
}

TEST_CASE("rule that fails weak SMWPI scores singletons against shared approvals") {
  const Election e = parse("candidates: a b c\nk: 1\n1: a\n1: b c\n");
  const auto out = rule_not_weak_smwpi(e);
  CHECK(out.outcome.format(e) == "{{a}}");
  CHECK(out.objective->str() == "1");

  const Election singles = parse("candidates: a b c\nk: 2\n3: a\n2: b\n1: c\n");
  CHECK(rule_not_weak_smwpi(singles).outcome == approval_voting(singles).outcome);

  const Election wide = parse("candidates: a b c d\nk: 2\n3: a b\n2: b c\n1: c d\n");
  // Lowest approval scores: d (1), then a and c tie (3).
  CHECK(rule_not_weak_smwpi(wide).outcome.format(wide) == "{{a,d},{c,d}}");
}

TEST_CASE("tweaked AV equals AV away from its two patterns") {
  random_sweep(200, 6, 5, 19, [&](const Election& e) {
    if (e.num_voters() == 4 && e.num_candidates() == 4 && e.k() == 2) return;
    CHECK(av_not_weak_smwopi(e) == approval_voting(e).outcome);
  });
}

TEST_CASE("cc with PR tie-breaking keeps only PR winners when any exist") {
  random_sweep(200, 8, 5, 20, [&](const Election& e) {
    CAPTURE(serialize_election(e));
    const auto cc = chamberlin_courant(e);
    const auto pr = cc_pr_tiebreak(e);
    CHECK(pr.objective == cc.objective);
    if (e.num_voters() % e.k() != 0) {
      CHECK(pr.outcome == cc.outcome);
      return;
    }
    std::vector<Committee> keep;
    for (Committee w : cc.outcome) {
      if (oracle::provides_pr(e, w.members())) keep.push_back(w);
    }
    CHECK(pr.outcome == (keep.empty() ? cc.outcome : RuleOutcome(keep)));
  });
}

TEST_CASE("pav uses exact arithmetic for large committees") {
  // k = 20 with unanimous ballots: H(20) per voter.
  std::vector<std::string> names = numbered_names(20);
  const Election e(names, {CandidateSet::first(20), CandidateSet::first(20)}, 20);
  CHECK(pav(e).objective->str() == (oracle::harmonic(20) * Rational(2)).str());
}
