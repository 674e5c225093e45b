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

#include "amw/monotonicity.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>
#include <vector>

namespace amw {

AxiomSpec parse_axiom_spec(std::string_view text) {
  if (text == "candidate") return {MonotonicityAxiom::candidate, Strength::strong};
  if (text == "committee") return {MonotonicityAxiom::committee, Strength::strong};
  if (text == "strong-smwpi") return {MonotonicityAxiom::smwpi, Strength::strong};
  if (text == "weak-smwpi") return {MonotonicityAxiom::smwpi, Strength::weak};
  if (text == "strong-smwopi") return {MonotonicityAxiom::smwopi, Strength::strong};
  if (text == "weak-smwopi") return {MonotonicityAxiom::smwopi, Strength::weak};
  throw std::invalid_argument("unknown monotonicity axiom: " + std::string(text));
}

std::string axiom_spec_name(const AxiomSpec& spec) {
  const std::string prefix = spec.strength == Strength::strong ? "strong-" : "weak-";
  switch (spec.axiom) {
    case MonotonicityAxiom::candidate:
      return "candidate";
    case MonotonicityAxiom::committee:
      return "committee";
    case MonotonicityAxiom::smwpi:
      return prefix + "smwpi";
    case MonotonicityAxiom::smwopi:
      return prefix + "smwopi";
  }
  return "?";
}

std::string clause_name(Clause c) {
  switch (c) {
    case Clause::some_winner:
      return "i";
    case Clause::all_winners:
      return "ii";
    case Clause::grow:
      return "1";
    case Clause::shrink:
      return "2";
  }
  return "?";
}

namespace {

struct Mutation {
  CandidateSet g;
  int voter = -1;  // -1: a new voter approving exactly g
};

Election apply(const Election& e, const Mutation& m) {
  return m.voter < 0 ? add_new_voter(e, m.g) : extend_ballot(e, m.voter, m.g);
}

// Non-empty subsets of winning committees, in lex_less order.
std::vector<CandidateSet> winner_subsets(const RuleOutcome& outcome) {
  std::set<std::uint64_t> seen;
  for (Committee w : outcome) {
    const std::uint64_t full = w.bits();
    for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
      seen.insert(sub);
    }
  }
  std::vector<CandidateSet> out;
  for (std::uint64_t bits : seen) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Ballot extensions by g, skipping voters whose ballot repeats an earlier one.
void add_extensions(const Election& e, CandidateSet g,
                    std::vector<Mutation>& out) {
  std::set<std::uint64_t> ballots;
  for (int i = 0; i < e.num_voters(); ++i) {
    const CandidateSet b = e.ballot(i);
    if (b.intersects(g) || !ballots.insert(b.bits()).second) continue;
    out.push_back({g, i});
  }
}

std::optional<Clause> failing_clause(Strength strength, CandidateSet g,
                                     const RuleOutcome& before,
                                     const RuleOutcome& after) {
  if (!before.some_superset_of(g)) return std::nullopt;
  const bool in_all = before.all_superset_of(g);
  if (strength == Strength::strong) {
    if (!after.some_superset_of(g)) return Clause::some_winner;
    if (in_all && !after.all_superset_of(g)) return Clause::all_winners;
  } else {
    if (!after.some_intersects(g)) return Clause::some_winner;
    if (in_all && !after.all_intersect(g)) return Clause::all_winners;
  }
  return std::nullopt;
}

// Evaluates the rule on each mutation and hands (index, election, outcome) to
// visit in index order until it returns false. The parallel path evaluates
// fixed-size chunks so results and stopping points match the serial loop.
template <class Visit>
void scan(const Rule& rule, const Election& e,
          const std::vector<Mutation>& mutations, Exec exec, Visit&& visit) {
  const std::size_t total = mutations.size();
  if (exec == Exec::serial || total < 8) {
    for (std::size_t i = 0; i < total; ++i) {
      Election mutated = apply(e, mutations[i]);
      RuleOutcome after = evaluate(rule, mutated, Exec::serial).outcome;
      if (!visit(i, std::move(mutated), std::move(after))) return;
    }
    return;
  }
  const std::size_t chunk =
      static_cast<std::size_t>(std::max(1, omp_get_max_threads())) * 8;
  for (std::size_t start = 0; start < total; start += chunk) {
    const std::size_t stop = std::min(total, start + chunk);
    std::vector<std::optional<Election>> elections(stop - start);
    std::vector<std::optional<RuleOutcome>> outcomes(stop - start);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = static_cast<long>(start); i < static_cast<long>(stop); ++i) {
      try {
        Election mutated = apply(e, mutations[i]);
        outcomes[i - start] = evaluate(rule, mutated, Exec::serial).outcome;
        elections[i - start] = std::move(mutated);
      } catch (...) {
#pragma omp critical(amw_scan_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = start; i < stop; ++i) {
      if (!visit(i, std::move(*elections[i - start]),
                 std::move(*outcomes[i - start]))) {
        return;
      }
    }
  }
}

JointVerdict check_support(const Rule& rule, const Election& e,
                           MonotonicityAxiom axiom, Exec exec) {
  const RuleOutcome before = evaluate(rule, e, exec).outcome;
  std::vector<Mutation> mutations;
  if (axiom == MonotonicityAxiom::candidate) {
    for (int c : before.winners_union()) {
      add_extensions(e, CandidateSet::single(c), mutations);
    }
  } else {
    for (CandidateSet g : winner_subsets(before)) {
      if (axiom == MonotonicityAxiom::smwpi) {
        mutations.push_back({g, -1});
      } else {
        add_extensions(e, g, mutations);
      }
    }
  }

  JointVerdict out;
  MonotonicityVerdict* verdicts[2] = {&out.strong, &out.weak};
  const Strength strengths[2] = {Strength::strong, Strength::weak};
  const bool single = axiom == MonotonicityAxiom::candidate;
  scan(rule, e, mutations, exec,
       [&](std::size_t index, Election&& mutated, RuleOutcome&& after) {
         bool open = false;
         for (int s = 0; s < 2; ++s) {
           MonotonicityVerdict& v = *verdicts[s];
           if (!v.holds) continue;
           v.mutations_checked = index + 1;
           const Mutation& m = mutations[index];
           const auto clause = failing_clause(strengths[s], m.g, before, after);
           if (clause) {
             v.holds = false;
             v.witness = MonotonicityWitness{
                 {axiom, strengths[s]},
                 m.g,
                 m.voter < 0 ? std::nullopt : std::optional<int>(m.voter),
                 *clause,
                 e,
                 before,
                 after,
                 mutated};
           } else {
             open = true;
           }
         }
         // Candidate monotonicity has one strength; mirror strong into weak.
         if (single) {
           out.weak = out.strong;
           return out.strong.holds;
         }
         return open;
       });
  if (single) out.weak = out.strong;
  return out;
}

}  // namespace

MonotonicityVerdict check_candidate_monotonicity(const Rule& rule,
                                                 const Election& e, Exec exec) {
  return check_support(rule, e, MonotonicityAxiom::candidate, exec).strong;
}

JointVerdict check_smwpi_joint(const Rule& rule, const Election& e, Exec exec) {
  return check_support(rule, e, MonotonicityAxiom::smwpi, exec);
}

JointVerdict check_smwopi_joint(const Rule& rule, const Election& e,
                                Exec exec) {
  return check_support(rule, e, MonotonicityAxiom::smwopi, exec);
}

MonotonicityVerdict check_smwpi(const Rule& rule, const Election& e,
                                Strength strength, Exec exec) {
  JointVerdict j = check_smwpi_joint(rule, e, exec);
  return strength == Strength::strong ? j.strong : j.weak;
}

MonotonicityVerdict check_smwopi(const Rule& rule, const Election& e,
                                 Strength strength, Exec exec) {
  JointVerdict j = check_smwopi_joint(rule, e, exec);
  return strength == Strength::strong ? j.strong : j.weak;
}

namespace {

// A member of `from` with no superset (grow) or subset (shrink) in `to`.
std::optional<Committee> unmatched(const RuleOutcome& from,
                                   const RuleOutcome& to, bool grow) {
  for (Committee w : from) {
    const bool matched = std::any_of(to.begin(), to.end(), [&](Committee x) {
      return grow ? w.subset_of(x) : x.subset_of(w);
    });
    if (!matched) return w;
  }
  return std::nullopt;
}

}  // namespace

MonotonicityVerdict check_committee_monotonicity(const Rule& rule,
                                                 const Election& e, int k_from,
                                                 int k_to, Exec exec) {
  if (k_from < 1 || k_from >= k_to || k_to > e.num_candidates()) {
    throw std::invalid_argument("need 1 <= k_from < k_to <= |C|");
  }
  MonotonicityVerdict out;
  Election smaller = e.with_k(k_from);
  RuleOutcome before = evaluate(rule, smaller, exec).outcome;
  for (int k = k_from; k < k_to; ++k) {
    Election larger = e.with_k(k + 1);
    RuleOutcome after = evaluate(rule, larger, exec).outcome;
    ++out.mutations_checked;
    std::optional<Committee> bad = unmatched(before, after, true);
    Clause clause = Clause::grow;
    if (!bad) {
      bad = unmatched(after, before, false);
      clause = Clause::shrink;
    }
    if (bad) {
      out.holds = false;
      out.witness = MonotonicityWitness{
          {MonotonicityAxiom::committee, Strength::strong},
          *bad,
          std::nullopt,
          clause,
          smaller,
          before,
          after,
          larger};
      return out;
    }
    smaller = std::move(larger);
    before = std::move(after);
  }
  return out;
}

MonotonicityVerdict check_axiom(const Rule& rule, const Election& e,
                                const AxiomSpec& spec, Exec exec) {
  switch (spec.axiom) {
    case MonotonicityAxiom::candidate:
      return check_candidate_monotonicity(rule, e, exec);
    case MonotonicityAxiom::smwpi:
      return check_smwpi(rule, e, spec.strength, exec);
    case MonotonicityAxiom::smwopi:
      return check_smwopi(rule, e, spec.strength, exec);
    case MonotonicityAxiom::committee:
      if (e.num_candidates() < 2) return {};
      return check_committee_monotonicity(rule, e, 1, e.num_candidates(), exec);
  }
  throw std::logic_error("unhandled axiom");
}

bool clause_fails(const AxiomSpec& spec, Clause clause, CandidateSet g,
                  const RuleOutcome& before, const RuleOutcome& after) {
  if (spec.axiom == MonotonicityAxiom::committee) {
    if (clause == Clause::grow) {
      return before.contains(g) && unmatched(RuleOutcome({g}), after, true);
    }
    if (clause == Clause::shrink) {
      return after.contains(g) && unmatched(RuleOutcome({g}), before, false);
    }
    return false;
  }
  if (g.empty()) return false;
  const Strength strength = spec.axiom == MonotonicityAxiom::candidate
                                ? Strength::strong
                                : spec.strength;
  if (clause == Clause::some_winner) {
    if (!before.some_superset_of(g)) return false;
    return strength == Strength::strong ? !after.some_superset_of(g)
                                        : !after.some_intersects(g);
  }
  if (clause == Clause::all_winners) {
    if (!before.all_superset_of(g)) return false;
    return strength == Strength::strong ? !after.all_superset_of(g)
                                        : !after.all_intersect(g);
  }
  return false;
}

bool validate_witness(const Rule& rule, const MonotonicityWitness& w) {
  try {
    Election expected = w.original;
    switch (w.spec.axiom) {
      case MonotonicityAxiom::committee:
        if (w.original.k() >= w.original.num_candidates()) return false;
        expected = w.original.with_k(w.original.k() + 1);
        break;
      case MonotonicityAxiom::smwpi:
        if (w.voter || w.g.size() > w.original.k()) return false;
        expected = add_new_voter(w.original, w.g);
        break;
      case MonotonicityAxiom::candidate:
        if (w.g.size() != 1) return false;
        [[fallthrough]];
      case MonotonicityAxiom::smwopi:
        if (!w.voter || w.g.size() > w.original.k()) return false;
        expected = extend_ballot(w.original, *w.voter, w.g);
        break;
    }
    if (!(expected == w.mutated)) return false;
    const RuleOutcome before = evaluate(rule, w.original).outcome;
    const RuleOutcome after = evaluate(rule, w.mutated).outcome;
    if (!(before == w.before) || !(after == w.after)) return false;
    return clause_fails(w.spec, w.clause, w.g, before, after);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace amw
