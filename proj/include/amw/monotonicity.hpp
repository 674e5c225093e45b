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

// Monotonicity checks on a single election: candidate monotonicity, support
// monotonicity with a new voter (SMWPI) or an extended ballot (SMWOPI), and
// committee monotonicity across consecutive committee sizes.
//
// G ranges over the non-empty subsets of winning committees; for other G
// both clause premises are false. Voters with identical ballots yield the
// same mutated election up to voter order, so only the first of each is
// evaluated. The reported witness is the first failing (G, voter) pair with
// G in lex_less order and voters ascending.

#ifndef AMW_MONOTONICITY_HPP_
#define AMW_MONOTONICITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "amw/election.hpp"
#include "amw/outcome.hpp"
#include "amw/rules.hpp"

namespace amw {

enum class MonotonicityAxiom { candidate, smwpi, smwopi, committee };
enum class Strength { strong, weak };

/// (i)/(ii) for the support axioms; grow/shrink are conditions 1 and 2 of
/// committee monotonicity.
enum class Clause { some_winner, all_winners, grow, shrink };

struct AxiomSpec {
  MonotonicityAxiom axiom = MonotonicityAxiom::smwpi;
  Strength strength = Strength::strong;
};

/// "candidate", "committee", "strong-smwpi", "weak-smwopi", ...
AxiomSpec parse_axiom_spec(std::string_view text);
std::string axiom_spec_name(const AxiomSpec& spec);
std::string clause_name(Clause c);

struct MonotonicityWitness {
  AxiomSpec spec;
  CandidateSet g;            // G, or the offending committee for committee
  std::optional<int> voter;  // SMWOPI and candidate monotonicity
  Clause clause = Clause::some_winner;
  Election original;
  RuleOutcome before;
  RuleOutcome after;
  Election mutated;          // committee monotonicity: original at size k+1
};

struct MonotonicityVerdict {
  bool holds = true;
  std::optional<MonotonicityWitness> witness;
  /// Mutated elections evaluated, up to and including the reported failure.
  std::uint64_t mutations_checked = 0;
};

struct JointVerdict {
  MonotonicityVerdict strong;
  MonotonicityVerdict weak;
};

MonotonicityVerdict check_candidate_monotonicity(const Rule& rule,
                                                 const Election& e,
                                                 Exec exec = Exec::serial);

/// Strong and weak from one pass over the mutations.
JointVerdict check_smwpi_joint(const Rule& rule, const Election& e,
                               Exec exec = Exec::serial);
JointVerdict check_smwopi_joint(const Rule& rule, const Election& e,
                                Exec exec = Exec::serial);

MonotonicityVerdict check_smwpi(const Rule& rule, const Election& e,
                                Strength strength, Exec exec = Exec::serial);
MonotonicityVerdict check_smwopi(const Rule& rule, const Election& e,
                                 Strength strength, Exec exec = Exec::serial);

/// Checks every consecutive pair of sizes in [k_from, k_to]; the election's
/// own k is ignored. Requires 1 <= k_from < k_to <= |C|.
MonotonicityVerdict check_committee_monotonicity(const Rule& rule,
                                                 const Election& e, int k_from,
                                                 int k_to,
                                                 Exec exec = Exec::serial);

/// Dispatch on spec; committee monotonicity runs from 1 to |C|.
MonotonicityVerdict check_axiom(const Rule& rule, const Election& e,
                                const AxiomSpec& spec,
                                Exec exec = Exec::serial);

/// Clause logic alone: does (before, after) violate the clause for g?
bool clause_fails(const AxiomSpec& spec, Clause clause, CandidateSet g,
                  const RuleOutcome& before, const RuleOutcome& after);

/// Rebuilds the mutation from `original`, re-runs the rule on both elections
/// and re-evaluates the clause. True iff the witness is a genuine violation.
bool validate_witness(const Rule& rule, const MonotonicityWitness& witness);

}  // namespace amw

#endif  // AMW_MONOTONICITY_HPP_
