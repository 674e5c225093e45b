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

// Approval-based committee rules. Every rule returns the full set of tied
// winning committees.

#ifndef AMW_RULES_HPP_
#define AMW_RULES_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "amw/counting.hpp"
#include "amw/election.hpp"
#include "amw/outcome.hpp"
#include "amw/rational.hpp"

namespace amw {

enum class RuleKind {
  av,
  sav,
  mav,
  cc,
  cc_prties,
  monroe,
  pav,
  seqpav,
  max_phragmen,
  seq_phragmen,
  counting,
  not_weak_smwpi,
  av_not_weak_smwopi,
};

/// put: branch on every tie and return all reachable committees.
/// lex: take the lowest-index candidate among the tied ones.
enum class TieMode { put, lex };

struct Rule {
  RuleKind kind = RuleKind::av;
  TieMode ties = TieMode::put;
  std::shared_ptr<const CountingFunction> counting;  // kind == counting

  /// CLI identifier, e.g. "seqpav" or "counting:pav".
  std::string id() const;
  bool is_sequential() const {
    return kind == RuleKind::seqpav || kind == RuleKind::seq_phragmen;
  }
};

/// Parses a CLI identifier. Throws std::invalid_argument on unknown ids.
Rule parse_rule(std::string_view id, TieMode ties = TieMode::put);
TieMode parse_tie_mode(std::string_view text);

/// Identifiers accepted by parse_rule (counting rules listed per builtin).
std::vector<std::string> rule_ids();

ScoredOutcome evaluate(const Rule& rule, const Election& e,
                       Exec exec = Exec::serial);

ScoredOutcome approval_voting(const Election& e);
ScoredOutcome satisfaction_av(const Election& e);
ScoredOutcome minimax_av(const Election& e, Exec exec = Exec::serial);
ScoredOutcome chamberlin_courant(const Election& e, Exec exec = Exec::serial);
ScoredOutcome monroe(const Election& e, Exec exec = Exec::serial);
/// Plain scan of every committee; reference for the pruned monroe().
ScoredOutcome monroe_exhaustive(const Election& e, Exec exec = Exec::serial);
ScoredOutcome pav(const Election& e, Exec exec = Exec::serial);
/// Throws InfeasibleElection when fewer than k candidates are approved.
ScoredOutcome max_phragmen(const Election& e, Exec exec = Exec::serial);
RuleOutcome seq_pav(const Election& e, TieMode ties = TieMode::put);
/// Throws InfeasibleElection when fewer than k candidates are approved.
RuleOutcome seq_phragmen(const Election& e, TieMode ties = TieMode::put);
ScoredOutcome rule_not_weak_smwpi(const Election& e);
RuleOutcome av_not_weak_smwopi(const Election& e);
/// CC, restricted to PR-providing winners when k | n and any exist.
ScoredOutcome cc_pr_tiebreak(const Election& e, Exec exec = Exec::serial);

/// One selection of a sequential rule.
struct SequentialStep {
  int candidate = -1;
  Rational value;  // SeqPAV score or seq-Phragmén candidate load
  int tied = 1;    // number of candidates sharing the best value
};

struct SequentialRun {
  std::vector<SequentialStep> steps;
  Committee committee;
};

/// Every branch of the sequential rule (a single branch under lex), in
/// depth-first order with tied candidates taken by increasing index.
/// Throws std::length_error past max_runs branches.
std::vector<SequentialRun> seq_pav_runs(const Election& e, TieMode ties,
                                        std::size_t max_runs = 100000);
std::vector<SequentialRun> seq_phragmen_runs(const Election& e, TieMode ties,
                                             std::size_t max_runs = 100000);

}  // namespace amw

#endif  // AMW_RULES_HPP_
