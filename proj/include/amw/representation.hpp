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

// Justified representation (JR, PJR, EJR) and perfect representation (PR).

#ifndef AMW_REPRESENTATION_HPP_
#define AMW_REPRESENTATION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amw/election.hpp"
#include "amw/rules.hpp"

namespace amw {

enum class Axiom { jr, pjr, ejr, pr };

std::string axiom_name(Axiom a);
/// "jr", "pjr", "ejr" or "pr". Throws std::invalid_argument otherwise.
Axiom parse_axiom(std::string_view text);

struct CohesiveWitness {
  int level = 1;
  std::vector<int> voters;  // ascending
  CandidateSet common;      // intersection of the voters' ballots
};

struct RepresentationVerdict {
  Axiom axiom = Axiom::jr;
  bool holds = true;
  std::optional<CohesiveWitness> witness;          // JR/PJR/EJR failures
  std::optional<std::vector<int>> pr_assignment;   // PR successes
  std::optional<Committee> offending;              // rule-level PR failures
};

struct Cohesion {
  bool cohesive = false;
  CandidateSet common;
};

/// |voters| >= level * n / k and the voters share at least `level`
/// candidates. Requires non-empty voters and 1 <= level <= k.
Cohesion is_cohesive(const Election& e, const std::vector<int>& voters,
                     int level);

/// Group-counting checks over candidate sets T. The first violation in
/// (level, T) order is reported, trimmed to its ceil(level*n/k) lowest voters.
RepresentationVerdict check_jr(const Election& e, Committee w);
RepresentationVerdict check_pjr(const Election& e, Committee w);
RepresentationVerdict check_ejr(const Election& e, Committee w);

/// Definition checks over every non-empty voter subset. Requires n <= 20.
RepresentationVerdict check_jr_brute_force(const Election& e, Committee w);
RepresentationVerdict check_pjr_brute_force(const Election& e, Committee w);
RepresentationVerdict check_ejr_brute_force(const Election& e, Committee w);

/// Re-checks a reported violation from its fields alone.
bool witness_violates(const Election& e, Committee w, Axiom axiom,
                      const CohesiveWitness& witness);

/// The following throw std::invalid_argument unless k divides n.
RepresentationVerdict provides_pr(const Election& e, Committee w);
std::vector<Committee> pr_committees(const Election& e);
RepresentationVerdict rule_respects_pr_on(const Election& e, const Rule& rule,
                                          Exec exec = Exec::serial);

}  // namespace amw

#endif  // AMW_REPRESENTATION_HPP_
