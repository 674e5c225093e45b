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

#ifndef AMW_OUTCOME_HPP_
#define AMW_OUTCOME_HPP_

#include <optional>
#include <string>
#include <vector>

#include "amw/election.hpp"
#include "amw/rational.hpp"

namespace amw {

/// The set of all tied winning committees of a rule, kept in canonical
/// (lexicographic) order without duplicates. Never empty.
class RuleOutcome {
 public:
  explicit RuleOutcome(std::vector<Committee> winners);

  const std::vector<Committee>& committees() const { return winners_; }
  std::size_t size() const { return winners_.size(); }
  auto begin() const { return winners_.begin(); }
  auto end() const { return winners_.end(); }
  bool unique() const { return winners_.size() == 1; }

  bool contains(Committee w) const;
  bool some_superset_of(CandidateSet g) const;
  bool all_superset_of(CandidateSet g) const;
  bool some_intersects(CandidateSet g) const;
  bool all_intersect(CandidateSet g) const;
  /// Union of all winning committees.
  CandidateSet winners_union() const;

  /// "{{a,b},{c,d}}".
  std::string format(const Election& e) const;

  friend bool operator==(const RuleOutcome&, const RuleOutcome&) = default;

 private:
  std::vector<Committee> winners_;
};

/// Outcome plus the optimal objective value, for rules that optimize one.
/// Every committee in `outcome` attains `objective` exactly.
struct ScoredOutcome {
  RuleOutcome outcome;
  std::optional<Rational> objective;
};

/// Raised when no committee is admissible (e.g. Phragmén rules with fewer
/// than k approved candidates).
class InfeasibleElection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parallelism request for kernels. Results never depend on it.
enum class Exec { serial, parallel };

}  // namespace amw

#endif  // AMW_OUTCOME_HPP_
