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

#ifndef AMW_ELECTION_HPP_
#define AMW_ELECTION_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amw/candidate_set.hpp"

namespace amw {

using Committee = CandidateSet;

/// A distinct ballot and the number of voters casting it.
struct BallotGroup {
  CandidateSet ballot;
  int count = 0;
};

/// An approval-based election: candidate roster, one ballot per voter (voter
/// i is position i) and the committee size k. Immutable once built.
///
/// Invariants: 1 <= k <= |roster| <= 64, at least one voter, every ballot is
/// a non-empty subset of the roster, names are unique [A-Za-z0-9_]+ tokens.
class Election {
 public:
  /// Validates all invariants; throws std::invalid_argument.
  Election(std::vector<std::string> candidates,
           std::vector<CandidateSet> ballots, int k);

  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_voters() const { return static_cast<int>(ballots_.size()); }
  int k() const { return k_; }

  const std::vector<std::string>& candidates() const { return candidates_; }
  const std::string& name(int c) const { return candidates_.at(c); }
  std::span<const CandidateSet> ballots() const { return ballots_; }
  CandidateSet ballot(int voter) const { return ballots_.at(voter); }
  CandidateSet roster() const { return CandidateSet::first(num_candidates()); }

  std::optional<int> find(std::string_view name) const;
  /// Resolves names to a set; throws std::invalid_argument on unknown names.
  CandidateSet resolve(const std::vector<std::string>& names) const;

  /// Same ballots with another committee size.
  Election with_k(int k) const;

  /// Distinct ballots with multiplicities, in order of first appearance.
  std::vector<BallotGroup> profile() const;
  /// Number of voters approving each candidate.
  std::vector<int> approval_scores() const;
  /// Union of all ballots.
  CandidateSet approved_candidates() const;

  /// "{a,b,c}" with members in roster order.
  std::string format(CandidateSet s) const;

  friend bool operator==(const Election&, const Election&) = default;

 private:
  std::vector<std::string> candidates_;
  std::vector<CandidateSet> ballots_;
  int k_;
};

/// Names c1..cm.
std::vector<std::string> numbered_names(int m);

/// The election with one extra voter approving exactly g.
Election add_new_voter(const Election& e, CandidateSet g);

/// The election in which `voter` additionally approves g. Requires g to be
/// non-empty and disjoint from the voter's ballot.
Election extend_ballot(const Election& e, int voter, CandidateSet g);

/// All size-k committees in lexicographic order of sorted member indices.
std::vector<Committee> enumerate_committees(int num_candidates, int k);
inline std::vector<Committee> enumerate_committees(const Election& e) {
  return enumerate_committees(e.num_candidates(), e.k());
}

/// Binomial coefficient; exact for the small arguments used here.
long long binomial(int n, int r);

}  // namespace amw

#endif  // AMW_ELECTION_HPP_
