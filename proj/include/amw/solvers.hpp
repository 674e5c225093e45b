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

// Per-committee subproblems: Monroe's balanced assignment, the Phragmén
// min-max load with a primal witness and a dual certificate, and perfect
// representation assignments. All exact.

#ifndef AMW_SOLVERS_HPP_
#define AMW_SOLVERS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "amw/election.hpp"
#include "amw/rational.hpp"

namespace amw {

/// Voter -> representative mapping where every committee member represents
/// between floor(n/k) and ceil(n/k) voters.
struct BalancedAssignment {
  std::vector<int> representative;  // indexed by voter
};

struct MonroeSolution {
  int misrepresentation = 0;
  BalancedAssignment assignment;
};

/// Minimum number of voters assigned a representative they do not approve,
/// over all balanced assignments to w. Min-cost flow with lower bounds.
MonroeSolution monroe_min_misrep(const Election& e, Committee w);

/// Value-only variant on a ballot profile (n voters in total).
int monroe_misrep_value(std::span<const BallotGroup> profile, int n,
                        Committee w);

/// x[i][c]: the part of candidate c's unit load carried by voter i.
struct LoadDistribution {
  Committee committee;
  std::vector<int> members;                // committee members, ascending
  std::vector<std::vector<Rational>> x;    // [voter][member position]

  Rational load(int voter, int candidate) const;
  Rational voter_load(int voter) const;
  Rational max_voter_load() const;
};

/// A voter set S together with the committee members approved only inside
/// S. Any load distribution puts |tight| units on S, so some voter in S
/// carries at least |tight| / |S|.
struct DualCertificate {
  std::vector<int> voters;
  CandidateSet tight;

  Rational value() const {
    return Rational(static_cast<long>(tight.size()),
                    static_cast<long>(voters.size()));
  }
};

struct MinMaxLoad {
  Rational value;
  LoadDistribution primal;
  DualCertificate dual;
};

/// Optimal maximum voter load for w, with a primal distribution attaining it
/// and a matching dual certificate. Returns nullopt iff some member of w has
/// no approver. The primal is checked against the load constraints and the
/// dual value on every call; a mismatch throws std::logic_error.
std::optional<MinMaxLoad> min_max_load(const Election& e, Committee w);

/// Value only: max over non-empty T subset of w of |T| / |approvers(T)|.
std::optional<Rational> min_max_load_value(std::span<const BallotGroup> profile,
                                           Committee w);

/// Oracle: the dual bound maximized over every non-empty voter subset
/// (2^n of them). Requires n <= 24.
std::optional<Rational> min_max_load_brute_force(const Election& e,
                                                 Committee w);

/// Checks 0 <= x <= 1, x = 0 off the ballot, and unit column sums.
bool satisfies_load_constraints(const Election& e, const LoadDistribution& d);

/// Number of certified min_max_load() calls so far (process-wide).
std::uint64_t load_certificates_checked();

/// When enabled, min_max_load() and min_max_load_value() take their optimal
/// value from the unrestricted 2^n sweep instead of the committee-subset dual.
void set_oracle_mode(bool enabled);
bool oracle_mode();

/// A partition of the voters into k blocks of n/k, each unanimously approving
/// a distinct member of w, given as voter -> member. nullopt if none exists.
/// Throws std::invalid_argument unless k divides n.
std::optional<std::vector<int>> pr_assignment(const Election& e, Committee w);

/// Same test on a profile, without building the witness.
bool pr_feasible(std::span<const BallotGroup> profile, int n, Committee w);

}  // namespace amw

#endif  // AMW_SOLVERS_HPP_
