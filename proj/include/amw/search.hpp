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

// Small-election generation and counterexample hunting.
//
// Exhaustive order: n + m ascending, then m ascending, then the sorted
// ballot-mask vector in lexicographic order, then k ascending. With dedup
// on, a ballot multiset is kept only if no candidate relabeling yields a
// lexicographically smaller sorted mask vector.
//
// Random elections: a SplitMix64 stream seeded with
//   seed ^ (index * 0xD1B54A32D192ED03)
// draws, in order, n in [n_min, n_max], m in [max(m_min, k_min), m_max],
// k in [k_min, min(k_max, m)] (each as lo + next() % (hi - lo + 1)), then
// for every voter and candidate an approval with probability num/den via
// next() % den < num. Empty ballots are redrawn.

#ifndef AMW_SEARCH_HPP_
#define AMW_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "amw/election.hpp"
#include "amw/monotonicity.hpp"
#include "amw/rational.hpp"
#include "amw/representation.hpp"
#include "amw/rules.hpp"

namespace amw {

struct GenerationBounds {
  int n_min = 1;
  int n_max = 1;
  int m_min = 1;
  int m_max = 1;
  int k_min = 1;
  int k_max = 1;
  Rational p{1, 2};  // approval probability for random elections
  std::uint64_t seed = 0;
  bool dedup = true;

  /// Throws std::invalid_argument on empty or out-of-range bounds.
  void validate() const;
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Pull-based exhaustive enumeration.
class ElectionEnumerator {
 public:
  explicit ElectionEnumerator(GenerationBounds bounds);
  std::optional<Election> next();

 private:
  bool advance_multiset();
  bool advance_shape();
  bool canonical() const;
  void prepare_relabelings();

  GenerationBounds bounds_;
  int n_ = 0;
  int m_ = 0;
  int k_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::uint64_t>> relabel_;  // [perm][mask]
  bool started_ = false;
  bool done_ = false;
};

std::vector<Election> enumerate_elections(const GenerationBounds& bounds);

/// Smallest sorted ballot-mask vector over all candidate relabelings.
std::vector<std::uint64_t> canonical_ballots(const Election& e);

Election random_election(const GenerationBounds& bounds, std::uint64_t index);

/// What to hunt for: a monotonicity axiom ("strong-smwopi", "committee", ...)
/// or a representation axiom of the rule's winners ("jr", "pjr", "ejr", "pr").
struct HuntConfig {
  Rule rule;
  std::string axiom;
  GenerationBounds bounds;
  bool exhaustive = false;
  std::uint64_t budget = 100000;          // mutated-election evaluations
  std::uint64_t max_instances = 0;        // 0: unlimited
  std::optional<double> time_limit_seconds;  // breaks determinism if hit
  Exec exec = Exec::serial;
};

struct RepresentationFailure {
  Election election;
  Committee committee;
  RepresentationVerdict verdict;
};

struct HuntResult {
  std::optional<MonotonicityWitness> witness;
  std::optional<RepresentationFailure> representation;
  std::uint64_t instance_index = 0;   // index of the violating instance
  std::uint64_t instances_checked = 0;
  std::uint64_t evaluations = 0;
  double elapsed_seconds = 0;
  bool exhausted = false;  // enumeration ran out
  bool stopped_by_budget = false;
  bool stopped_by_time = false;

  bool found() const { return witness || representation; }
};

HuntResult hunt(const HuntConfig& config);

/// Greedy minimization: drops voters, then candidates, then members of G,
/// keeping only changes after which the same mutation still violates the
/// axiom; repeats until no single removal works.
MonotonicityWitness shrink(const Rule& rule, const MonotonicityWitness& witness);

/// Election without candidate c (ballots relabeled, k kept). nullopt if this
/// empties a ballot or makes k exceed the roster.
std::optional<Election> remove_candidate(const Election& e, int c);
/// Election without voter i. nullopt if it was the only voter.
std::optional<Election> remove_voter(const Election& e, int i);

}  // namespace amw

#endif  // AMW_SEARCH_HPP_
