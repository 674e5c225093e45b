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

#include "amw/abme.hpp"
#include "amw/search.hpp"
#include "amw/solvers.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace amw;

namespace {

std::vector<Election> randoms(int count, int n_max, int m_max, std::uint64_t seed) {
  GenerationBounds b;
  b.n_max = n_max;
  b.m_max = m_max;
  b.k_max = m_max;
  b.seed = seed;
  std::vector<Election> out;
  for (int i = 0; i < count; ++i) out.push_back(random_election(b, i));
  return out;
}

// Constraint check written out independently of the library.
bool loads_valid(const Election& e, const LoadDistribution& d) {
  for (int c : d.committee) {
    Rational column = 0;
    for (int i = 0; i < e.num_voters(); ++i) {
      const Rational x = d.load(i, c);
      if (x < Rational(0) || x > Rational(1)) return false;
      if (!e.ballot(i).contains(c) && x != Rational(0)) return false;
      column += x;
    }
    if (column != Rational(1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("min_max_load: primal meets dual and the subset oracle") {
  const std::uint64_t before = load_certificates_checked();
  int calls = 0;
  for (const Election& e : randoms(300, 6, 5, 31)) {
    for (Committee w : enumerate_committees(e)) {
      CAPTURE(serialize_election(e));
      CAPTURE(e.format(w));
      const auto got = min_max_load(e, w);
      const auto want = oracle::max_load(e, w.members());
      REQUIRE(got.has_value() == want.has_value());
      CHECK(min_max_load_brute_force(e, w) == want);
      if (!got) continue;
      ++calls;
      CHECK(got->value == *want);
      CHECK(loads_valid(e, got->primal));
      CHECK(satisfies_load_constraints(e, got->primal));
      CHECK(got->primal.max_voter_load() == got->value);
      CHECK(got->dual.value() == got->value);
      // The tight members are approved only inside the certificate's voters.
      for (int c : got->dual.tight) {
        CHECK(w.contains(c));
        for (int i = 0; i < e.num_voters(); ++i) {
          if (e.ballot(i).contains(c)) {
            CHECK(std::find(got->dual.voters.begin(), got->dual.voters.end(), i) !=
                  got->dual.voters.end());
          }
        }
      }
      CHECK(min_max_load_value(e.profile(), w) == got->value);
    }
  }
  CHECK(load_certificates_checked() - before == static_cast<std::uint64_t>(calls));
}

TEST_CASE("oracle mode routes min_max_load through the subset sweep") {
  const Election e = read_election_file(AMW_DATA_DIR "/F7-base.abme");
  const Committee w = e.resolve({"a", "c1", "c2", "c3", "c4", "c5"});
  const auto fast = min_max_load(e, w);
  set_oracle_mode(true);
  const auto slow = min_max_load(e, w);
  const auto slow_value = min_max_load_value(e.profile(), w);
  set_oracle_mode(false);
  REQUIRE(fast);
  REQUIRE(slow);
  CHECK(fast->value.str() == "5/13");
  CHECK(slow->value == fast->value);
  CHECK(*slow_value == fast->value);
}

TEST_CASE("min_max_load has no value when a member has no approver") {
  const Election e = parse_election("candidates: a b c\nk: 2\n2: a\n");
  CHECK(!min_max_load(e, CandidateSet{0, 1}));
  CHECK(!min_max_load_value(e.profile(), CandidateSet{0, 1}));
}

TEST_CASE("monroe_min_misrep equals balanced-map enumeration") {
  for (const Election& e : randoms(300, 6, 5, 32)) {
    if (e.k() > 3) continue;
    for (Committee w : enumerate_committees(e)) {
      CAPTURE(serialize_election(e));
      CAPTURE(e.format(w));
      const auto got = monroe_min_misrep(e, w);
      const int want = oracle::monroe_misrep(e, w.members());
      CHECK(got.misrepresentation == want);
      CHECK(monroe_misrep_value(e.profile(), e.num_voters(), w) == want);
      // The witness assignment is balanced and attains the value.
      const int n = e.num_voters();
      const int k = e.k();
      std::vector<int> block(e.num_candidates(), 0);
      int miss = 0;
      REQUIRE(static_cast<int>(got.assignment.representative.size()) == n);
      for (int i = 0; i < n; ++i) {
        const int r = got.assignment.representative[i];
        REQUIRE(w.contains(r));
        ++block[r];
        miss += !e.ballot(i).contains(r);
      }
      for (int c : w) {
        CHECK(block[c] >= n / k);
        CHECK(block[c] <= (n + k - 1) / k);
      }
      CHECK(miss == want);
    }
  }
}

TEST_CASE("pr_assignment agrees with exact-partition enumeration") {
  int feasible = 0;
  for (const Election& e : randoms(400, 8, 5, 33)) {
    if (e.num_voters() % e.k() != 0) {
      CHECK_THROWS_AS(pr_assignment(e, CandidateSet::first(e.k())), std::invalid_argument);
      continue;
    }
    for (Committee w : enumerate_committees(e)) {
      const bool want = oracle::provides_pr(e, w.members());
      const auto got = pr_assignment(e, w);
      CHECK(got.has_value() == want);
      CHECK(pr_feasible(e.profile(), e.num_voters(), w) == want);
      if (!got) continue;
      ++feasible;
      std::vector<int> block(e.num_candidates(), 0);
      for (int i = 0; i < e.num_voters(); ++i) {
        const int c = (*got)[i];
        CHECK(w.contains(c));
        CHECK(e.ballot(i).contains(c));
        ++block[c];
      }
      for (int c : w) CHECK(block[c] == e.num_voters() / e.k());
    }
  }
  CHECK(feasible > 0);
}
