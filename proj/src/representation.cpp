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

#include "amw/representation.hpp"

#include <cstdint>
#include <stdexcept>

#include "amw/solvers.hpp"

namespace amw {

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::jr:
      return "jr";
    case Axiom::pjr:
      return "pjr";
    case Axiom::ejr:
      return "ejr";
    case Axiom::pr:
      return "pr";
  }
  return "?";
}

Axiom parse_axiom(std::string_view text) {
  if (text == "jr") return Axiom::jr;
  if (text == "pjr") return Axiom::pjr;
  if (text == "ejr") return Axiom::ejr;
  if (text == "pr") return Axiom::pr;
  throw std::invalid_argument("unknown axiom: " + std::string(text));
}

namespace {

// size * k >= level * n, i.e. size >= level * n / k without rounding.
bool large_enough(const Election& e, long size, int level) {
  return size * e.k() >= static_cast<long>(level) * e.num_voters();
}

long min_group_size(const Election& e, int level) {
  const long num = static_cast<long>(level) * e.num_voters();
  return (num + e.k() - 1) / e.k();
}

CandidateSet common_ballot(const Election& e, const std::vector<int>& voters) {
  CandidateSet common = e.roster();
  for (int i : voters) common = common & e.ballot(i);
  return common;
}

CohesiveWitness make_witness(const Election& e, std::vector<int> voters,
                             int level) {
  voters.resize(min_group_size(e, level));
  CohesiveWitness w{level, std::move(voters), CandidateSet()};
  w.common = common_ballot(e, w.voters);
  return w;
}

RepresentationVerdict ejr_like(const Election& e, Committee w, Axiom axiom,
                               int max_level) {
  RepresentationVerdict out{axiom, true, {}, {}, {}};
  for (int level = 1; level <= max_level; ++level) {
    for (CandidateSet t : enumerate_committees(e.num_candidates(), level)) {
      std::vector<int> group;
      for (int i = 0; i < e.num_voters(); ++i) {
        const CandidateSet b = e.ballot(i);
        if (t.subset_of(b) && (b & w).size() < level) group.push_back(i);
      }
      if (large_enough(e, static_cast<long>(group.size()), level)) {
        out.holds = false;
        out.witness = make_witness(e, std::move(group), level);
        return out;
      }
    }
  }
  return out;
}

}  // namespace

Cohesion is_cohesive(const Election& e, const std::vector<int>& voters,
                     int level) {
  if (voters.empty()) throw std::invalid_argument("empty voter group");
  if (level < 1 || level > e.k()) throw std::invalid_argument("bad level");
  Cohesion out;
  out.common = common_ballot(e, voters);
  out.cohesive = large_enough(e, static_cast<long>(voters.size()), level) &&
                 out.common.size() >= level;
  return out;
}

RepresentationVerdict check_jr(const Election& e, Committee w) {
  return ejr_like(e, w, Axiom::jr, 1);
}

RepresentationVerdict check_ejr(const Election& e, Committee w) {
  return ejr_like(e, w, Axiom::ejr, e.k());
}

RepresentationVerdict check_pjr(const Election& e, Committee w) {
  // A violating group only uses winners from some U subset of w with
  // |U| = level - 1; count the supporters of T whose winners lie inside U.
  RepresentationVerdict out{Axiom::pjr, true, {}, {}, {}};
  const auto members = w.members();
  for (int level = 1; level <= e.k(); ++level) {
    const auto subsets =
        enumerate_committees(static_cast<int>(members.size()), level - 1);
    for (CandidateSet t : enumerate_committees(e.num_candidates(), level)) {
      for (CandidateSet pick : subsets) {
        CandidateSet u;
        for (int pos : pick) u = u.with(members[pos]);
        std::vector<int> group;
        for (int i = 0; i < e.num_voters(); ++i) {
          const CandidateSet b = e.ballot(i);
          if (t.subset_of(b) && (b & w).subset_of(u)) group.push_back(i);
        }
        if (large_enough(e, static_cast<long>(group.size()), level)) {
          out.holds = false;
          out.witness = make_witness(e, std::move(group), level);
          return out;
        }
      }
    }
  }
  return out;
}

namespace {

RepresentationVerdict brute_force(const Election& e, Committee w, Axiom axiom) {
  const int n = e.num_voters();
  if (n > 20) throw std::invalid_argument("brute-force check needs n <= 20");
  RepresentationVerdict out{axiom, true, {}, {}, {}};
  const int max_level = axiom == Axiom::jr ? 1 : e.k();
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    std::vector<int> voters;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) voters.push_back(i);
    }
    const CandidateSet common = common_ballot(e, voters);
    CandidateSet covered;
    int best = 0;
    for (int i : voters) {
      covered = covered | (e.ballot(i) & w);
      best = std::max(best, (e.ballot(i) & w).size());
    }
    for (int level = 1; level <= max_level; ++level) {
      if (!large_enough(e, static_cast<long>(voters.size()), level) ||
          common.size() < level) {
        continue;
      }
      const bool violated = axiom == Axiom::pjr ? covered.size() < level
                                                : best < level;
      if (violated) {
        out.holds = false;
        out.witness = CohesiveWitness{level, voters, common};
        return out;
      }
    }
  }
  return out;
}

}  // namespace

RepresentationVerdict check_jr_brute_force(const Election& e, Committee w) {
  return brute_force(e, w, Axiom::jr);
}
RepresentationVerdict check_pjr_brute_force(const Election& e, Committee w) {
  return brute_force(e, w, Axiom::pjr);
}
RepresentationVerdict check_ejr_brute_force(const Election& e, Committee w) {
  return brute_force(e, w, Axiom::ejr);
}

bool witness_violates(const Election& e, Committee w, Axiom axiom,
                      const CohesiveWitness& witness) {
  if (witness.voters.empty()) return false;
  for (int i : witness.voters) {
    if (i < 0 || i >= e.num_voters()) return false;
  }
  if (witness.level < 1 || witness.level > e.k()) return false;
  if (axiom == Axiom::jr && witness.level != 1) return false;
  if (!is_cohesive(e, witness.voters, witness.level).cohesive) return false;
  CandidateSet covered;
  int best = 0;
  for (int i : witness.voters) {
    covered = covered | (e.ballot(i) & w);
    best = std::max(best, (e.ballot(i) & w).size());
  }
  switch (axiom) {
    case Axiom::jr:
    case Axiom::ejr:
      return best < witness.level;
    case Axiom::pjr:
      return covered.size() < witness.level;
    case Axiom::pr:
      return false;
  }
  return false;
}

namespace {

void require_divisible(const Election& e) {
  if (e.num_voters() % e.k() != 0) {
    throw std::invalid_argument("perfect representation needs k | n");
  }
}

}  // namespace

RepresentationVerdict provides_pr(const Election& e, Committee w) {
  require_divisible(e);
  RepresentationVerdict out{Axiom::pr, false, {}, {}, {}};
  out.pr_assignment = pr_assignment(e, w);
  out.holds = out.pr_assignment.has_value();
  if (!out.holds) out.offending = w;
  return out;
}

std::vector<Committee> pr_committees(const Election& e) {
  require_divisible(e);
  const auto profile = e.profile();
  std::vector<Committee> out;
  for (Committee w : enumerate_committees(e)) {
    if (pr_feasible(profile, e.num_voters(), w)) out.push_back(w);
  }
  return out;
}

RepresentationVerdict rule_respects_pr_on(const Election& e, const Rule& rule,
                                          Exec exec) {
  require_divisible(e);
  RepresentationVerdict out{Axiom::pr, true, {}, {}, {}};
  if (pr_committees(e).empty()) return out;
  const auto profile = e.profile();
  for (Committee w : evaluate(rule, e, exec).outcome) {
    if (!pr_feasible(profile, e.num_voters(), w)) {
      out.holds = false;
      out.offending = w;
      return out;
    }
  }
  return out;
}

}  // namespace amw
