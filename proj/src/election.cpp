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

#include "amw/election.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>
#include <utility>

namespace amw {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

}  // namespace

Election::Election(std::vector<std::string> candidates,
                   std::vector<CandidateSet> ballots, int k)
    : candidates_(std::move(candidates)), ballots_(std::move(ballots)), k_(k) {
  const int m = num_candidates();
  if (m < 1 || m > kMaxCandidates) {
    throw std::invalid_argument("number of candidates must be in 1..64");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : candidates_) {
    if (!valid_name(name)) {
      throw std::invalid_argument("invalid candidate name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw std::invalid_argument("duplicate candidate name '" + name + "'");
    }
  }
  if (k_ < 1 || k_ > m) {
    throw std::invalid_argument("k = " + std::to_string(k_) +
                                " out of range 1.." + std::to_string(m));
  }
  if (ballots_.empty()) throw std::invalid_argument("election has no voters");
  for (std::size_t i = 0; i < ballots_.size(); ++i) {
    if (ballots_[i].empty()) {
      throw std::invalid_argument("empty ballot for voter " +
                                  std::to_string(i));
    }
    if (!ballots_[i].subset_of(roster())) {
      throw std::invalid_argument("ballot of voter " + std::to_string(i) +
                                  " names an unknown candidate");
    }
  }
}

std::optional<int> Election::find(std::string_view name) const {
  const auto it = std::find(candidates_.begin(), candidates_.end(), name);
  if (it == candidates_.end()) return std::nullopt;
  return static_cast<int>(it - candidates_.begin());
}

CandidateSet Election::resolve(const std::vector<std::string>& names) const {
  CandidateSet s;
  for (const auto& n : names) {
    const auto c = find(n);
    if (!c) throw std::invalid_argument("unknown candidate '" + n + "'");
    s = s.with(*c);
  }
  return s;
}

Election Election::with_k(int k) const {
  return Election(candidates_, ballots_, k);
}

std::vector<BallotGroup> Election::profile() const {
  std::vector<BallotGroup> groups;
  for (CandidateSet b : ballots_) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [b](const BallotGroup& g) { return g.ballot == b; });
    if (it == groups.end()) {
      groups.push_back({b, 1});
    } else {
      ++it->count;
    }
  }
  return groups;
}

std::vector<int> Election::approval_scores() const {
  std::vector<int> scores(candidates_.size(), 0);
  for (CandidateSet b : ballots_) {
    for (int c : b) ++scores[c];
  }
  return scores;
}

CandidateSet Election::approved_candidates() const {
  CandidateSet all;
  for (CandidateSet b : ballots_) all |= b;
  return all;
}

std::string Election::format(CandidateSet s) const {
  std::string out = "{";
  bool first = true;
  for (int c : s) {
    if (!first) out += ',';
    out += name(c);
    first = false;
  }
  return out + "}";
}

std::vector<std::string> numbered_names(int m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (int c = 1; c <= m; ++c) names.push_back("c" + std::to_string(c));
  return names;
}

Election add_new_voter(const Election& e, CandidateSet g) {
  if (g.empty()) throw std::invalid_argument("new voter must approve someone");
  if (!g.subset_of(e.roster())) {
    throw std::invalid_argument("new voter approves an unknown candidate");
  }
  std::vector<CandidateSet> ballots(e.ballots().begin(), e.ballots().end());
  ballots.push_back(g);
  return Election(e.candidates(), std::move(ballots), e.k());
}

Election extend_ballot(const Election& e, int voter, CandidateSet g) {
  if (voter < 0 || voter >= e.num_voters()) {
    throw std::invalid_argument("voter index out of range");
  }
  if (g.empty()) throw std::invalid_argument("extension set must be non-empty");
  if (!g.subset_of(e.roster())) {
    throw std::invalid_argument("extension names an unknown candidate");
  }
  if (g.intersects(e.ballot(voter))) {
    throw std::invalid_argument("extension overlaps the voter's ballot");
  }
  std::vector<CandidateSet> ballots(e.ballots().begin(), e.ballots().end());
  ballots[voter] |= g;
  return Election(e.candidates(), std::move(ballots), e.k());
}

std::vector<Committee> enumerate_committees(int num_candidates, int k) {
  std::vector<Committee> out;
  if (k < 0 || k > num_candidates) return out;
  out.reserve(static_cast<std::size_t>(binomial(num_candidates, k)));
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    CandidateSet w;
    for (int c : idx) w = w.with(c);
    out.push_back(w);
    int i = k - 1;
    while (i >= 0 && idx[i] == num_candidates - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

}  // namespace amw
