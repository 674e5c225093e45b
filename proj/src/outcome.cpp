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

#include "amw/outcome.hpp"

#include <algorithm>
#include <stdexcept>

namespace amw {

RuleOutcome::RuleOutcome(std::vector<Committee> winners)
    : winners_(std::move(winners)) {
  if (winners_.empty()) throw std::invalid_argument("rule outcome is empty");
  const int size = winners_.front().size();
  for (Committee w : winners_) {
    if (w.size() != size) {
      throw std::invalid_argument("committees of different sizes in outcome");
    }
  }
  std::sort(winners_.begin(), winners_.end(), lex_less);
  winners_.erase(std::unique(winners_.begin(), winners_.end()),
                 winners_.end());
}

bool RuleOutcome::contains(Committee w) const {
  return std::binary_search(winners_.begin(), winners_.end(), w, lex_less);
}

bool RuleOutcome::some_superset_of(CandidateSet g) const {
  return std::any_of(winners_.begin(), winners_.end(),
                     [g](Committee w) { return g.subset_of(w); });
}

bool RuleOutcome::all_superset_of(CandidateSet g) const {
  return std::all_of(winners_.begin(), winners_.end(),
                     [g](Committee w) { return g.subset_of(w); });
}

bool RuleOutcome::some_intersects(CandidateSet g) const {
  return std::any_of(winners_.begin(), winners_.end(),
                     [g](Committee w) { return g.intersects(w); });
}

bool RuleOutcome::all_intersect(CandidateSet g) const {
  return std::all_of(winners_.begin(), winners_.end(),
                     [g](Committee w) { return g.intersects(w); });
}

CandidateSet RuleOutcome::winners_union() const {
  CandidateSet u;
  for (Committee w : winners_) u |= w;
  return u;
}

std::string RuleOutcome::format(const Election& e) const {
  std::string out = "{";
  for (std::size_t i = 0; i < winners_.size(); ++i) {
    if (i) out += ',';
    out += e.format(winners_[i]);
  }
  return out + "}";
}

}  // namespace amw
