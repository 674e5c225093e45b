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

// Exhaustive committee scoring. Every optimizing rule funnels through
// optimal_committees(): score each committee, keep the optimum and all ties.
// The serial loop is the reference; the OpenMP variant scores into a buffer
// and then runs the same ordered reduction, so both return identical results.

#ifndef AMW_COMMITTEE_KERNEL_HPP_
#define AMW_COMMITTEE_KERNEL_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "amw/election.hpp"
#include "amw/outcome.hpp"

namespace amw {

enum class Sense { maximize, minimize };

template <class Score>
struct Optimum {
  std::vector<Committee> committees;  // in input order
  Score value;
};

namespace detail {

template <class Score>
bool better(const Score& a, const Score& b, Sense sense) {
  return sense == Sense::maximize ? b < a : a < b;
}

template <class Score>
void reduce_into(std::optional<Optimum<Score>>& best, Committee w,
                 std::optional<Score>&& score, Sense sense) {
  if (!score) return;
  if (!best) {
    best.emplace(Optimum<Score>{{w}, std::move(*score)});
  } else if (better(*score, best->value, sense)) {
    best->committees.assign(1, w);
    best->value = std::move(*score);
  } else if (!better(best->value, *score, sense)) {
    best->committees.push_back(w);
  }
}

}  // namespace detail

/// Serial reference. `score` returns std::optional<Score>; nullopt marks an
/// inadmissible committee. Returns nullopt when no committee is admissible.
template <class Score, class ScoreFn>
std::optional<Optimum<Score>> optimal_committees_serial(
    std::span<const Committee> committees, ScoreFn&& score, Sense sense) {
  std::optional<Optimum<Score>> best;
  for (Committee w : committees) {
    detail::reduce_into<Score>(best, w, score(w), sense);
  }
  return best;
}

template <class Score, class ScoreFn>
std::optional<Optimum<Score>> optimal_committees_parallel(
    std::span<const Committee> committees, ScoreFn&& score, Sense sense) {
  const long n = static_cast<long>(committees.size());
  std::vector<std::optional<Score>> scores(committees.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) scores[i] = score(committees[i]);
  std::optional<Optimum<Score>> best;
  for (long i = 0; i < n; ++i) {
    detail::reduce_into<Score>(best, committees[i], std::move(scores[i]),
                               sense);
  }
  return best;
}

template <class Score, class ScoreFn>
std::optional<Optimum<Score>> optimal_committees(
    std::span<const Committee> committees, ScoreFn&& score, Sense sense,
    Exec exec) {
  if (exec == Exec::parallel && committees.size() > 16) {
    return optimal_committees_parallel<Score>(
        committees, std::forward<ScoreFn>(score), sense);
  }
  return optimal_committees_serial<Score>(committees,
                                          std::forward<ScoreFn>(score), sense);
}

}  // namespace amw

#endif  // AMW_COMMITTEE_KERNEL_HPP_
