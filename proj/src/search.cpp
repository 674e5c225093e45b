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

#include "amw/search.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <numeric>
#include <stdexcept>
#include <variant>

namespace amw {

void GenerationBounds::validate() const {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad voter bounds");
  if (m_min < 1 || m_max < m_min || m_max > kMaxCandidates) {
    throw std::invalid_argument("bad candidate bounds");
  }
  if (k_min < 1 || k_max < k_min || k_min > m_max) {
    throw std::invalid_argument("bad committee-size bounds");
  }
  if (p <= Rational(0) || p >= Rational(1)) {
    throw std::invalid_argument("approval probability must lie in (0, 1)");
  }
  if (!p.denominator().fits_ulong_p()) {
    throw std::invalid_argument("approval probability denominator too large");
  }
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

constexpr int kMaxDedupCandidates = 8;

// table[perm][mask] = image of mask under the permutation.
std::vector<std::vector<std::uint64_t>> relabelings(int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t masks = std::uint64_t{1} << m;
  do {
    std::vector<std::uint64_t> table(masks, 0);
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
      const int low = std::countr_zero(mask);
      table[mask] = table[mask & (mask - 1)] | (std::uint64_t{1} << perm[low]);
    }
    out.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::uint64_t> image(const std::vector<std::uint64_t>& masks,
                                 const std::vector<std::uint64_t>& table) {
  std::vector<std::uint64_t> out(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) out[i] = table[masks[i]];
  std::sort(out.begin(), out.end());
  return out;
}

struct Shape {
  int n;
  int m;
};

std::vector<Shape> shapes(const GenerationBounds& b) {
  std::vector<Shape> out;
  const int m_lo = std::max(b.m_min, b.k_min);
  for (int level = b.n_min + m_lo; level <= b.n_max + b.m_max; ++level) {
    for (int m = m_lo; m <= b.m_max; ++m) {
      const int n = level - m;
      if (n >= b.n_min && n <= b.n_max) out.push_back({n, m});
    }
  }
  return out;
}

}  // namespace

ElectionEnumerator::ElectionEnumerator(GenerationBounds bounds)
    : bounds_(std::move(bounds)) {
  bounds_.validate();
  if (bounds_.dedup && bounds_.m_max > kMaxDedupCandidates) {
    throw std::invalid_argument("isomorphism dedup supports at most 8 candidates");
  }
}

bool ElectionEnumerator::advance_shape() {
  const auto all = shapes(bounds_);
  auto it = std::find_if(all.begin(), all.end(), [&](const Shape& s) {
    return s.n == n_ && s.m == m_;
  });
  const auto next = started_ && it != all.end() ? it + 1 : all.begin();
  if (next == all.end()) return false;
  const bool new_m = next->m != m_;
  n_ = next->n;
  m_ = next->m;
  masks_.assign(n_, 1);
  if (new_m) prepare_relabelings();
  return true;
}

void ElectionEnumerator::prepare_relabelings() {
  relabel_.clear();
  if (bounds_.dedup) relabel_ = relabelings(m_);
}

bool ElectionEnumerator::advance_multiset() {
  const std::uint64_t top = (std::uint64_t{1} << m_) - 1;
  int j = n_ - 1;
  while (j >= 0 && masks_[j] == top) --j;
  if (j < 0) return false;
  ++masks_[j];
  for (int t = j + 1; t < n_; ++t) masks_[t] = masks_[j];
  return true;
}

bool ElectionEnumerator::canonical() const {
  for (const auto& table : relabel_) {
    if (image(masks_, table) < masks_) return false;
  }
  return true;
}

std::optional<Election> ElectionEnumerator::next() {
  if (done_) return std::nullopt;
  auto make = [&] {
    std::vector<CandidateSet> ballots;
    for (std::uint64_t mask : masks_) ballots.emplace_back(mask);
    return Election(numbered_names(m_), std::move(ballots), k_);
  };
  const int k_lo = bounds_.k_min;
  if (started_ && k_ < std::min(bounds_.k_max, m_)) {
    ++k_;
    return make();
  }
  for (;;) {
    bool moved;
    if (!started_) {
      moved = advance_shape();
      started_ = true;
    } else {
      moved = advance_multiset() || advance_shape();
    }
    if (!moved) {
      done_ = true;
      return std::nullopt;
    }
    if (!bounds_.dedup || canonical()) {
      k_ = k_lo;
      return make();
    }
  }
}

std::vector<Election> enumerate_elections(const GenerationBounds& bounds) {
  ElectionEnumerator it(bounds);
  std::vector<Election> out;
  while (auto e = it.next()) out.push_back(std::move(*e));
  return out;
}

std::vector<std::uint64_t> canonical_ballots(const Election& e) {
  if (e.num_candidates() > kMaxDedupCandidates) {
    throw std::invalid_argument("canonical form supports at most 8 candidates");
  }
  std::vector<std::uint64_t> masks;
  for (CandidateSet b : e.ballots()) masks.push_back(b.bits());
  std::sort(masks.begin(), masks.end());
  std::vector<std::uint64_t> best = masks;
  for (const auto& table : relabelings(e.num_candidates())) {
    best = std::min(best, image(masks, table));
  }
  return best;
}

Election random_election(const GenerationBounds& b, std::uint64_t index) {
  b.validate();
  SplitMix64 rng(b.seed ^ (index * 0xD1B54A32D192ED03ULL));
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const int n = draw(b.n_min, b.n_max);
  const int m = draw(std::max(b.m_min, b.k_min), b.m_max);
  const int k = draw(b.k_min, std::min(b.k_max, m));
  const std::uint64_t num = b.p.numerator().get_ui();
  const std::uint64_t den = b.p.denominator().get_ui();
  std::vector<CandidateSet> ballots;
  for (int i = 0; i < n; ++i) {
    CandidateSet ballot;
    while (ballot.empty()) {
      for (int c = 0; c < m; ++c) {
        if (rng.next() % den < num) ballot = ballot.with(c);
      }
    }
    ballots.push_back(ballot);
  }
  return Election(numbered_names(m), std::move(ballots), k);
}

namespace {

struct InstanceOutcome {
  bool skipped = false;
  std::uint64_t evaluations = 0;
  std::optional<MonotonicityWitness> witness;
  std::optional<RepresentationFailure> representation;
};

using Target = std::variant<AxiomSpec, Axiom>;

Target parse_target(const std::string& axiom) {
  try {
    return parse_axiom_spec(axiom);
  } catch (const std::invalid_argument&) {
    return parse_axiom(axiom);
  }
}

InstanceOutcome examine(const Rule& rule, const Target& target,
                        const Election& e) {
  InstanceOutcome out;
  try {
    if (const auto* spec = std::get_if<AxiomSpec>(&target)) {
      MonotonicityVerdict v = check_axiom(rule, e, *spec, Exec::serial);
      out.evaluations = v.mutations_checked;
      if (!v.holds) {
        if (!validate_witness(rule, *v.witness)) {
          throw std::logic_error("hunt produced a witness that fails validation");
        }
        out.witness = std::move(v.witness);
      }
      return out;
    }
    const Axiom axiom = std::get<Axiom>(target);
    if (axiom == Axiom::pr && e.num_voters() % e.k() != 0) {
      out.skipped = true;
      return out;
    }
    out.evaluations = 1;
    if (axiom == Axiom::pr) {
      RepresentationVerdict v = rule_respects_pr_on(e, rule);
      if (!v.holds) {
        out.representation = RepresentationFailure{e, *v.offending, v};
      }
      return out;
    }
    for (Committee w : evaluate(rule, e).outcome) {
      RepresentationVerdict v = axiom == Axiom::jr    ? check_jr(e, w)
                                : axiom == Axiom::pjr ? check_pjr(e, w)
                                                      : check_ejr(e, w);
      if (!v.holds) {
        out.representation = RepresentationFailure{e, w, std::move(v)};
        return out;
      }
    }
  } catch (const InfeasibleElection&) {
    out = InstanceOutcome{};
    out.skipped = true;
  }
  return out;
}

}  // namespace

HuntResult hunt(const HuntConfig& config) {
  config.bounds.validate();
  const Target target = parse_target(config.axiom);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  };

  std::optional<ElectionEnumerator> enumerator;
  if (config.exhaustive) enumerator.emplace(config.bounds);
  std::uint64_t next_index = 0;
  auto produce = [&]() -> std::optional<Election> {
    if (config.max_instances && next_index >= config.max_instances) {
      return std::nullopt;
    }
    std::optional<Election> e = enumerator
                                    ? enumerator->next()
                                    : random_election(config.bounds, next_index);
    if (e) ++next_index;
    return e;
  };

  const std::size_t chunk =
      config.exec == Exec::parallel
          ? static_cast<std::size_t>(std::max(1, omp_get_max_threads())) * 4
          : 1;
  HuntResult result;
  std::uint64_t base_index = 0;
  for (;;) {
    std::vector<Election> batch;
    while (batch.size() < chunk) {
      auto e = produce();
      if (!e) break;
      batch.push_back(std::move(*e));
    }
    if (batch.empty()) {
      result.exhausted = true;
      break;
    }
    std::vector<InstanceOutcome> outcomes(batch.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) if (batch.size() > 1)
    for (long i = 0; i < static_cast<long>(batch.size()); ++i) {
      try {
        outcomes[i] = examine(config.rule, target, batch[i]);
      } catch (...) {
#pragma omp critical(amw_hunt_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++result.instances_checked;
      result.evaluations += outcomes[i].evaluations;
      if (outcomes[i].witness || outcomes[i].representation) {
        result.witness = std::move(outcomes[i].witness);
        result.representation = std::move(outcomes[i].representation);
        result.instance_index = base_index + i;
        result.elapsed_seconds = elapsed();
        return result;
      }
      if (result.evaluations >= config.budget) {
        result.stopped_by_budget = true;
        result.elapsed_seconds = elapsed();
        return result;
      }
    }
    base_index += batch.size();
    if (config.time_limit_seconds && elapsed() >= *config.time_limit_seconds) {
      result.stopped_by_time = true;
      break;
    }
  }
  result.elapsed_seconds = elapsed();
  return result;
}

std::optional<Election> remove_voter(const Election& e, int i) {
  if (e.num_voters() < 2 || i < 0 || i >= e.num_voters()) return std::nullopt;
  std::vector<CandidateSet> ballots(e.ballots().begin(), e.ballots().end());
  ballots.erase(ballots.begin() + i);
  return Election(e.candidates(), std::move(ballots), e.k());
}

namespace {

CandidateSet drop_index(CandidateSet s, int c) {
  const std::uint64_t low = s.bits() & ((std::uint64_t{1} << c) - 1);
  const std::uint64_t high = c + 1 < 64 ? s.bits() >> (c + 1) : 0;
  return CandidateSet(low | (high << c));
}

}  // namespace

std::optional<Election> remove_candidate(const Election& e, int c) {
  const int m = e.num_candidates();
  if (c < 0 || c >= m || e.k() > m - 1) return std::nullopt;
  std::vector<std::string> names = e.candidates();
  names.erase(names.begin() + c);
  std::vector<CandidateSet> ballots;
  for (CandidateSet b : e.ballots()) {
    const CandidateSet reduced = drop_index(b, c);
    if (reduced.empty()) return std::nullopt;
    ballots.push_back(reduced);
  }
  return Election(std::move(names), std::move(ballots), e.k());
}

namespace {

// Re-examines one mutation on a candidate election.
std::optional<MonotonicityWitness> probe(const Rule& rule, const AxiomSpec& spec,
                                         const Election& e, CandidateSet g,
                                         std::optional<int> voter) {
  try {
    if (spec.axiom == MonotonicityAxiom::committee) {
      if (e.k() >= e.num_candidates()) return std::nullopt;
      return check_committee_monotonicity(rule, e, e.k(), e.k() + 1).witness;
    }
    if (g.empty() || g.size() > e.k()) return std::nullopt;
    const RuleOutcome before = evaluate(rule, e).outcome;
    Election mutated = voter ? extend_ballot(e, *voter, g) : add_new_voter(e, g);
    const RuleOutcome after = evaluate(rule, mutated).outcome;
    for (Clause clause : {Clause::some_winner, Clause::all_winners}) {
      if (clause_fails(spec, clause, g, before, after)) {
        return MonotonicityWitness{spec, g,      voter, clause,
                                   e,    before, after, std::move(mutated)};
      }
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

}  // namespace

MonotonicityWitness shrink(const Rule& rule, const MonotonicityWitness& witness) {
  MonotonicityWitness cur = witness;
  const AxiomSpec spec = witness.spec;
  const bool pinned_voter = spec.axiom == MonotonicityAxiom::smwopi ||
                            spec.axiom == MonotonicityAxiom::candidate;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < cur.original.num_voters(); ++i) {
      if (pinned_voter && cur.voter == i) continue;
      const auto reduced = remove_voter(cur.original, i);
      if (!reduced) continue;
      std::optional<int> voter = cur.voter;
      if (voter && *voter > i) --*voter;
      if (auto w = probe(rule, spec, *reduced, cur.g, voter)) {
        cur = std::move(*w);
        changed = true;
        --i;
      }
    }
    for (int c = 0; c < cur.original.num_candidates(); ++c) {
      if (spec.axiom != MonotonicityAxiom::committee && cur.g.contains(c)) {
        continue;
      }
      const auto reduced = remove_candidate(cur.original, c);
      if (!reduced) continue;
      const CandidateSet g = spec.axiom == MonotonicityAxiom::committee
                                 ? cur.g
                                 : drop_index(cur.g, c);
      if (auto w = probe(rule, spec, *reduced, g, cur.voter)) {
        cur = std::move(*w);
        changed = true;
        --c;
      }
    }
    const bool g_shrinks = spec.axiom == MonotonicityAxiom::smwpi ||
                           spec.axiom == MonotonicityAxiom::smwopi;
    if (g_shrinks && cur.g.size() > 1) {
      for (int c : cur.g) {
        if (auto w = probe(rule, spec, cur.original, cur.g.without(c),
                           cur.voter)) {
          cur = std::move(*w);
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

}  // namespace amw
