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

#include "amw/rules.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "amw/committee_kernel.hpp"
#include "amw/solvers.hpp"

namespace amw {

namespace {

// All committees made of the k best-scoring candidates, over every way of
// filling the boundary tie. Returns the committees and the summed score.
template <class Score>
std::pair<std::vector<Committee>, Score> top_k(const std::vector<Score>& scores,
                                               int k) {
  const int m = static_cast<int>(scores.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[b] < scores[a]; });
  const Score& threshold = scores[order[k - 1]];
  CandidateSet above;
  std::vector<int> boundary;
  Score total{};
  for (int c = 0; c < m; ++c) {
    if (threshold < scores[c]) {
      above = above.with(c);
      total = total + scores[c];
    } else if (!(scores[c] < threshold)) {
      boundary.push_back(c);
    }
  }
  const int need = k - above.size();
  for (int i = 0; i < need; ++i) total = total + threshold;
  std::vector<Committee> out;
  for (Committee pick :
       enumerate_committees(static_cast<int>(boundary.size()), need)) {
    Committee w = above;
    for (int pos : pick) w = w.with(boundary[pos]);
    out.push_back(w);
  }
  return {std::move(out), std::move(total)};
}

template <class Score>
ScoredOutcome from_optimum(std::optional<Optimum<Score>> best,
                           const Rational& scale = Rational(1)) {
  return {RuleOutcome(std::move(best->committees)),
          Rational(static_cast<long>(best->value)) / scale};
}

}  // namespace

ScoredOutcome approval_voting(const Election& e) {
  std::vector<long> scores(e.num_candidates(), 0);
  const auto s = e.approval_scores();
  std::copy(s.begin(), s.end(), scores.begin());
  auto [committees, total] = top_k(scores, e.k());
  return {RuleOutcome(std::move(committees)), Rational(total)};
}

ScoredOutcome satisfaction_av(const Election& e) {
  // The objective is additive over candidates: each approver of c adds
  // 1/|A_i| when c is elected.
  std::vector<Rational> scores(e.num_candidates());
  for (const auto& g : e.profile()) {
    const Rational share(static_cast<long>(g.count),
                         static_cast<long>(g.ballot.size()));
    for (int c : g.ballot) scores[c] += share;
  }
  auto [committees, total] = top_k(scores, e.k());
  return {RuleOutcome(std::move(committees)), total};
}

ScoredOutcome minimax_av(const Election& e, Exec exec) {
  const auto profile = e.profile();
  const auto committees = enumerate_committees(e);
  auto score = [&](Committee w) -> std::optional<int> {
    int worst = 0;
    for (const auto& g : profile) worst = std::max(worst, hamming(w, g.ballot));
    return worst;
  };
  return from_optimum(
      optimal_committees<int>(committees, score, Sense::minimize, exec));
}

namespace {

int cc_misrep(std::span<const BallotGroup> profile, Committee w) {
  int miss = 0;
  for (const auto& g : profile) {
    if (!g.ballot.intersects(w)) miss += g.count;
  }
  return miss;
}

}  // namespace

ScoredOutcome chamberlin_courant(const Election& e, Exec exec) {
  const auto profile = e.profile();
  const auto committees = enumerate_committees(e);
  auto score = [&](Committee w) -> std::optional<int> {
    return cc_misrep(profile, w);
  };
  return from_optimum(
      optimal_committees<int>(committees, score, Sense::minimize, exec));
}

ScoredOutcome monroe_exhaustive(const Election& e, Exec exec) {
  const auto profile = e.profile();
  const int n = e.num_voters();
  const auto committees = enumerate_committees(e);
  auto score = [&](Committee w) -> std::optional<int> {
    return monroe_misrep_value(profile, n, w);
  };
  return from_optimum(
      optimal_committees<int>(committees, score, Sense::minimize, exec));
}

ScoredOutcome monroe(const Election& e, Exec exec) {
  // CC misrepresentation is a lower bound for Monroe misrepresentation, so
  // committees are visited by increasing bound and the scan stops once the
  // bound exceeds the best value found.
  const auto profile = e.profile();
  const int n = e.num_voters();
  const auto all = enumerate_committees(e);
  std::vector<std::pair<int, std::size_t>> order;
  order.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    order.emplace_back(cc_misrep(profile, all[i]), i);
  }
  std::sort(order.begin(), order.end());
  auto score = [&](Committee w) -> std::optional<int> {
    return monroe_misrep_value(profile, n, w);
  };
  std::optional<Optimum<int>> best;
  std::vector<Committee> bucket;
  for (std::size_t i = 0; i < order.size();) {
    const int bound = order[i].first;
    if (best && bound > best->value) break;
    bucket.clear();
    for (; i < order.size() && order[i].first == bound; ++i) {
      bucket.push_back(all[order[i].second]);
    }
    auto found = optimal_committees<int>(bucket, score, Sense::minimize, exec);
    if (!best || found->value < best->value) {
      best = std::move(found);
    } else if (found->value == best->value) {
      best->committees.insert(best->committees.end(),
                              found->committees.begin(),
                              found->committees.end());
    }
  }
  return from_optimum(std::move(best));
}

ScoredOutcome pav(const Election& e, Exec exec) {
  const int k = e.k();
  const auto profile = e.profile();
  const auto committees = enumerate_committees(e);
  // Scale H(x) by lcm(1..k) when the totals fit in 64 bits.
  __int128 lcm = 1;
  for (int j = 1; j <= k && lcm < (__int128{1} << 62); ++j) {
    lcm = std::lcm(static_cast<std::int64_t>(lcm), std::int64_t{j});
  }
  const __int128 bound = lcm * (k + 1) * std::max(1, e.num_voters());
  if (lcm < (__int128{1} << 40) && bound < (__int128{1} << 62)) {
    std::vector<std::int64_t> scaled(k + 1, 0);
    for (int x = 1; x <= k; ++x) {
      scaled[x] = scaled[x - 1] + static_cast<std::int64_t>(lcm / x);
    }
    auto score = [&](Committee w) -> std::optional<std::int64_t> {
      std::int64_t s = 0;
      for (const auto& g : profile) s += g.count * scaled[(g.ballot & w).size()];
      return s;
    };
    return from_optimum(
        optimal_committees<std::int64_t>(committees, score, Sense::maximize,
                                         exec),
        Rational(static_cast<long>(lcm)));
  }
  std::vector<Rational> h(k + 1);
  for (int x = 1; x <= k; ++x) h[x] = h[x - 1] + Rational(1, x);
  auto score = [&](Committee w) -> std::optional<Rational> {
    Rational s;
    for (const auto& g : profile) {
      s += Rational(static_cast<long>(g.count)) * h[(g.ballot & w).size()];
    }
    return s;
  };
  auto best =
      optimal_committees<Rational>(committees, score, Sense::maximize, exec);
  return {RuleOutcome(std::move(best->committees)), best->value};
}

namespace {

void require_enough_approved(const Election& e) {
  if (e.approved_candidates().size() < e.k()) {
    throw InfeasibleElection("fewer than k candidates have an approver");
  }
}

}  // namespace

ScoredOutcome max_phragmen(const Election& e, Exec exec) {
  require_enough_approved(e);
  const auto profile = e.profile();
  const auto committees = enumerate_committees(e);
  auto score = [&](Committee w) -> std::optional<Rational> {
    if (!(w - e.approved_candidates()).empty()) return std::nullopt;
    return min_max_load_value(profile, w);
  };
  auto best =
      optimal_committees<Rational>(committees, score, Sense::minimize, exec);
  if (!best) throw InfeasibleElection("no committee admits a load distribution");
  for (Committee w : best->committees) {
    const auto certified = min_max_load(e, w);
    if (!certified || certified->value != best->value) {
      throw std::logic_error("max-Phragmén: winner failed certification");
    }
  }
  return {RuleOutcome(std::move(best->committees)), best->value};
}

namespace {

struct Choice {
  std::vector<int> tied;  // ascending
  Rational value;
};

// Sequential rule driver. Ops provides
//   Choice choose(const State&)   best candidates for the next slot
//   State advance(const State&, int candidate)
//   Key key(const State&)          identity for memoization
//   Committee committee(const State&)
template <class Ops>
RuleOutcome run_sequential(const Ops& ops, const Election& e, TieMode ties) {
  using State = typename Ops::State;
  std::vector<Committee> finals;
  std::set<typename Ops::Key> seen;
  std::vector<State> stack{ops.initial()};
  while (!stack.empty()) {
    State s = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(ops.key(s)).second) continue;
    if (ops.committee(s).size() == e.k()) {
      finals.push_back(ops.committee(s));
      continue;
    }
    const Choice choice = ops.choose(s);
    if (ties == TieMode::lex) {
      stack.push_back(ops.advance(s, choice.tied.front()));
    } else {
      for (int c : choice.tied) stack.push_back(ops.advance(s, c));
    }
  }
  return RuleOutcome(std::move(finals));
}

template <class Ops>
std::vector<SequentialRun> sequential_runs(const Ops& ops, const Election& e,
                                           TieMode ties, std::size_t max_runs) {
  std::vector<SequentialRun> runs;
  std::vector<SequentialStep> path;
  auto visit = [&](auto&& self, const typename Ops::State& s) -> void {
    if (ops.committee(s).size() == e.k()) {
      if (runs.size() == max_runs) {
        throw std::length_error("too many sequential branches");
      }
      runs.push_back({path, ops.committee(s)});
      return;
    }
    const Choice choice = ops.choose(s);
    const int tied = static_cast<int>(choice.tied.size());
    for (int c : choice.tied) {
      path.push_back({c, choice.value, tied});
      self(self, ops.advance(s, c));
      path.pop_back();
      if (ties == TieMode::lex) break;
    }
  };
  visit(visit, ops.initial());
  return runs;
}

struct SeqPavOps {
  using State = Committee;
  using Key = std::uint64_t;

  explicit SeqPavOps(const Election& e)
      : profile(e.profile()), m(e.num_candidates()) {}

  State initial() const { return Committee(); }
  Key key(const State& w) const { return w.bits(); }
  Committee committee(const State& w) const { return w; }
  State advance(const State& w, int c) const { return w.with(c); }

  Choice choose(const State& w) const {
    Choice out;
    bool first = true;
    for (int c = 0; c < m; ++c) {
      if (w.contains(c)) continue;
      Rational s;
      for (const auto& g : profile) {
        if (g.ballot.contains(c)) {
          s += Rational(g.count, 1 + (g.ballot & w).size());
        }
      }
      if (first || out.value < s) {
        out.tied.assign(1, c);
        out.value = std::move(s);
        first = false;
      } else if (s == out.value) {
        out.tied.push_back(c);
      }
    }
    return out;
  }

  std::vector<BallotGroup> profile;
  int m;
};

struct SeqPhragmenOps {
  struct State {
    Committee w;
    std::vector<Rational> load;  // per ballot group
  };
  using Key = std::pair<std::uint64_t, std::vector<Rational>>;

  explicit SeqPhragmenOps(const Election& e)
      : profile(e.profile()), m(e.num_candidates()), approvers(m, 0) {
    for (const auto& g : profile) {
      for (int c : g.ballot) approvers[c] += g.count;
    }
  }

  State initial() const {
    return {Committee(), std::vector<Rational>(profile.size())};
  }
  Key key(const State& s) const { return {s.w.bits(), s.load}; }
  Committee committee(const State& s) const { return s.w; }

  Rational candidate_load(const State& s, int c) const {
    Rational total(1);
    for (std::size_t g = 0; g < profile.size(); ++g) {
      if (profile[g].ballot.contains(c)) {
        total += Rational(static_cast<long>(profile[g].count)) * s.load[g];
      }
    }
    return total / Rational(static_cast<long>(approvers[c]));
  }

  Choice choose(const State& s) const {
    Choice out;
    bool first = true;
    for (int c = 0; c < m; ++c) {
      if (s.w.contains(c) || approvers[c] == 0) continue;
      Rational v = candidate_load(s, c);
      if (first || v < out.value) {
        out.tied.assign(1, c);
        out.value = std::move(v);
        first = false;
      } else if (v == out.value) {
        out.tied.push_back(c);
      }
    }
    return out;
  }

  State advance(const State& s, int c) const {
    State next{s.w.with(c), s.load};
    const Rational v = candidate_load(s, c);
    for (std::size_t g = 0; g < profile.size(); ++g) {
      if (profile[g].ballot.contains(c)) next.load[g] = v;
    }
    return next;
  }

  std::vector<BallotGroup> profile;
  int m;
  std::vector<int> approvers;
};

}  // namespace

RuleOutcome seq_pav(const Election& e, TieMode ties) {
  return run_sequential(SeqPavOps(e), e, ties);
}

RuleOutcome seq_phragmen(const Election& e, TieMode ties) {
  require_enough_approved(e);
  return run_sequential(SeqPhragmenOps(e), e, ties);
}

std::vector<SequentialRun> seq_pav_runs(const Election& e, TieMode ties,
                                        std::size_t max_runs) {
  return sequential_runs(SeqPavOps(e), e, ties, max_runs);
}

std::vector<SequentialRun> seq_phragmen_runs(const Election& e, TieMode ties,
                                             std::size_t max_runs) {
  require_enough_approved(e);
  return sequential_runs(SeqPhragmenOps(e), e, ties, max_runs);
}

ScoredOutcome rule_not_weak_smwpi(const Election& e) {
  std::vector<long> scores(e.num_candidates(), 0);
  for (const auto& g : e.profile()) {
    const long delta = g.ballot.size() == 1 ? g.count : -g.count;
    for (int c : g.ballot) scores[c] += delta;
  }
  auto [committees, total] = top_k(scores, e.k());
  return {RuleOutcome(std::move(committees)), Rational(total)};
}

namespace {

// Sorted ballot multiset of `ballots` relabeled by sigma (pattern index ->
// candidate index).
std::vector<std::uint64_t> relabeled(const std::vector<CandidateSet>& ballots,
                                     const std::array<int, 4>& sigma) {
  std::vector<std::uint64_t> out;
  for (CandidateSet b : ballots) {
    CandidateSet mapped;
    for (int c : b) mapped = mapped.with(sigma[c]);
    out.push_back(mapped.bits());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CandidateSet relabel(std::initializer_list<int> members,
                     const std::array<int, 4>& sigma) {
  CandidateSet out;
  for (int c : members) out = out.with(sigma[c]);
  return out;
}

}  // namespace

RuleOutcome av_not_weak_smwopi(const Election& e) {
  if (e.num_voters() == 4 && e.num_candidates() == 4 && e.k() == 2) {
    const std::vector<CandidateSet> first = {
        CandidateSet{0, 1}, CandidateSet{2, 3}, CandidateSet{0, 2, 3},
        CandidateSet{1, 2, 3}};
    const std::vector<CandidateSet> second = {
        CandidateSet{0, 1}, CandidateSet{0, 1, 2, 3}, CandidateSet{0, 2, 3},
        CandidateSet{1, 2, 3}};
    std::vector<std::uint64_t> actual;
    for (CandidateSet b : e.ballots()) actual.push_back(b.bits());
    std::sort(actual.begin(), actual.end());
    std::array<int, 4> sigma{0, 1, 2, 3};
    do {
      if (relabeled(first, sigma) == actual) {
        return RuleOutcome({relabel({0, 1}, sigma), relabel({2, 3}, sigma)});
      }
      if (relabeled(second, sigma) == actual) {
        return RuleOutcome({relabel({2, 3}, sigma)});
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return approval_voting(e).outcome;
}

ScoredOutcome cc_pr_tiebreak(const Election& e, Exec exec) {
  ScoredOutcome cc = chamberlin_courant(e, exec);
  const int n = e.num_voters();
  if (n % e.k() != 0) return cc;
  const auto profile = e.profile();
  std::vector<Committee> keep;
  for (Committee w : cc.outcome) {
    if (pr_feasible(profile, n, w)) keep.push_back(w);
  }
  if (keep.empty()) return cc;
  return {RuleOutcome(std::move(keep)), cc.objective};
}

namespace {

struct RuleName {
  RuleKind kind;
  const char* id;
};

constexpr RuleName kRuleNames[] = {
    {RuleKind::av, "av"},
    {RuleKind::sav, "sav"},
    {RuleKind::mav, "mav"},
    {RuleKind::cc, "cc"},
    {RuleKind::cc_prties, "cc-prties"},
    {RuleKind::monroe, "monroe"},
    {RuleKind::pav, "pav"},
    {RuleKind::seqpav, "seqpav"},
    {RuleKind::max_phragmen, "maxphragmen"},
    {RuleKind::seq_phragmen, "seqphragmen"},
    {RuleKind::not_weak_smwpi, "not-weak-smwpi"},
    {RuleKind::av_not_weak_smwopi, "av-not-weak-smwopi"},
};

constexpr std::string_view kCountingPrefix = "counting:";

}  // namespace

std::string Rule::id() const {
  if (kind == RuleKind::counting) {
    return std::string(kCountingPrefix) + (counting ? counting->name : "?");
  }
  for (const auto& r : kRuleNames) {
    if (r.kind == kind) return r.id;
  }
  return "?";
}

Rule parse_rule(std::string_view id, TieMode ties) {
  Rule rule;
  rule.ties = ties;
  if (id.starts_with(kCountingPrefix)) {
    const std::string name(id.substr(kCountingPrefix.size()));
    auto f = find_counting_function(name);
    if (!f) throw std::invalid_argument("unknown counting function: " + name);
    rule.kind = RuleKind::counting;
    rule.counting = std::make_shared<const CountingFunction>(std::move(*f));
    return rule;
  }
  for (const auto& r : kRuleNames) {
    if (id == r.id) {
      rule.kind = r.kind;
      return rule;
    }
  }
  throw std::invalid_argument("unknown rule: " + std::string(id));
}

TieMode parse_tie_mode(std::string_view text) {
  if (text == "put") return TieMode::put;
  if (text == "lex") return TieMode::lex;
  throw std::invalid_argument("unknown tie mode: " + std::string(text));
}

std::vector<std::string> rule_ids() {
  std::vector<std::string> out;
  for (const auto& r : kRuleNames) out.emplace_back(r.id);
  for (const char* f : {"av", "sav", "cc", "pav"}) {
    out.push_back(std::string(kCountingPrefix) + f);
  }
  return out;
}

ScoredOutcome evaluate(const Rule& rule, const Election& e, Exec exec) {
  switch (rule.kind) {
    case RuleKind::av:
      return approval_voting(e);
    case RuleKind::sav:
      return satisfaction_av(e);
    case RuleKind::mav:
      return minimax_av(e, exec);
    case RuleKind::cc:
      return chamberlin_courant(e, exec);
    case RuleKind::cc_prties:
      return cc_pr_tiebreak(e, exec);
    case RuleKind::monroe:
      return monroe(e, exec);
    case RuleKind::pav:
      return pav(e, exec);
    case RuleKind::seqpav:
      return {seq_pav(e, rule.ties), std::nullopt};
    case RuleKind::max_phragmen:
      return max_phragmen(e, exec);
    case RuleKind::seq_phragmen:
      return {seq_phragmen(e, rule.ties), std::nullopt};
    case RuleKind::counting:
      if (!rule.counting) throw std::invalid_argument("counting rule without f");
      return counting_rule(*rule.counting, e, exec);
    case RuleKind::not_weak_smwpi:
      return rule_not_weak_smwpi(e);
    case RuleKind::av_not_weak_smwopi:
      return {av_not_weak_smwopi(e), std::nullopt};
  }
  throw std::logic_error("unhandled rule kind");
}

}  // namespace amw
