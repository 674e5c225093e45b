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

#include "amw/solvers.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

#include "amw/flow.hpp"

namespace amw {

namespace {

std::atomic<bool> g_oracle_mode{false};
std::atomic<std::uint64_t> g_certificates{0};

// Profile of e plus, for each group, the voters belonging to it.
struct GroupedVoters {
  std::vector<BallotGroup> profile;
  std::vector<std::vector<int>> voters;
};

GroupedVoters group_voters(const Election& e) {
  GroupedVoters out;
  for (int i = 0; i < e.num_voters(); ++i) {
    const CandidateSet b = e.ballot(i);
    std::size_t g = 0;
    while (g < out.profile.size() && out.profile[g].ballot != b) ++g;
    if (g == out.profile.size()) {
      out.profile.push_back({b, 0});
      out.voters.emplace_back();
    }
    ++out.profile[g].count;
    out.voters[g].push_back(i);
  }
  return out;
}

struct MonroeNetwork {
  MinCostFlow flow;
  std::vector<std::vector<int>> edge;  // [group][member position]
  std::optional<std::int64_t> cost;
};

MonroeNetwork solve_monroe(std::span<const BallotGroup> profile, int n,
                           Committee w) {
  const int groups = static_cast<int>(profile.size());
  const auto members = w.members();
  const int k = static_cast<int>(members.size());
  const int source = 0;
  const int sink = groups + k + 1;
  MonroeNetwork net{MinCostFlow(groups + k + 2), {}, std::nullopt};
  net.edge.assign(groups, std::vector<int>(k, -1));
  for (int g = 0; g < groups; ++g) {
    const int cnt = profile[g].count;
    net.flow.add_edge(source, 1 + g, cnt, cnt, 0);
    for (int j = 0; j < k; ++j) {
      const int cost = profile[g].ballot.contains(members[j]) ? 0 : 1;
      net.edge[g][j] = net.flow.add_edge(1 + g, 1 + groups + j, 0, cnt, cost);
    }
  }
  const int lo = n / k;
  const int hi = (n + k - 1) / k;
  for (int j = 0; j < k; ++j) {
    net.flow.add_edge(1 + groups + j, sink, lo, hi, 0);
  }
  net.cost = net.flow.solve(source, sink, n);
  if (!net.cost) {
    throw std::logic_error("balanced assignment unexpectedly infeasible");
  }
  return net;
}

// Approver count of each group-subset test: voters whose ballot meets t.
long approvers_of(std::span<const BallotGroup> profile, CandidateSet t) {
  long n = 0;
  for (const auto& g : profile) {
    if (g.ballot.intersects(t)) n += g.count;
  }
  return n;
}

struct DualChoice {
  long num = 0;  // |T|
  long den = 1;  // |approvers(T)|
  CandidateSet t;
};

// Maximizes |T| / |approvers(T)| over non-empty T subset of w. nullopt if a
// member of w has no approver.
std::optional<DualChoice> best_dual(std::span<const BallotGroup> profile,
                                    Committee w) {
  for (int c : w) {
    if (approvers_of(profile, CandidateSet::single(c)) == 0) return std::nullopt;
  }
  if (w.size() > 30) throw std::invalid_argument("committee too large");
  DualChoice best{0, 1, CandidateSet()};
  const std::uint64_t full = w.bits();
  for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
    const CandidateSet t(sub);
    const long num = t.size();
    const long den = approvers_of(profile, t);
    if (num * best.den > best.num * den ||
        (num * best.den == best.num * den && best.t.empty())) {
      best = {num, den, t};
    }
  }
  return best;
}

// Dual bound maximized over every non-empty voter subset.
std::optional<Rational> brute_force_load(std::span<const CandidateSet> ballots,
                                         Committee w) {
  const int n = static_cast<int>(ballots.size());
  if (n > 24) throw std::invalid_argument("brute-force load oracle needs n <= 24");
  std::vector<std::uint32_t> approvers;
  for (int c : w) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (ballots[i].contains(c)) mask |= std::uint32_t{1} << i;
    }
    if (mask == 0) return std::nullopt;
    approvers.push_back(mask);
  }
  long best_num = 0, best_den = 1;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    long tight = 0;
    for (std::uint32_t a : approvers) {
      if ((a & ~s) == 0) ++tight;
    }
    const long size = std::popcount(s);
    if (tight * best_den > best_num * size) {
      best_num = tight;
      best_den = size;
    }
  }
  return Rational(best_num, best_den);
}

std::vector<int> voters_meeting(const Election& e, CandidateSet t) {
  std::vector<int> out;
  for (int i = 0; i < e.num_voters(); ++i) {
    if (e.ballot(i).intersects(t)) out.push_back(i);
  }
  return out;
}

CandidateSet tight_members(const Election& e, Committee w,
                           const std::vector<int>& voters) {
  std::vector<char> in(e.num_voters(), 0);
  for (int i : voters) in[i] = 1;
  CandidateSet tight;
  for (int c : w) {
    bool inside = true;
    bool any = false;
    for (int i = 0; i < e.num_voters(); ++i) {
      if (!e.ballot(i).contains(c)) continue;
      any = true;
      if (!in[i]) inside = false;
    }
    if (any && inside) tight = tight.with(c);
  }
  return tight;
}

}  // namespace

MonroeSolution monroe_min_misrep(const Election& e, Committee w) {
  if (w.size() != e.k()) throw std::invalid_argument("committee size != k");
  const auto grouped = group_voters(e);
  MonroeNetwork net = solve_monroe(grouped.profile, e.num_voters(), w);
  const auto members = w.members();
  MonroeSolution out;
  out.misrepresentation = static_cast<int>(*net.cost);
  out.assignment.representative.assign(e.num_voters(), -1);
  for (std::size_t g = 0; g < grouped.profile.size(); ++g) {
    std::size_t next = 0;
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (std::int64_t f = net.flow.flow(net.edge[g][j]); f > 0; --f) {
        out.assignment.representative[grouped.voters[g][next++]] = members[j];
      }
    }
  }
  return out;
}

int monroe_misrep_value(std::span<const BallotGroup> profile, int n,
                        Committee w) {
  return static_cast<int>(*solve_monroe(profile, n, w).cost);
}

Rational LoadDistribution::load(int voter, int candidate) const {
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (members[j] == candidate) return x.at(voter)[j];
  }
  return Rational(0);
}

Rational LoadDistribution::voter_load(int voter) const {
  Rational sum;
  for (const auto& v : x.at(voter)) sum += v;
  return sum;
}

Rational LoadDistribution::max_voter_load() const {
  Rational best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Rational l = voter_load(static_cast<int>(i));
    if (l > best) best = l;
  }
  return best;
}

bool satisfies_load_constraints(const Election& e, const LoadDistribution& d) {
  if (static_cast<int>(d.x.size()) != e.num_voters()) return false;
  if (d.members != d.committee.members()) return false;
  const Rational zero(0), one(1);
  std::vector<Rational> column(d.members.size());
  for (int i = 0; i < e.num_voters(); ++i) {
    if (d.x[i].size() != d.members.size()) return false;
    for (std::size_t j = 0; j < d.members.size(); ++j) {
      const Rational& v = d.x[i][j];
      if (v < zero || v > one) return false;
      if (!e.ballot(i).contains(d.members[j]) && v != zero) return false;
      column[j] += v;
    }
  }
  for (const auto& c : column) {
    if (c != one) return false;
  }
  return true;
}

std::optional<Rational> min_max_load_value(std::span<const BallotGroup> profile,
                                           Committee w) {
  if (oracle_mode()) {
    std::vector<CandidateSet> ballots;
    for (const auto& g : profile) ballots.insert(ballots.end(), g.count, g.ballot);
    return brute_force_load(ballots, w);
  }
  const auto best = best_dual(profile, w);
  if (!best) return std::nullopt;
  return Rational(best->num, best->den);
}

std::optional<Rational> min_max_load_brute_force(const Election& e,
                                                 Committee w) {
  return brute_force_load(e.ballots(), w);
}

std::optional<MinMaxLoad> min_max_load(const Election& e, Committee w) {
  if (w.size() != e.k()) throw std::invalid_argument("committee size != k");
  const auto grouped = group_voters(e);
  const auto& profile = grouped.profile;
  const auto choice = best_dual(profile, w);
  if (!choice) return std::nullopt;

  MinMaxLoad out;
  out.value = Rational(choice->num, choice->den);
  if (oracle_mode()) out.value = *min_max_load_brute_force(e, w);
  out.dual.voters = voters_meeting(e, choice->t);
  out.dual.tight = tight_members(e, w, out.dual.voters);

  // Feasibility flow at capacity p/q, scaled by q.
  const long p = out.value.numerator().get_si();
  const long q = out.value.denominator().get_si();
  const auto members = w.members();
  const int k = static_cast<int>(members.size());
  const int groups = static_cast<int>(profile.size());
  const int source = 0;
  const int sink = 1 + k + groups;
  MaxFlow net(sink + 1);
  std::vector<std::vector<int>> edge(k, std::vector<int>(groups, -1));
  for (int j = 0; j < k; ++j) {
    net.add_edge(source, 1 + j, q);
    for (int g = 0; g < groups; ++g) {
      if (profile[g].ballot.contains(members[j])) {
        edge[j][g] = net.add_edge(1 + j, 1 + k + g, q * profile[g].count);
      }
    }
  }
  for (int g = 0; g < groups; ++g) {
    net.add_edge(1 + k + g, sink, p * profile[g].count);
  }
  if (net.run(source, sink) != static_cast<std::int64_t>(k) * q) {
    throw std::logic_error("min-max load: no distribution at the dual value");
  }

  LoadDistribution& d = out.primal;
  d.committee = w;
  d.members = members;
  d.x.assign(e.num_voters(), std::vector<Rational>(k));
  for (int g = 0; g < groups; ++g) {
    for (int j = 0; j < k; ++j) {
      if (edge[j][g] < 0) continue;
      const Rational share(net.flow(edge[j][g]), q * profile[g].count);
      for (int i : grouped.voters[g]) d.x[i][j] = share;
    }
  }

  if (!satisfies_load_constraints(e, d) || d.max_voter_load() != out.value ||
      out.dual.value() != out.value) {
    throw std::logic_error("min-max load certificate mismatch");
  }
  g_certificates.fetch_add(1, std::memory_order_relaxed);
  return out;
}

std::uint64_t load_certificates_checked() {
  return g_certificates.load(std::memory_order_relaxed);
}

void set_oracle_mode(bool enabled) { g_oracle_mode.store(enabled); }
bool oracle_mode() { return g_oracle_mode.load(); }

namespace {

struct PrNetwork {
  MaxFlow flow;
  std::vector<std::vector<int>> edge;  // [group][member position]
  std::int64_t value = 0;
};

PrNetwork solve_pr(std::span<const BallotGroup> profile, int n, Committee w) {
  const auto members = w.members();
  const int k = static_cast<int>(members.size());
  const int groups = static_cast<int>(profile.size());
  const int source = 0;
  const int sink = 1 + groups + k;
  PrNetwork net{MaxFlow(sink + 1), {}, 0};
  net.edge.assign(groups, std::vector<int>(k, -1));
  for (int g = 0; g < groups; ++g) {
    net.flow.add_edge(source, 1 + g, profile[g].count);
    for (int j = 0; j < k; ++j) {
      if (profile[g].ballot.contains(members[j])) {
        net.edge[g][j] =
            net.flow.add_edge(1 + g, 1 + groups + j, profile[g].count);
      }
    }
  }
  for (int j = 0; j < k; ++j) net.flow.add_edge(1 + groups + j, sink, n / k);
  net.value = net.flow.run(source, sink);
  return net;
}

}  // namespace

bool pr_feasible(std::span<const BallotGroup> profile, int n, Committee w) {
  const int k = w.size();
  if (k == 0 || n % k != 0) {
    throw std::invalid_argument("perfect representation needs k | n");
  }
  return solve_pr(profile, n, w).value == n;
}

std::optional<std::vector<int>> pr_assignment(const Election& e, Committee w) {
  if (w.size() != e.k()) throw std::invalid_argument("committee size != k");
  const int n = e.num_voters();
  if (n % e.k() != 0) {
    throw std::invalid_argument("perfect representation needs k | n");
  }
  const auto grouped = group_voters(e);
  PrNetwork net = solve_pr(grouped.profile, n, w);
  if (net.value != n) return std::nullopt;
  const auto members = w.members();
  std::vector<int> assign(n, -1);
  for (std::size_t g = 0; g < grouped.profile.size(); ++g) {
    std::size_t next = 0;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (net.edge[g][j] < 0) continue;
      for (std::int64_t f = net.flow.flow(net.edge[g][j]); f > 0; --f) {
        assign[grouped.voters[g][next++]] = members[j];
      }
    }
  }
  return assign;
}

}  // namespace amw
