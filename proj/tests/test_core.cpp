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

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <set>

#include "amw/abme.hpp"
#include "amw/election.hpp"
#include "amw/outcome.hpp"
#include "amw/rational.hpp"
#include "doctest.h"

using namespace amw;
using boost::multiprecision::cpp_int;

namespace {

// Independent fraction arithmetic on boost big integers.
struct Frac {
  cpp_int num;
  cpp_int den;
};

Frac normalize(cpp_int n, cpp_int d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const cpp_int g = gcd(n < 0 ? cpp_int(-n) : n, d);
  if (g != 0) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

std::string frac_str(const Frac& f) {
  if (f.den == 1) return f.num.str();
  return f.num.str() + "/" + f.den.str();
}

Election make(const std::vector<std::string>& names,
              const std::vector<std::vector<int>>& ballots, int k) {
  std::vector<CandidateSet> bs;
  for (const auto& b : ballots) {
    CandidateSet s;
    for (int c : b) s = s.with(c);
    bs.push_back(s);
  }
  return Election(names, bs, k);
}

}  // namespace

TEST_CASE("rational results agree with boost big-integer fractions") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<long> big(-1'000'000'000'000L, 1'000'000'000'000L);
  std::uniform_int_distribution<long> pos(1, 1'000'000'000'000L);
  for (int i = 0; i < 1000; ++i) {
    const long a = big(rng), b = pos(rng), c = big(rng), d = pos(rng);
    const Rational x(a, b), y(c, d);
    const cpp_int A(a), B(b), C(c), D(d);
    CHECK((x + y).str() == frac_str(normalize(A * D + C * B, B * D)));
    CHECK((x - y).str() == frac_str(normalize(A * D - C * B, B * D)));
    CHECK((x * y).str() == frac_str(normalize(A * C, B * D)));
    if (c != 0) CHECK((x / y).str() == frac_str(normalize(A * D, B * C)));
    const cpp_int lhs = A * D, rhs = C * B;
    CHECK((x < y) == (lhs < rhs));
    CHECK((x == y) == (lhs == rhs));
    // Lowest terms with a positive denominator.
    CHECK(x.denominator() > 0);
    CHECK(gcd(x.numerator(), x.denominator()) == 1);
  }
}

TEST_CASE("rational parse and render") {
  CHECK(Rational::parse("391/3").str() == "391/3");
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK(Rational::parse("-6/3").str() == "-2");
  CHECK(Rational(5, 13).str() == "5/13");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("hamming distance is a metric on subsets of five candidates") {
  for (std::uint64_t a = 0; a < 32; ++a) {
    for (std::uint64_t b = 0; b < 32; ++b) {
      const CandidateSet A(a), B(b);
      const int d = hamming(A, B);
      int direct = 0;
      for (int c = 0; c < 5; ++c) direct += A.contains(c) != B.contains(c);
      CHECK(d == direct);
      CHECK(d >= 0);
      CHECK(d == hamming(B, A));
      CHECK((d == 0) == (a == b));
      for (std::uint64_t c = 0; c < 32; ++c) {
        CHECK(hamming(A, CandidateSet(c)) <= d + hamming(B, CandidateSet(c)));
      }
    }
  }
}

TEST_CASE("enumerate_committees yields every k-subset once, in lex order") {
  // Pascal's rule as the count oracle.
  std::vector<std::vector<long long>> pascal(13, std::vector<long long>(13, 0));
  for (int m = 0; m <= 12; ++m) {
    pascal[m][0] = 1;
    for (int r = 1; r <= m; ++r) pascal[m][r] = pascal[m - 1][r - 1] + pascal[m - 1][r];
  }
  for (int m = 1; m <= 12; ++m) {
    for (int k = 1; k <= m; ++k) {
      const auto ws = enumerate_committees(m, k);
      CHECK(static_cast<long long>(ws.size()) == pascal[m][k]);
      CHECK(binomial(m, k) == pascal[m][k]);
      std::set<std::uint64_t> seen;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        CHECK(ws[i].size() == k);
        CHECK(ws[i].subset_of(CandidateSet::first(m)));
        seen.insert(ws[i].bits());
        if (i) CHECK(lex_less(ws[i - 1], ws[i]));
      }
      CHECK(seen.size() == ws.size());
    }
  }
}

TEST_CASE("lex_less orders by sorted member lists") {
  CHECK(lex_less(CandidateSet{0, 1, 2}, CandidateSet{0, 1, 3}));
  CHECK(lex_less(CandidateSet{0, 3}, CandidateSet{1, 2}));
  CHECK(!lex_less(CandidateSet{1, 2}, CandidateSet{1, 2}));
  CHECK(lex_less(CandidateSet{0}, CandidateSet{0, 1}));
}

TEST_CASE("abme parse, serialize and round trip") {
  const char* text =
      "# comment\n\ncandidates: a b c\nk: 2\n2: a b\n1: c\n1: a b\n";
  const Election e = parse_election(text);
  CHECK(e.num_candidates() == 3);
  CHECK(e.num_voters() == 4);
  CHECK(e.k() == 2);
  CHECK(e.ballot(0) == e.resolve({"a", "b"}));
  CHECK(e.ballot(1) == e.resolve({"a", "b"}));
  CHECK(e.ballot(2) == e.resolve({"c"}));
  const Election back = parse_election(serialize_election(e));
  CHECK(back == e);
  CHECK(serialize_election(back) == serialize_election(e));
  const auto profile = e.profile();
  REQUIRE(profile.size() == 2);
  CHECK(profile[0].count == 3);
  CHECK(profile[1].count == 1);
}

TEST_CASE("abme rejects malformed input with a position") {
  const std::vector<std::string> bad = {
      "k: 1\n1: a\n",                          // no candidates
      "candidates: a\n1: a\n",                 // no k
      "candidates: a\nk: 1\n",                 // no ballots
      "candidates: a b\nk: 1\n1: a a\n",       // duplicate in ballot
      "candidates: a b\nk: 1\n1: z\n",         // undeclared
      "candidates: a b\nk: 3\n1: a\n",         // k too large
      "candidates: a b\nk: 0\n1: a\n",         // k zero
      "candidates: a b\nk: 1\n0: a\n",         // zero multiplicity
      "candidates: a b\nk: 1\n1:\n",           // empty ballot
      "candidates: a a\nk: 1\n1: a\n",         // duplicate candidate
      "candidates: a\ncandidates: b\nk: 1\n1: a\n",
      "candidates: a\nk: 1\nk: 1\n1: a\n",
      "candidates: a\nk: 1\nx: a\n",
  };
  for (const auto& t : bad) {
    CAPTURE(t);
    CHECK_THROWS_AS(parse_election(t), ParseError);
  }
  try {
    parse_election("candidates: a b\nk: 1\n1: a z\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("serialize round trip on random elections") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 8);
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<CandidateSet> bs;
    for (int i = 0; i < n; ++i) {
      std::uint64_t bits = 0;
      while (!bits) bits = rng() & ((1ull << m) - 1);
      bs.push_back(CandidateSet(bits));
    }
    const Election e(numbered_names(m), bs, 1 + static_cast<int>(rng() % m));
    CHECK(parse_election(serialize_election(e)) == e);
  }
}

TEST_CASE("mutations change exactly what they should") {
  const Election e = make({"a", "b", "c", "d"}, {{0}, {1, 2}, {3}}, 2);
  const Election added = add_new_voter(e, CandidateSet{0, 3});
  CHECK(added.num_voters() == e.num_voters() + 1);
  for (int i = 0; i < e.num_voters(); ++i) CHECK(added.ballot(i) == e.ballot(i));
  CHECK(added.ballot(3) == (CandidateSet{0, 3}));
  CHECK(added.k() == e.k());
  CHECK(added.candidates() == e.candidates());

  const Election ext = extend_ballot(e, 1, CandidateSet{3});
  CHECK(ext.num_voters() == e.num_voters());
  int changed = 0;
  for (int i = 0; i < e.num_voters(); ++i) changed += ext.ballot(i) != e.ballot(i);
  CHECK(changed == 1);
  CHECK(ext.ballot(1) == (CandidateSet{1, 2, 3}));
  CHECK_THROWS(extend_ballot(e, 1, CandidateSet{1}));
  CHECK_THROWS(add_new_voter(e, CandidateSet{}));
  CHECK(e.with_k(4).k() == 4);
  CHECK_THROWS_AS(e.with_k(5), std::invalid_argument);
}

TEST_CASE("election invariants are validated") {
  CHECK_THROWS_AS(Election({"a"}, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Election({"a"}, {CandidateSet{}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Election({"a"}, {CandidateSet{1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Election({"a", "a"}, {CandidateSet{0}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Election({"a b"}, {CandidateSet{0}}, 1), std::invalid_argument);
  CHECK_NOTHROW(Election({"a"}, {CandidateSet{0}}, 1));
}

TEST_CASE("rule outcome is sorted, deduplicated and formatted") {
  const Election e = make({"a", "b", "c"}, {{0}}, 2);
  const RuleOutcome out({CandidateSet{1, 2}, CandidateSet{0, 2}, CandidateSet{0, 1},
                         CandidateSet{0, 2}});
  CHECK(out.size() == 3);
  CHECK(out.format(e) == "{{a,b},{a,c},{b,c}}");
  CHECK(out.some_superset_of(CandidateSet{0}));
  CHECK(!out.all_superset_of(CandidateSet{0}));
  CHECK(out.all_intersect(CandidateSet{0, 1}));
  CHECK(out.winners_union() == CandidateSet::first(3));
  CHECK_THROWS(RuleOutcome(std::vector<Committee>{}));
}
