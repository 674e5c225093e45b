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

#include "amw/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "amw/committee_kernel.hpp"

namespace amw {

CountingFunction counting_av() {
  return {"av", [](int x, int) { return Rational(x); }};
}

CountingFunction counting_sav() {
  return {"sav", [](int x, int y) { return Rational(x, y); }};
}

CountingFunction counting_cc() {
  return {"cc", [](int x, int) { return Rational(x > 0 ? 1 : 0); }};
}

CountingFunction counting_pav() {
  return {"pav", [](int x, int) { return harmonic(x); }};
}

std::optional<CountingFunction> find_counting_function(const std::string& name) {
  if (name == "av") return counting_av();
  if (name == "sav") return counting_sav();
  if (name == "cc") return counting_cc();
  if (name == "pav") return counting_pav();
  return std::nullopt;
}

CountingProperties counting_function_properties(const CountingFunction& f,
                                                int x_max, int y_max) {
  if (x_max < 1 || y_max < 1) throw std::invalid_argument("grid bounds < 1");
  auto in_grid = [&](int x, int y) {
    return y >= 1 && y <= y_max && x >= 0 && x <= std::min(x_max, y);
  };
  CountingProperties out;
  for (int y = 1; y <= y_max && !out.monotone_in_x; ++y) {
    for (int x = 0; x + 1 <= std::min(x_max, y); ++x) {
      if (f.evaluate(x + 1, y) < f.evaluate(x, y)) {
        out.monotone_in_x = CellPair{{x + 1, y}, {x, y}};
        break;
      }
    }
  }
  for (int x = 0; x <= x_max && !out.nonincreasing_in_y; ++x) {
    for (int y = std::max(x, 1); y <= y_max && !out.nonincreasing_in_y; ++y) {
      for (int y2 = y + 1; y2 <= y_max; ++y2) {
        if (f.evaluate(x, y) < f.evaluate(x, y2)) {
          out.nonincreasing_in_y = CellPair{{x, y}, {x, y2}};
          break;
        }
      }
    }
  }
  for (int x = 0; x <= x_max && !out.shift_dominant; ++x) {
    for (int y = std::max(x, 1); y <= y_max && !out.shift_dominant; ++y) {
      for (int z = 1; in_grid(x + z, y + z); ++z) {
        if (f.evaluate(x + z, y + z) < f.evaluate(x, y)) {
          out.shift_dominant = CellPair{{x + z, y + z}, {x, y}};
          break;
        }
      }
    }
  }
  return out;
}

ScoredOutcome counting_rule(const CountingFunction& f, const Election& e,
                            Exec exec) {
  const int k = e.k();
  const int m = e.num_candidates();
  // table[y][x] for 0 <= x <= min(k, y).
  std::vector<std::vector<Rational>> table(m + 1);
  mpz_class denom = 1;
  for (int y = 1; y <= m; ++y) {
    for (int x = 0; x <= std::min(k, y); ++x) {
      table[y].push_back(f.evaluate(x, y));
      if (x > 0 && table[y][x] < table[y][x - 1]) {
        throw std::domain_error("counting function '" + f.name +
                                "' is not monotone in x");
      }
      mpz_class d = table[y][x].denominator();
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
    }
  }

  const auto profile = e.profile();
  const auto committees = enumerate_committees(e);

  // Integer fast path when every scaled total fits comfortably in 64 bits.
  bool fits = denom.fits_slong_p();
  std::vector<std::vector<std::int64_t>> scaled(m + 1);
  const mpz_class limit =
      mpz_class(std::numeric_limits<std::int64_t>::max() / 4) /
      std::max(1, e.num_voters());
  for (int y = 1; y <= m && fits; ++y) {
    for (const auto& v : table[y]) {
      mpz_class s = v.numerator() * (denom / v.denominator());
      if (abs(s) > limit) {
        fits = false;
        break;
      }
      scaled[y].push_back(s.get_si());
    }
  }

  if (fits) {
    auto score = [&](Committee w) -> std::optional<std::int64_t> {
      std::int64_t s = 0;
      for (const auto& g : profile) {
        s += g.count * scaled[g.ballot.size()][(g.ballot & w).size()];
      }
      return s;
    };
    auto best = optimal_committees<std::int64_t>(committees, score,
                                                 Sense::maximize, exec);
    return {RuleOutcome(std::move(best->committees)),
            Rational(mpz_class(static_cast<long>(best->value)), denom)};
  }
  auto score = [&](Committee w) -> std::optional<Rational> {
    Rational s;
    for (const auto& g : profile) {
      s += Rational(static_cast<long>(g.count)) *
           table[g.ballot.size()][(g.ballot & w).size()];
    }
    return s;
  };
  auto best =
      optimal_committees<Rational>(committees, score, Sense::maximize, exec);
  return {RuleOutcome(std::move(best->committees)), best->value};
}

}  // namespace amw
