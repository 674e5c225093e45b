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

// Counting rules: a committee scores sum_i f(|A_i & W|, |A_i|).

#ifndef AMW_COUNTING_HPP_
#define AMW_COUNTING_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "amw/election.hpp"
#include "amw/outcome.hpp"
#include "amw/rational.hpp"

namespace amw {

/// f(x, y): score of a voter with x approved winners out of y approvals.
struct CountingFunction {
  std::string name;
  std::function<Rational(int x, int y)> evaluate;
};

CountingFunction counting_av();   // x
CountingFunction counting_sav();  // x / y
CountingFunction counting_cc();   // [x > 0]
CountingFunction counting_pav();  // H(x)

/// Built-in function by name ("av", "sav", "cc", "pav"), or nullopt.
std::optional<CountingFunction> find_counting_function(const std::string& name);

struct GridCell {
  int x = 0;
  int y = 0;
};

/// A pair of grid cells where an inequality f(first) >= f(second) fails.
struct CellPair {
  GridCell first;
  GridCell second;
};

/// Grid checks over 0 <= x <= min(y, x_max), 1 <= y <= y_max.
struct CountingProperties {
  std::optional<CellPair> monotone_in_x;      // f(x+1, y) >= f(x, y)
  std::optional<CellPair> nonincreasing_in_y;  // f(x, y) >= f(x, y'), y <= y'
  std::optional<CellPair> shift_dominant;      // f(x+z, y+z) >= f(x, y), z >= 1

  bool is_counting_function() const { return !monotone_in_x; }
  /// Both hypotheses of the weak SMWOPI sufficient condition hold.
  bool weak_smwopi_hypotheses() const {
    return !nonincreasing_in_y && !shift_dominant;
  }
};

CountingProperties counting_function_properties(const CountingFunction& f,
                                                int x_max, int y_max);

/// argmax of s_f over all committees. Throws std::domain_error if f is not
/// monotone in x on the grid x <= k, y <= |C|.
ScoredOutcome counting_rule(const CountingFunction& f, const Election& e,
                            Exec exec = Exec::serial);

}  // namespace amw

#endif  // AMW_COUNTING_HPP_
