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

// The .abme election text format:
//
//   # comment lines and blank lines ignored; '#' starts a comment anywhere
//   candidates: <name> <name> ...      exactly once, before any ballot line
//   k: <positive integer>              exactly once
//   <multiplicity>: <name> <name> ...  one line per ballot group, >= 1 line
//
// Multiplicity lines expand to consecutive voters in file order.

#ifndef AMW_ABME_HPP_
#define AMW_ABME_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "amw/election.hpp"

namespace amw {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Election parse_election(std::string_view text);

/// Canonical text: consecutive identical ballots are grouped, so
/// parse_election(serialize_election(e)) == e.
std::string serialize_election(const Election& e);

/// Reads and parses a file; I/O failures throw std::runtime_error.
Election read_election_file(const std::string& path);

}  // namespace amw

#endif  // AMW_ABME_HPP_
