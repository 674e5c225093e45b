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

#include "amw/abme.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace amw {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

std::vector<Token> split_tokens(std::string_view s, int first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) {
      out.push_back({s.substr(start, i - start),
                     first_column + static_cast<int>(start)});
    }
  }
  return out;
}

bool is_name(std::string_view t) {
  if (t.empty()) return false;
  for (char ch : t) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
      return false;
    }
  }
  return true;
}

std::optional<long long> parse_count(std::string_view t) {
  if (t.empty() || t.size() > 9) return std::nullopt;
  long long v = 0;
  for (char ch : t) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    v = v * 10 + (ch - '0');
  }
  return v;
}

class Parser {
 public:
  Election run(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t eol = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, eol == std::string_view::npos ? std::string_view::npos
                                             : eol - pos);
      ++line_no;
      handle_line(line, line_no);
      if (eol == std::string_view::npos) break;
      pos = eol + 1;
    }
    if (!candidates_) throw ParseError(line_no, 1, "missing 'candidates:' line");
    if (!k_) throw ParseError(line_no, 1, "missing 'k:' line");
    if (ballots_.empty()) throw ParseError(line_no, 1, "no ballot lines");
    const int m = static_cast<int>(candidates_->size());
    if (*k_ < 1 || *k_ > m) {
      throw ParseError(k_line_, k_column_,
                       "k = " + std::to_string(*k_) + " out of range 1.." +
                           std::to_string(m));
    }
    return Election(*candidates_, ballots_, static_cast<int>(*k_));
  }

 private:
  void handle_line(std::string_view line, int line_no) {
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size()) return;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, static_cast<int>(first) + 1,
                       "expected '<key>:'");
    }
    std::string_view key = line.substr(first, colon - first);
    while (!key.empty() && is_space(key.back())) key.remove_suffix(1);
    const auto values =
        split_tokens(line.substr(colon + 1), static_cast<int>(colon) + 2);
    const int key_column = static_cast<int>(first) + 1;

    if (key == "candidates") {
      if (candidates_) throw ParseError(line_no, key_column, "duplicate 'candidates:' line");
      if (values.empty()) throw ParseError(line_no, static_cast<int>(colon) + 1, "no candidates");
      if (values.size() > static_cast<std::size_t>(kMaxCandidates)) {
        throw ParseError(line_no, values[kMaxCandidates].column,
                         "more than 64 candidates");
      }
      std::vector<std::string> names;
      for (const auto& t : values) {
        if (!is_name(t.text)) {
          throw ParseError(line_no, t.column,
                           "invalid candidate name '" + std::string(t.text) + "'");
        }
        for (const auto& n : names) {
          if (n == t.text) {
            throw ParseError(line_no, t.column,
                             "duplicate candidate '" + std::string(t.text) + "'");
          }
        }
        names.emplace_back(t.text);
      }
      candidates_ = std::move(names);
      return;
    }
    if (key == "k") {
      if (k_) throw ParseError(line_no, key_column, "duplicate 'k:' line");
      if (values.size() != 1) {
        throw ParseError(line_no, static_cast<int>(colon) + 1,
                         "'k:' takes exactly one integer");
      }
      const auto v = parse_count(values[0].text);
      if (!v) throw ParseError(line_no, values[0].column, "k must be a non-negative integer");
      k_ = *v;
      k_line_ = line_no;
      k_column_ = values[0].column;
      return;
    }

    const auto mult = parse_count(key);
    if (!mult) {
      throw ParseError(line_no, key_column,
                       "unknown key '" + std::string(key) + "'");
    }
    if (*mult == 0) throw ParseError(line_no, key_column, "zero multiplicity");
    if (!candidates_) {
      throw ParseError(line_no, key_column,
                       "ballot line before 'candidates:' line");
    }
    if (values.empty()) {
      throw ParseError(line_no, static_cast<int>(colon) + 1, "empty ballot");
    }
    CandidateSet ballot;
    for (const auto& t : values) {
      int idx = -1;
      for (std::size_t c = 0; c < candidates_->size(); ++c) {
        if ((*candidates_)[c] == t.text) idx = static_cast<int>(c);
      }
      if (idx < 0) {
        throw ParseError(line_no, t.column,
                         "unknown candidate '" + std::string(t.text) + "'");
      }
      if (ballot.contains(idx)) {
        throw ParseError(line_no, t.column,
                         "candidate '" + std::string(t.text) +
                             "' repeated in ballot");
      }
      ballot = ballot.with(idx);
    }
    ballots_.insert(ballots_.end(), static_cast<std::size_t>(*mult), ballot);
  }

  std::optional<std::vector<std::string>> candidates_;
  std::optional<long long> k_;
  int k_line_ = 0;
  int k_column_ = 0;
  std::vector<CandidateSet> ballots_;
};

}  // namespace

Election parse_election(std::string_view text) { return Parser().run(text); }

std::string serialize_election(const Election& e) {
  std::ostringstream out;
  out << "candidates:";
  for (const auto& n : e.candidates()) out << ' ' << n;
  out << "\nk: " << e.k() << '\n';
  const auto ballots = e.ballots();
  std::size_t i = 0;
  while (i < ballots.size()) {
    std::size_t j = i;
    while (j < ballots.size() && ballots[j] == ballots[i]) ++j;
    out << (j - i) << ':';
    for (int c : ballots[i]) out << ' ' << e.name(c);
    out << '\n';
    i = j;
  }
  return out.str();
}

Election read_election_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_election(buf.str());
}

}  // namespace amw
