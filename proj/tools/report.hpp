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

// Text and JSON renderings of library results.

#ifndef AMW_TOOLS_REPORT_HPP_
#define AMW_TOOLS_REPORT_HPP_

#include <string>

#include "json.hpp"

#include "amw/fixtures.hpp"
#include "amw/monotonicity.hpp"
#include "amw/representation.hpp"
#include "amw/rules.hpp"
#include "amw/search.hpp"

namespace amw::report {

using Json = nlohmann::ordered_json;

/// "score", "misrep", "maxdist", "maxload", or "" for sequential rules.
std::string objective_label(const Rule& rule);

Json committee_json(const Election& e, CandidateSet s);
Json outcome_json(const Election& e, const RuleOutcome& outcome);

Json compute_json(const Rule& rule, const Election& e, const ScoredOutcome& out);
std::string compute_text(const Rule& rule, const Election& e,
                         const ScoredOutcome& out);

Json representation_json(const Election& e, const RepresentationVerdict& v);
std::string representation_text(const Election& e,
                                const RepresentationVerdict& v);

/// Embeds both elections as .abme text.
Json witness_json(const Rule& rule, const MonotonicityWitness& w);
std::string witness_text(const MonotonicityWitness& w);
/// Inverse of witness_json; outcomes are taken from the JSON as recorded.
MonotonicityWitness witness_from_json(const Json& j);

Json monotonicity_json(const Rule& rule, const AxiomSpec& spec,
                       const MonotonicityVerdict& v);
std::string monotonicity_text(const AxiomSpec& spec,
                              const MonotonicityVerdict& v);

/// Omits wall-clock time so identical runs render identically.
Json hunt_json(const HuntConfig& config, const HuntResult& r);
std::string hunt_text(const HuntConfig& config, const HuntResult& r);

Json fixture_json(const FixtureReport& r);
std::string fixture_text(const FixtureReport& r, bool verbose);

}  // namespace amw::report

#endif  // AMW_TOOLS_REPORT_HPP_
