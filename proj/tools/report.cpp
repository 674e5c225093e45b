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

#include "report.hpp"

#include <sstream>

#include "amw/abme.hpp"

namespace amw::report {

namespace {

std::string voters_text(const std::vector<int>& voters) {
  std::string out;
  for (int v : voters) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

CandidateSet committee_from_json(const Election& e, const Json& j) {
  return e.resolve(j.get<std::vector<std::string>>());
}

RuleOutcome outcome_from_json(const Election& e, const Json& j) {
  std::vector<Committee> ws;
  for (const auto& c : j) ws.push_back(committee_from_json(e, c));
  return RuleOutcome(std::move(ws));
}

}  // namespace

std::string objective_label(const Rule& rule) {
  switch (rule.kind) {
    case RuleKind::cc:
    case RuleKind::cc_prties:
    case RuleKind::monroe:
      return "misrep";
    case RuleKind::mav:
      return "maxdist";
    case RuleKind::max_phragmen:
      return "maxload";
    case RuleKind::seqpav:
    case RuleKind::seq_phragmen:
    case RuleKind::av_not_weak_smwopi:
      return "";
    default:
      return "score";
  }
}

Json committee_json(const Election& e, CandidateSet s) {
  Json out = Json::array();
  for (int c : s) out.push_back(e.name(c));
  return out;
}

Json outcome_json(const Election& e, const RuleOutcome& outcome) {
  Json out = Json::array();
  for (Committee w : outcome) out.push_back(committee_json(e, w));
  return out;
}

Json compute_json(const Rule& rule, const Election& e, const ScoredOutcome& out) {
  Json j;
  j["rule"] = rule.id();
  if (rule.is_sequential()) j["ties"] = rule.ties == TieMode::put ? "put" : "lex";
  j["k"] = e.k();
  j["committees"] = outcome_json(e, out.outcome);
  if (out.objective) {
    j["objective"] = {{"name", objective_label(rule)}, {"value", out.objective->str()}};
  } else {
    j["objective"] = nullptr;
  }
  return j;
}

std::string compute_text(const Rule& rule, const Election& e,
                         const ScoredOutcome& out) {
  std::ostringstream os;
  for (Committee w : out.outcome) {
    os << e.format(w);
    if (out.objective) os << "  " << objective_label(rule) << "=" << out.objective->str();
    os << "\n";
  }
  return os.str();
}

Json representation_json(const Election& e, const RepresentationVerdict& v) {
  Json j;
  j["axiom"] = axiom_name(v.axiom);
  j["holds"] = v.holds;
  if (v.witness) {
    j["witness"] = {{"level", v.witness->level},
                    {"voters", v.witness->voters},
                    {"common", committee_json(e, v.witness->common)}};
  }
  if (v.pr_assignment) {
    Json a = Json::array();
    for (int c : *v.pr_assignment) a.push_back(e.name(c));
    j["assignment"] = a;
  }
  if (v.offending) j["offending"] = committee_json(e, *v.offending);
  return j;
}

std::string representation_text(const Election& e,
                                const RepresentationVerdict& v) {
  std::ostringstream os;
  os << axiom_name(v.axiom) << ": " << (v.holds ? "holds" : "fails");
  if (v.witness) {
    os << "  level=" << v.witness->level << " voters=" << voters_text(v.witness->voters)
       << " common=" << e.format(v.witness->common);
  }
  if (v.pr_assignment) {
    os << "  assignment=";
    for (std::size_t i = 0; i < v.pr_assignment->size(); ++i) {
      os << (i ? "," : "") << e.name((*v.pr_assignment)[i]);
    }
  }
  if (v.offending) os << "  committee=" << e.format(*v.offending);
  return os.str();
}

Json witness_json(const Rule& rule, const MonotonicityWitness& w) {
  Json j;
  j["rule"] = rule.id();
  j["axiom"] = axiom_spec_name(w.spec);
  j["clause"] = clause_name(w.clause);
  j["g"] = committee_json(w.original, w.g);
  j["voter"] = w.voter ? Json(*w.voter) : Json(nullptr);
  j["before"] = outcome_json(w.original, w.before);
  j["after"] = outcome_json(w.mutated, w.after);
  j["election"] = serialize_election(w.original);
  j["mutated"] = serialize_election(w.mutated);
  return j;
}

std::string witness_text(const MonotonicityWitness& w) {
  std::ostringstream os;
  const bool committee = w.spec.axiom == MonotonicityAxiom::committee;
  os << "clause: " << clause_name(w.clause) << "\n";
  os << (committee ? "committee: " : "G: ") << w.original.format(w.g) << "\n";
  if (w.voter) os << "voter: " << *w.voter << "\n";
  os << "before (k=" << w.original.k() << "): " << w.before.format(w.original) << "\n";
  os << "after (k=" << w.mutated.k() << "): " << w.after.format(w.mutated) << "\n";
  os << "--- election\n" << serialize_election(w.original);
  if (!committee) os << "--- mutated\n" << serialize_election(w.mutated);
  return os.str();
}

MonotonicityWitness witness_from_json(const Json& j) {
  MonotonicityWitness w{parse_axiom_spec(j.at("axiom").get<std::string>()),
                        {},
                        std::nullopt,
                        Clause::some_winner,
                        parse_election(j.at("election").get<std::string>()),
                        RuleOutcome({CandidateSet{}}),
                        RuleOutcome({CandidateSet{}}),
                        parse_election(j.at("mutated").get<std::string>())};
  w.g = committee_from_json(w.original, j.at("g"));
  if (!j.at("voter").is_null()) w.voter = j.at("voter").get<int>();
  const std::string clause = j.at("clause").get<std::string>();
  for (Clause c : {Clause::some_winner, Clause::all_winners, Clause::grow,
                   Clause::shrink}) {
    if (clause_name(c) == clause) w.clause = c;
  }
  w.before = outcome_from_json(w.original, j.at("before"));
  w.after = outcome_from_json(w.mutated, j.at("after"));
  return w;
}

Json monotonicity_json(const Rule& rule, const AxiomSpec& spec,
                       const MonotonicityVerdict& v) {
  Json j;
  j["rule"] = rule.id();
  j["axiom"] = axiom_spec_name(spec);
  j["holds"] = v.holds;
  j["mutations_checked"] = v.mutations_checked;
  j["witness"] = v.witness ? witness_json(rule, *v.witness) : Json(nullptr);
  return j;
}

std::string monotonicity_text(const AxiomSpec& spec,
                              const MonotonicityVerdict& v) {
  std::ostringstream os;
  os << axiom_spec_name(spec) << ": " << (v.holds ? "holds" : "violated")
     << " (" << v.mutations_checked << " mutations checked)\n";
  if (v.witness) os << witness_text(*v.witness);
  return os.str();
}

Json hunt_json(const HuntConfig& config, const HuntResult& r) {
  Json j;
  j["rule"] = config.rule.id();
  j["axiom"] = config.axiom;
  j["mode"] = config.exhaustive ? "exhaustive" : "random";
  j["seed"] = config.bounds.seed;
  j["found"] = r.found();
  j["instances_checked"] = r.instances_checked;
  j["evaluations"] = r.evaluations;
  j["exhausted"] = r.exhausted;
  j["stopped_by_budget"] = r.stopped_by_budget;
  j["stopped_by_time"] = r.stopped_by_time;
  if (r.found()) j["instance_index"] = r.instance_index;
  if (r.witness) j["witness"] = witness_json(config.rule, *r.witness);
  if (r.representation) {
    const auto& f = *r.representation;
    Json w = representation_json(f.election, f.verdict);
    w["committee"] = committee_json(f.election, f.committee);
    w["election"] = serialize_election(f.election);
    j["representation"] = w;
  }
  return j;
}

std::string hunt_text(const HuntConfig& config, const HuntResult& r) {
  std::ostringstream os;
  os << config.rule.id() << " " << config.axiom << ": ";
  if (r.found()) {
    os << "violation at instance " << r.instance_index;
  } else if (r.exhausted) {
    os << "no violation, enumeration exhausted";
  } else if (r.stopped_by_budget) {
    os << "no violation, budget spent";
  } else {
    os << "no violation, time limit reached";
  }
  os << " (" << r.instances_checked << " instances, " << r.evaluations
     << " evaluations)\n";
  if (r.witness) os << witness_text(*r.witness);
  if (r.representation) {
    const auto& f = *r.representation;
    os << "committee: " << f.election.format(f.committee) << "\n"
       << representation_text(f.election, f.verdict) << "\n--- election\n"
       << serialize_election(f.election);
  }
  return os.str();
}

Json fixture_json(const FixtureReport& r) {
  Json j;
  j["id"] = r.id;
  j["citation"] = r.citation;
  j["passed"] = r.passed();
  Json results = Json::array();
  for (const auto& x : r.results) {
    results.push_back({{"what", x.what},
                       {"expected", x.expected},
                       {"actual", x.actual},
                       {"passed", x.passed}});
  }
  j["expectations"] = results;
  return j;
}

std::string fixture_text(const FixtureReport& r, bool verbose) {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& x : r.results) ok += x.passed;
  os << r.id << "  " << (r.passed() ? "PASS" : "FAIL") << "  " << ok << "/"
     << r.results.size() << "  " << r.citation << "\n";
  for (const auto& x : r.results) {
    if (x.passed && !verbose) continue;
    os << "    " << (x.passed ? "ok   " : "FAIL ") << x.what << ": expected "
       << x.expected;
    if (!x.passed) os << ", got " << x.actual;
    os << "\n";
  }
  return os.str();
}

}  // namespace amw::report
