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

// amw: approval-based multiwinner elections from the command line.
//
// Exit codes: 0 success or axiom holds, 1 violation found, 2 usage error,
// 3 input or validation error.

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amw/abme.hpp"
#include "amw/fixtures.hpp"
#include "amw/monotonicity.hpp"
#include "amw/representation.hpp"
#include "amw/rules.hpp"
#include "amw/search.hpp"
#include "amw/solvers.hpp"
#include "report.hpp"

namespace {

using amw::report::Json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kInput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  int jobs = 1;
  bool oracle = false;
  std::string ties = "put";
  std::string election;
  std::string rule;
};

Options opts;

constexpr const char* kDataHeader =
    "# Copyright 2026 The Authors.\n"
    "# SPDX-License-Identifier: Apache-2.0\n";

bool json() { return opts.format == "json"; }
amw::Exec exec() { return opts.jobs > 1 ? amw::Exec::parallel : amw::Exec::serial; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

amw::Election load_election() {
  if (opts.election.empty()) throw UsageError("an election file is required");
  return amw::read_election_file(opts.election);
}

amw::Rule load_rule() {
  if (opts.rule.empty()) throw UsageError("--rule is required");
  amw::TieMode ties;
  try {
    ties = amw::parse_tie_mode(opts.ties);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  try {
    return amw::parse_rule(opts.rule, ties);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_compute(int k_override) {
  const amw::Rule rule = load_rule();
  amw::Election e = load_election();
  if (k_override > 0) e = e.with_k(k_override);
  const amw::ScoredOutcome out = amw::evaluate(rule, e, exec());
  if (json()) {
    emit(amw::report::compute_json(rule, e, out));
  } else {
    std::cout << amw::report::compute_text(rule, e, out);
  }
  return kOk;
}

amw::RepresentationVerdict check_one(const amw::Election& e, amw::Committee w,
                                     amw::Axiom axiom) {
  switch (axiom) {
    case amw::Axiom::jr:
      return amw::check_jr(e, w);
    case amw::Axiom::pjr:
      return amw::check_pjr(e, w);
    case amw::Axiom::ejr:
      return amw::check_ejr(e, w);
    case amw::Axiom::pr:
      return amw::provides_pr(e, w);
  }
  throw std::logic_error("unreachable");
}

int cmd_axioms(const std::string& committee, const std::string& checks) {
  const amw::Election e = load_election();
  std::vector<amw::Axiom> axioms;
  for (const auto& name : split(checks, ',')) {
    try {
      axioms.push_back(amw::parse_axiom(name));
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }
  std::vector<amw::Committee> committees;
  if (!committee.empty()) {
    const amw::Committee w = e.resolve(split(committee, ','));
    if (w.size() != e.k()) {
      throw std::invalid_argument("committee size differs from k = " +
                                  std::to_string(e.k()));
    }
    committees.push_back(w);
  } else if (!opts.rule.empty()) {
    const auto out = amw::evaluate(load_rule(), e, exec());
    committees = out.outcome.committees();
  } else {
    throw UsageError("give --committee or --rule");
  }
  const bool pr_defined = e.num_voters() % e.k() == 0;
  bool violated = false;
  Json results = Json::array();
  for (amw::Committee w : committees) {
    if (!json()) std::cout << e.format(w) << "\n";
    Json entry;
    entry["committee"] = amw::report::committee_json(e, w);
    Json verdicts = Json::array();
    for (amw::Axiom a : axioms) {
      if (a == amw::Axiom::pr && !pr_defined) {
        if (!json()) std::cout << "  pr: not applicable (k does not divide n)\n";
        verdicts.push_back({{"axiom", "pr"}, {"holds", nullptr}});
        continue;
      }
      const auto v = check_one(e, w, a);
      violated |= !v.holds;
      if (json()) {
        verdicts.push_back(amw::report::representation_json(e, v));
      } else {
        std::cout << "  " << amw::report::representation_text(e, v) << "\n";
      }
    }
    entry["verdicts"] = verdicts;
    results.push_back(entry);
  }
  if (json()) emit({{"results", results}});
  return violated ? kViolation : kOk;
}

int cmd_monotonic(const std::string& axiom, int k_from, int k_to, bool minimize) {
  const amw::Rule rule = load_rule();
  const amw::Election e = load_election();
  amw::AxiomSpec spec;
  try {
    spec = amw::parse_axiom_spec(axiom);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  amw::MonotonicityVerdict v;
  if (spec.axiom == amw::MonotonicityAxiom::committee && (k_from || k_to)) {
    v = amw::check_committee_monotonicity(rule, e, k_from ? k_from : 1,
                                          k_to ? k_to : e.num_candidates(), exec());
  } else {
    v = amw::check_axiom(rule, e, spec, exec());
  }
  if (v.witness && minimize && spec.axiom != amw::MonotonicityAxiom::committee) {
    v.witness = amw::shrink(rule, *v.witness);
  }
  if (json()) {
    emit(amw::report::monotonicity_json(rule, spec, v));
  } else {
    std::cout << amw::report::monotonicity_text(spec, v);
  }
  return v.holds ? kOk : kViolation;
}

struct HuntArgs {
  std::string axiom;
  int min_voters = 1;
  int max_voters = 6;
  int min_candidates = 1;
  int max_candidates = 4;
  std::string k = "1..3";
  std::string p = "1/2";
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;
  std::uint64_t max_instances = 0;
  double time_limit = 0;
  bool exhaustive = false;
  bool no_dedup = false;
  bool minimize = false;
};

int cmd_hunt(const HuntArgs& a) {
  amw::HuntConfig config{load_rule(), a.axiom, {}, a.exhaustive, a.budget,
                         a.max_instances, std::nullopt, exec()};
  if (a.time_limit > 0) config.time_limit_seconds = a.time_limit;
  auto& b = config.bounds;
  b.n_min = a.min_voters;
  b.n_max = a.max_voters;
  b.m_min = a.min_candidates;
  b.m_max = a.max_candidates;
  const auto dots = a.k.find("..");
  try {
    b.k_min = std::stoi(a.k.substr(0, dots));
    b.k_max = dots == std::string::npos ? b.k_min : std::stoi(a.k.substr(dots + 2));
    b.p = amw::Rational::parse(a.p);
    b.seed = a.seed;
    b.dedup = !a.no_dedup;
    b.validate();
    if (a.axiom != "jr" && a.axiom != "pjr" && a.axiom != "ejr" && a.axiom != "pr") {
      amw::parse_axiom_spec(a.axiom);
    }
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
  amw::HuntResult r = amw::hunt(config);
  if (r.witness && a.minimize) r.witness = amw::shrink(config.rule, *r.witness);
  if (json()) {
    emit(amw::report::hunt_json(config, r));
  } else {
    std::cout << amw::report::hunt_text(config, r);
  }
  return r.found() ? kViolation : kOk;
}

int cmd_reproduce(const std::string& id, bool verbose) {
  std::vector<amw::FixtureReport> reports;
  if (id == "all") {
    reports = amw::run_all_fixtures(exec());
  } else {
    try {
      reports.push_back(amw::run_fixture(id));
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.passed();
  if (json()) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(amw::report::fixture_json(r));
    emit({{"passed", passed}, {"total", reports.size()}, {"fixtures", list}});
  } else {
    for (const auto& r : reports) std::cout << amw::report::fixture_text(r, verbose);
    std::cout << passed << "/" << reports.size() << " fixtures pass\n";
  }
  return passed == reports.size() ? kOk : kViolation;
}

int cmd_list(const std::string& export_dir) {
  const auto fixtures = amw::list_fixtures();
  if (!export_dir.empty()) {
    std::filesystem::create_directories(export_dir);
    for (const auto& f : fixtures) {
      for (const auto& [name, text] : f.elections) {
        const auto path = std::filesystem::path(export_dir) / (f.id + "-" + name + ".abme");
        std::ofstream(path) << kDataHeader << text;
      }
    }
  }
  if (json()) {
    Json list = Json::array();
    for (const auto& f : fixtures) {
      Json names = Json::array();
      for (const auto& e : f.elections) names.push_back(e.first);
      list.push_back({{"id", f.id},
                      {"citation", f.citation},
                      {"covers", f.covers},
                      {"elections", names}});
    }
    emit(list);
  } else {
    for (const auto& f : fixtures) std::cout << f.id << "  " << f.citation << "\n";
  }
  return kOk;
}

int default_jobs() {
  if (const char* env = std::getenv("AMW_JOBS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approval-based multiwinner elections: rules, axioms, counterexamples"};
  app.require_subcommand(1);
  opts.jobs = default_jobs();
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs,-j", opts.jobs, "Worker threads (default: AMW_JOBS)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--oracle-mode", opts.oracle, "Use brute-force solver paths");

  auto add_rule = [](CLI::App* sub) {
    sub->add_option("--rule,-r", opts.rule, "Rule id")->required();
    sub->add_option("--ties", opts.ties, "Sequential tie handling: put or lex");
  };
  auto add_election = [](CLI::App* sub) {
    sub->add_option("--election,-e,election", opts.election, ".abme file");
  };

  int k_override = 0;
  auto* compute = app.add_subcommand("compute", "All winning committees of a rule");
  add_rule(compute);
  add_election(compute);
  compute->add_option("--k", k_override, "Override the committee size");

  std::string committee;
  std::string checks = "jr,pjr,ejr,pr";
  auto* axioms = app.add_subcommand("axioms", "JR, PJR, EJR and PR verdicts");
  add_election(axioms);
  axioms->add_option("--committee,-c", committee, "Comma-separated committee");
  axioms->add_option("--rule,-r", opts.rule, "Check every winner of this rule");
  axioms->add_option("--ties", opts.ties, "Sequential tie handling");
  axioms->add_option("--check", checks, "Comma-separated axioms");

  std::string mono_axiom;
  int k_from = 0;
  int k_to = 0;
  bool minimize = false;
  auto* monotonic = app.add_subcommand("monotonic", "Check a monotonicity axiom");
  add_rule(monotonic);
  add_election(monotonic);
  monotonic->add_option("--axiom,-a", mono_axiom, "Axiom id")->required();
  monotonic->add_option("--k-from", k_from, "Committee monotonicity lower size");
  monotonic->add_option("--k-to", k_to, "Committee monotonicity upper size");
  monotonic->add_flag("--shrink", minimize, "Minimize the witness");

  HuntArgs h;
  auto* hunt = app.add_subcommand("hunt", "Search small elections for violations");
  add_rule(hunt);
  hunt->add_option("--axiom,-a", h.axiom, "Monotonicity axiom or jr/pjr/ejr/pr")
      ->required();
  hunt->add_option("--min-voters", h.min_voters);
  hunt->add_option("--max-voters", h.max_voters);
  hunt->add_option("--min-candidates", h.min_candidates);
  hunt->add_option("--max-candidates", h.max_candidates);
  hunt->add_option("--k", h.k, "Committee size or range lo..hi");
  hunt->add_option("--p", h.p, "Approval probability for random elections");
  hunt->add_option("--seed", h.seed);
  hunt->add_option("--budget", h.budget, "Maximum mutated-election evaluations");
  hunt->add_option("--max-instances", h.max_instances);
  hunt->add_option("--time-limit", h.time_limit, "Seconds; makes runs nondeterministic");
  hunt->add_flag("--exhaustive", h.exhaustive, "Enumerate instead of sampling");
  hunt->add_flag("--no-dedup", h.no_dedup, "Keep isomorphic elections");
  hunt->add_flag("--shrink", h.minimize, "Minimize the witness");

  std::string fixture = "all";
  bool verbose = false;
  auto* reproduce = app.add_subcommand("reproduce", "Run the reference fixtures");
  reproduce->add_option("--fixture,-f", fixture, "Fixture id or all");
  reproduce->add_flag("--verbose,-v", verbose, "Show passing expectations");

  std::string export_dir;
  auto* list = app.add_subcommand("list-fixtures", "List the reference fixtures");
  list->add_option("--export", export_dir, "Write fixture elections to a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  omp_set_num_threads(opts.jobs);
  amw::set_oracle_mode(opts.oracle);
  try {
    if (*compute) return cmd_compute(k_override);
    if (*axioms) return cmd_axioms(committee, checks);
    if (*monotonic) return cmd_monotonic(mono_axiom, k_from, k_to, minimize);
    if (*hunt) return cmd_hunt(h);
    if (*reproduce) return cmd_reproduce(fixture, verbose);
    if (*list) return cmd_list(export_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const amw::ParseError& e) {
    std::cerr << opts.election << ": " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}
