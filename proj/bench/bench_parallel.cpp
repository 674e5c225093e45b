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

// Serial against OpenMP kernels. Arg 0 is serial, 1 is parallel.

#include <benchmark/benchmark.h>

#include "amw/abme.hpp"
#include "amw/monotonicity.hpp"
#include "amw/representation.hpp"
#include "amw/rules.hpp"
#include "amw/search.hpp"

namespace {

amw::Exec mode(const benchmark::State& state) {
  return state.range(0) ? amw::Exec::parallel : amw::Exec::serial;
}

const amw::Election& f1() {
  static const amw::Election e = amw::read_election_file(AMW_DATA_DIR "/F1-base.abme");
  return e;
}

amw::Election wide() {
  amw::GenerationBounds b;
  b.n_min = b.n_max = 40;
  b.m_min = b.m_max = 14;
  b.k_min = b.k_max = 5;
  b.seed = 3;
  return amw::random_election(b, 0);
}

void BM_PavWinners(benchmark::State& state) {
  const amw::Election e = wide();
  const amw::Rule r = amw::parse_rule("pav");
  for (auto _ : state) benchmark::DoNotOptimize(amw::evaluate(r, e, mode(state)));
}
BENCHMARK(BM_PavWinners)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MonroeWinners(benchmark::State& state) {
  amw::GenerationBounds b;
  b.n_min = b.n_max = 12;
  b.m_min = b.m_max = 10;
  b.k_min = b.k_max = 3;
  b.seed = 4;
  const amw::Election e = amw::random_election(b, 0);
  const amw::Rule r = amw::parse_rule("monroe");
  for (auto _ : state) benchmark::DoNotOptimize(amw::evaluate(r, e, mode(state)));
}
BENCHMARK(BM_MonroeWinners)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PavSupportScan(benchmark::State& state) {
  const amw::Rule r = amw::parse_rule("pav");
  for (auto _ : state) {
    benchmark::DoNotOptimize(amw::check_smwopi_joint(r, f1(), mode(state)));
  }
}
BENCHMARK(BM_PavSupportScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveHunt(benchmark::State& state) {
  amw::HuntConfig c{amw::parse_rule("cc"), "weak-smwopi", {}, true, 1'000'000'000};
  c.bounds.n_max = 4;
  c.bounds.m_max = 4;
  c.bounds.k_max = 3;
  c.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(amw::hunt(c));
}
BENCHMARK(BM_ExhaustiveHunt)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
